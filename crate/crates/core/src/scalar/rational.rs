//! Helpers around [`num_rational::BigRational`], which is the crate's ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact rational m-th roots of `r` in ℚ, ascending.
///
/// Works on numerator and denominator separately; returns both signs when
/// `m` is even and `r > 0`.
pub fn rational_roots(r: &Rational, m: u32) -> Vec<Rational> {
    assert!(m >= 1);
    if r.is_zero() {
        return vec![Rational::zero()];
    }
    if m == 1 {
        return vec![r.clone()];
    }
    let even = m % 2 == 0;
    if even && r.is_negative() {
        return Vec::new();
    }
    let num = r.numer().abs();
    let den = r.denom().clone();
    let (Some(p), Some(q)) = (exact_nth_root(&num, m), exact_nth_root(&den, m)) else {
        return Vec::new();
    };
    let root = Rational::new(p, q);
    if even {
        vec![-root.clone(), root]
    } else if r.is_negative() {
        vec![-root]
    } else {
        vec![root]
    }
}

fn exact_nth_root(n: &BigInt, m: u32) -> Option<BigInt> {
    let root = n.nth_root(m);
    (num_traits::pow(root.clone(), m as usize) == *n).then_some(root)
}

/// Positive divisors of `|n|` by trial division; `n` must be nonzero.
pub fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero());
    if let Ok(small_n) = u64::try_from(&n) {
        return positive_divisors_u64(small_n)
            .into_iter()
            .map(BigInt::from)
            .collect();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn positive_divisors_u64(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            if n / d != d {
                large.push(n / d);
            }
            small.push(d);
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Number of bits in the largest numerator/denominator, a cheap height measure.
pub fn height_bits(r: &Rational) -> u64 {
    r.numer().bits().max(r.denom().bits())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_squares_and_cubes() {
        assert_eq!(rational_roots(&rat(4, 9), 2), vec![rat(-2, 3), rat(2, 3)]);
        assert_eq!(rational_roots(&rat(-8, 27), 3), vec![rat(-2, 3)]);
        assert!(rational_roots(&rat(-1, 1), 2).is_empty());
        assert!(rational_roots(&rat(2, 1), 2).is_empty());
        assert_eq!(rational_roots(&rat(5, 7), 1), vec![rat(5, 7)]);
    }

    #[test]
    fn divisors() {
        let ds: Vec<i64> = positive_divisors(&BigInt::from(-12))
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect();
        assert_eq!(ds, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(positive_divisors(&BigInt::from(1)), vec![BigInt::one()]);
    }
}
