//! Bare dense polynomials over ℚ (ascending coefficient vectors).
//!
//! Only the cyclotomic moduli and the field inverse live here; everything
//! user-facing goes through [`crate::Poly`].

use num_traits::{One, Zero};

use super::rational::Rational;

pub(crate) fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

/// Long division; `b` must be nonzero.
pub(crate) fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b.last().unwrap().recip();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &c * bj;
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Inverse of `a` modulo the irreducible `modulus`, via extended Euclid.
pub(crate) fn inverse_mod(a: &[Rational], modulus: &[Rational]) -> Option<Vec<Rational>> {
    let (mut r0, mut r1) = (modulus.to_vec(), divrem(a, modulus).1);
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is the gcd; a unit iff constant
    if r0.len() != 1 {
        return None;
    }
    let scale = r0[0].recip();
    let inv: Vec<Rational> = s0.into_iter().map(|c| c * &scale).collect();
    Some(divrem(&inv, modulus).1)
}

/// Φ_k as an ascending coefficient vector, by dividing x^k − 1 by Φ_d for
/// every proper divisor d of k.
pub(crate) fn cyclotomic(k: u32) -> Vec<Rational> {
    assert!(k >= 1);
    let divisors: Vec<u32> = (1..=k).filter(|d| k % d == 0).collect();
    let mut table: Vec<(u32, Vec<Rational>)> = Vec::with_capacity(divisors.len());
    for &m in &divisors {
        let mut num = vec![Rational::zero(); m as usize + 1];
        num[0] = -Rational::one();
        num[m as usize] = Rational::one();
        for (d, phi) in &table {
            if m % d == 0 {
                let (q, r) = divrem(&num, phi);
                debug_assert!(r.is_empty());
                num = q;
            }
        }
        table.push((m, num));
    }
    table.pop().unwrap().1
}
