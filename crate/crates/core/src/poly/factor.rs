//! Factorization over ℚ: rational roots, squarefree decomposition, and a
//! Kronecker interpolation search for the remaining irreducible factors.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{monic_gcd, Poly};
use crate::error::{Error, Result};
use crate::scalar::rational::{common_denominator, positive_divisors};
use crate::scalar::{FieldDescriptor, Rational};

/// Degree cap for [`kronecker_factor`].
pub const MAX_FACTOR_DEGREE: usize = 8;
/// Cap on the integer-cleared coefficient magnitudes for [`kronecker_factor`].
pub const MAX_FACTOR_COEFFICIENT: i64 = 1_000_000;
/// Number of interpolation candidates tried before giving up.
const SEARCH_BUDGET: u64 = 2_000_000;

/// Rational roots with multiplicities plus the root-free cofactor:
/// `p = cofactor · Π (x − r)^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearFactors {
    pub roots: Vec<(Rational, u32)>,
    pub cofactor: Poly,
}

/// `p = content · Π factor^multiplicity`, factors monic irreducible over ℚ and
/// sorted by degree, then coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    pub content: Rational,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        let q = FieldDescriptor::rational();
        self.factors.iter().fold(
            Poly::constant(&q.from_rational(self.content.clone())),
            |acc, (p, m)| &acc * &p.pow(*m),
        )
    }
}

fn require_rational(p: &Poly) -> Result<Vec<Rational>> {
    if !p.field().is_rational() {
        return Err(Error::UnsupportedField(format!(
            "factorization is only available over Q, not {}",
            p.field()
        )));
    }
    Ok(p.rational_coeffs().expect("rational field"))
}

/// Integer coefficients of a primitive multiple of `coeffs`, positive leading term.
fn primitive_integer(coeffs: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(coeffs);
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() {
        for c in &mut ints {
            *c /= &content;
        }
    }
    if ints.last().is_some_and(Signed::is_negative) {
        for c in &mut ints {
            *c = -&*c;
        }
    }
    ints
}

fn linear(root: &Rational) -> Poly {
    Poly::from_rationals(&FieldDescriptor::rational(), [-root.clone(), Rational::one()])
}

/// All rational roots of a nonzero polynomial over ℚ, from divisor
/// candidates of the cleared trailing and leading coefficients.
pub fn rational_linear_factors(p: &Poly) -> Result<LinearFactors> {
    let coeffs = require_rational(p)?;
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = FieldDescriptor::rational();
    let mut roots = Vec::new();
    let zero_mult = coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut work = p.shift_down(zero_mult);
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult as u32));
    }
    if work.degree().unwrap_or(0) >= 1 {
        let ints = primitive_integer(&work.rational_coeffs().unwrap());
        let mut candidates = BTreeSet::new();
        let nums = positive_divisors(&ints[0]);
        let dens = positive_divisors(ints.last().unwrap());
        for n in &nums {
            for d in &dens {
                let r = Rational::new(n.clone(), d.clone());
                candidates.insert(-r.clone());
                candidates.insert(r);
            }
        }
        for r in candidates {
            let mut mult = 0;
            while work.degree().unwrap_or(0) >= 1 && work.eval(&q.from_rational(r.clone())).is_zero() {
                work = work.exact_div(&linear(&r))?;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
    }
    roots.sort();
    Ok(LinearFactors {
        roots,
        cofactor: work,
    })
}

/// Yun's squarefree decomposition of a monic polynomial: pairs (a_i, i) with
/// p = Π a_i^i, each a_i monic squarefree and pairwise coprime.
pub(crate) fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, u32)> {
    let p = p.monic();
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let dp = p.derivative(1);
    let b = monic_gcd(&p, &dp);
    let mut c = p.exact_div(&b).expect("gcd divides");
    let mut d = &dp.exact_div(&b).expect("gcd divides") - &c.derivative(1);
    let mut i = 1;
    while !c.is_one() {
        let a = monic_gcd(&c, &d);
        c = c.exact_div(&a).expect("gcd divides");
        d = &d.exact_div(&a).expect("gcd divides") - &c.derivative(1);
        if !a.is_one() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Complete factorization over ℚ at desk scale: degree ≤ 8 and integer-cleared
/// coefficients of magnitude ≤ 10⁶. Exceeding either cap is an error.
pub fn kronecker_factor(p: &Poly) -> Result<Factorization> {
    let coeffs = require_rational(p)?;
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if deg > MAX_FACTOR_DEGREE {
        return Err(Error::Capacity(format!(
            "degree {deg} exceeds the factorization cap of {MAX_FACTOR_DEGREE}"
        )));
    }
    let bound = BigInt::from(MAX_FACTOR_COEFFICIENT);
    if primitive_integer(&coeffs).iter().any(|c| c.abs() > bound) {
        return Err(Error::Capacity(format!(
            "coefficients exceed the factorization cap of {MAX_FACTOR_COEFFICIENT}"
        )));
    }
    let content = coeffs.last().unwrap().clone();
    let mut budget = SEARCH_BUDGET;
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(p) {
        let LinearFactors { roots, cofactor } = rational_linear_factors(&part)?;
        for (r, _) in roots {
            factors.push((linear(&r), mult));
        }
        if cofactor.degree().unwrap_or(0) >= 1 {
            let ints = primitive_integer(&cofactor.rational_coeffs().unwrap());
            for h in split_rootless(ints, &mut budget)? {
                factors.push((integer_poly_to_monic(&h), mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.rational_coeffs().cmp(&b.rational_coeffs()))
    });
    Ok(Factorization { content, factors })
}

fn integer_poly_to_monic(h: &[BigInt]) -> Poly {
    let q = FieldDescriptor::rational();
    Poly::from_rationals(&q, h.iter().map(|c| Rational::from_integer(c.clone()))).monic()
}

/// Splits a primitive squarefree integer polynomial without rational roots
/// into irreducible factors.
fn split_rootless(p: Vec<BigInt>, budget: &mut u64) -> Result<Vec<Vec<BigInt>>> {
    let deg = p.len() - 1;
    // no rational roots: degrees 2 and 3 are already irreducible
    if deg <= 3 {
        return Ok(vec![p]);
    }
    for e in 2..=deg / 2 {
        if let Some(h) = find_factor(&p, e, budget)? {
            let rest = zdiv_exact(&p, &h).expect("verified factor");
            let mut out = vec![h];
            out.extend(split_rootless(rest, budget)?);
            return Ok(out);
        }
    }
    Ok(vec![p])
}

fn zeval(p: &[BigInt], at: i64) -> BigInt {
    let at = BigInt::from(at);
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * &at + c)
}

/// Exact division of integer polynomials, `None` if not divisible over ℤ.
fn zdiv_exact(p: &[BigInt], h: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rem = p.to_vec();
    let hl = h.len();
    if rem.len() < hl {
        return None;
    }
    let lead = h.last().unwrap();
    let mut quot = vec![BigInt::zero(); rem.len() - hl + 1];
    for shift in (0..quot.len()).rev() {
        let top = &rem[shift + hl - 1];
        if !top.is_multiple_of(lead) {
            return None;
        }
        let c = top / lead;
        for (j, hj) in h.iter().enumerate() {
            rem[shift + j] -= &c * hj;
        }
        quot[shift] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

/// Searches for an integer factor of degree exactly `e` whose values at e + 1
/// interpolation points divide the values of `p`.
fn find_factor(p: &[BigInt], e: usize, budget: &mut u64) -> Result<Option<Vec<BigInt>>> {
    // pick the e+1 points with the smallest |p(point)|, fewest divisors to try
    let mut points: Vec<(BigInt, i64)> = (-8..=8).map(|t| (zeval(p, t).abs(), t)).collect();
    points.sort();
    points.truncate(e + 1);
    let xs: Vec<i64> = points.iter().map(|(_, t)| *t).collect();
    let choices: Vec<Vec<BigInt>> = points
        .iter()
        .enumerate()
        .map(|(i, (v, _))| {
            let pos = positive_divisors(v);
            if i == 0 {
                // a factor and its negative are interchangeable
                pos
            } else {
                pos.iter().flat_map(|d| [d.clone(), -d]).collect()
            }
        })
        .collect();
    let lead = p.last().unwrap();
    let mut idx = vec![0usize; e + 1];
    loop {
        if *budget == 0 {
            return Err(Error::Capacity(
                "Kronecker search budget exhausted".to_string(),
            ));
        }
        *budget -= 1;
        let values: Vec<&BigInt> = idx.iter().zip(&choices).map(|(&i, c)| &c[i]).collect();
        if let Some(h) = interpolate_integer(&xs, &values) {
            if h.len() == e + 1 && lead.is_multiple_of(h.last().unwrap()) && zdiv_exact(p, &h).is_some() {
                return Ok(Some(h));
            }
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Newton interpolation; `None` unless every coefficient is an integer.
fn interpolate_integer(xs: &[i64], values: &[&BigInt]) -> Option<Vec<BigInt>> {
    let n = xs.len();
    let mut dd: Vec<Rational> = values
        .iter()
        .map(|v| Rational::from_integer((*v).clone()))
        .collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let step = Rational::from_integer(BigInt::from(xs[i] - xs[i - j]));
            dd[i] = (&dd[i] - &dd[i - 1]) / step;
        }
    }
    let mut poly = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // poly = poly * (x - xs[i]) + dd[i]
        let shift = Rational::from_integer(BigInt::from(xs[i]));
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &shift;
        }
        next[0] += &dd[i];
        poly = next;
    }
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    poly.iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}
