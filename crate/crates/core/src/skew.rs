//! Normal-form multiplication in a differential-operator (Ore) extension
//! C[y; δ] with left coefficients: elements are Σ c_i y^i and y·c = c·y + δ(c).

use crate::poly::{Poly, RationalFunction};

pub(crate) trait SkewCoeff: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl SkewCoeff for Poly {
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl SkewCoeff for RationalFunction {
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

pub(crate) fn trim<C: SkewCoeff>(mut v: Vec<C>) -> Vec<C> {
    while v.last().is_some_and(SkewCoeff::is_zero) {
        v.pop();
    }
    v
}

/// Product of two normal forms. `y^i · b` is built by commuting one y at a
/// time past the coefficients of the previous power.
pub(crate) fn skew_mul<C: SkewCoeff>(a: &[C], b: &[C], zero: &C, delta: impl Fn(&C) -> C) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![zero.clone(); a.len() + b.len() - 1];
    let mut current: Vec<C> = b.to_vec();
    for (i, ai) in a.iter().enumerate() {
        if !ai.is_zero() {
            for (k, c) in current.iter().enumerate() {
                if !c.is_zero() {
                    out[k] = out[k].add(&ai.mul(c));
                }
            }
        }
        if i + 1 < a.len() {
            // y · Σ c_k y^k = Σ c_k y^{k+1} + δ(c_k) y^k
            let mut next = vec![zero.clone(); current.len() + 1];
            for (k, c) in current.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                next[k + 1] = next[k + 1].add(c);
                next[k] = next[k].add(&delta(c));
            }
            current = next;
        }
    }
    trim(out)
}
