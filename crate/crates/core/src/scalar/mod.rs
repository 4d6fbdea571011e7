//! Exact scalars: ℚ and the cyclotomic fields ℚ(ζ_k).

mod field;
pub(crate) mod qpoly;
pub mod rational;

pub use field::{
    element_of_order, field_arith, roots_of_unity_order, FieldDescriptor, FieldElement, FieldKind,
    FieldOp, MAX_CONDUCTOR,
};
pub use rational::Rational;

use crate::poly::Poly;

/// The k-th cyclotomic polynomial Φ_k over ℚ. Panics if `k == 0`.
///
/// ```
/// use orext::scalar::cyclotomic_polynomial;
/// assert_eq!(cyclotomic_polynomial(6).to_string(), "x^2-x+1");
/// ```
pub fn cyclotomic_polynomial(k: u32) -> Poly {
    assert!(k >= 1, "cyclotomic polynomials are indexed from 1");
    Poly::from_rationals(&FieldDescriptor::rational(), qpoly::cyclotomic(k))
}
