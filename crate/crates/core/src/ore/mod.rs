//! The algebra Λ(f) = K[x][y; f·d/dx] = K⟨x, y | yx − xy = f⟩.
//!
//! Elements are kept in the normal form Σ c_i(x) y^i with coefficients on
//! the left. Multiplication uses the single commutation rule
//! y·p(x) = p(x)·y + f·p′(x).

mod automorphism;
mod group;
mod spectrum;

pub use automorphism::{is_automorphism, normality_twist, omega_f, NormalityTwist, OreAutomorphism};
pub use group::{aut_group_description, AutGroupDescription, GeneratorFamily};
pub use spectrum::{evaluate_character, spectrum, ClosedPoints, HeightOnePrime, SpectrumDescriptor};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{needs_parens, Poly};
use crate::scalar::{FieldDescriptor, FieldElement};
use crate::skew::{skew_mul, trim};

/// The defining data of Λ(f). Cheap to clone; elements hold a handle.
#[derive(Clone)]
pub struct OreAlgebra(Arc<Inner>);

struct Inner {
    f: Poly,
    derivation_scale: Poly,
}

impl OreAlgebra {
    pub fn new(f: Poly) -> Self {
        OreAlgebra(Arc::new(Inner {
            derivation_scale: f.clone(),
            f,
        }))
    }

    pub fn f(&self) -> &Poly {
        &self.0.f
    }

    pub fn field(&self) -> &FieldDescriptor {
        self.0.f.field()
    }

    /// deg f, with the zero polynomial counted as degree 0.
    pub fn degree(&self) -> usize {
        self.0.f.degree().unwrap_or(0)
    }

    /// δ(p) = f·p′.
    pub fn delta(&self, p: &Poly) -> Poly {
        &self.0.derivation_scale * &p.derivative(1)
    }

    pub fn element(&self, terms: Vec<Poly>) -> OreElement {
        OreElement {
            algebra: self.clone(),
            terms: trim(terms),
        }
    }

    pub fn zero(&self) -> OreElement {
        self.element(Vec::new())
    }

    pub fn one(&self) -> OreElement {
        self.from_poly(Poly::one(self.field()))
    }

    pub fn scalar(&self, c: &FieldElement) -> OreElement {
        self.from_poly(Poly::constant(c))
    }

    pub fn from_poly(&self, p: Poly) -> OreElement {
        self.element(vec![p])
    }

    pub fn x(&self) -> OreElement {
        self.from_poly(Poly::x(self.field()))
    }

    pub fn y(&self) -> OreElement {
        self.element(vec![Poly::zero(self.field()), Poly::one(self.field())])
    }

    /// `p(x)·y^i`
    pub fn monomial(&self, p: Poly, i: usize) -> OreElement {
        let mut terms = vec![Poly::zero(self.field()); i];
        terms.push(p);
        self.element(terms)
    }
}

impl PartialEq for OreAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.f == other.0.f
    }
}

impl Eq for OreAlgebra {}

impl fmt::Debug for OreAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ({})", self.0.f)
    }
}

/// Σ c_i(x) y^i in Λ(f).
#[derive(Clone, PartialEq, Eq)]
pub struct OreElement {
    algebra: OreAlgebra,
    terms: Vec<Poly>,
}

impl OreElement {
    pub fn algebra(&self) -> &OreAlgebra {
        &self.algebra
    }

    /// Left coefficients indexed by y-degree.
    pub fn terms(&self) -> &[Poly] {
        &self.terms
    }

    pub fn coeff(&self, i: usize) -> Poly {
        self.terms
            .get(i)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.algebra.field()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.terms.len().checked_sub(1)
    }

    /// The x-polynomial, when the element has no y.
    pub fn as_poly(&self) -> Option<Poly> {
        (self.terms.len() <= 1).then(|| self.coeff(0))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let zero = Poly::zero(self.algebra.field());
        let terms = skew_mul(&self.terms, &other.terms, &zero, |p| self.algebra.delta(p));
        Ok(self.algebra.element(terms))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.terms.len().max(other.terms.len());
        Ok(self
            .algebra
            .element((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(self.algebra.one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        self.algebra
            .element(self.terms.iter().map(|p| p.scale(c)).collect())
    }
}

/// ab − ba.
pub fn commutator(a: &OreElement, b: &OreElement) -> Result<OreElement> {
    Ok(&a.checked_mul(b)? - &b.checked_mul(a)?)
}

impl Add for &OreElement {
    type Output = OreElement;
    fn add(self, rhs: &OreElement) -> OreElement {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &OreElement {
    type Output = OreElement;
    fn sub(self, rhs: &OreElement) -> OreElement {
        self + &(-rhs)
    }
}

impl Mul for &OreElement {
    type Output = OreElement;
    fn mul(self, rhs: &OreElement) -> OreElement {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &OreElement {
    type Output = OreElement;
    fn neg(self) -> OreElement {
        self.algebra
            .element(self.terms.iter().map(|p| -p).collect())
    }
}

/// Writes `Σ c_i·var^i` in descending degree, parenthesizing compound
/// coefficients.
pub(crate) fn write_normal_form<C: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: &[C],
    var: &str,
    is_zero: impl Fn(&C) -> bool,
    is_one: impl Fn(&C) -> bool,
    is_minus_one: impl Fn(&C) -> bool,
    compound: impl Fn(&C) -> bool,
) -> fmt::Result {
    let mut first = true;
    for (i, c) in terms.iter().enumerate().rev() {
        if is_zero(c) {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            i => format!("{var}^{i}"),
        };
        let text = if mono.is_empty() {
            c.to_string()
        } else if is_one(c) {
            mono
        } else if is_minus_one(c) {
            format!("-{mono}")
        } else if compound(c) {
            format!("({c})*{mono}")
        } else {
            format!("{c}*{mono}")
        };
        if !first && !text.starts_with('-') {
            f.write_str("+")?;
        }
        f.write_str(&text)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for OreElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_normal_form(
            f,
            &self.terms,
            "y",
            Poly::is_zero,
            Poly::is_one,
            |p| (-p).is_one(),
            needs_parens,
        )
    }
}

impl fmt::Debug for OreElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {:?}", self.algebra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(f: &[i64]) -> OreAlgebra {
        OreAlgebra::new(Poly::from_ints(f))
    }

    #[test]
    fn commuting_y_past_x() {
        let a = alg(&[0, 0, 1]);
        let (x, y) = (a.x(), a.y());
        // y·x = x·y + x²
        let expected = &(&x * &y) + &a.from_poly(Poly::from_ints(&[0, 0, 1]));
        assert_eq!(&y * &x, expected);
        assert_eq!((&y * &x).to_string(), "x*y+x^2");
    }

    #[test]
    fn y_times_x_squared() {
        // y·x² = x²y + 2f·x
        let f = Poly::from_ints(&[1, 0, 3, 1]);
        let a = OreAlgebra::new(f.clone());
        let x2 = a.from_poly(Poly::from_ints(&[0, 0, 1]));
        let two_fx = a.from_poly(&f * &Poly::from_ints(&[0, 2]));
        assert_eq!(&a.y() * &x2, &(&x2 * &a.y()) + &two_fx);
    }

    #[test]
    fn y_squared_times_x_with_f_equal_x() {
        let a = alg(&[0, 1]);
        let lhs = &a.y().pow(2) * &a.x();
        // x·y² + 2x·y + x
        let expected = a.element(vec![
            Poly::from_ints(&[0, 1]),
            Poly::from_ints(&[0, 2]),
            Poly::from_ints(&[0, 1]),
        ]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn commutators() {
        let f = Poly::from_ints(&[0, -1, 0, 1]);
        let a = OreAlgebra::new(f.clone());
        assert_eq!(commutator(&a.y(), &a.x()).unwrap(), a.from_poly(f.clone()));
        let x2 = a.from_poly(Poly::from_ints(&[0, 0, 1]));
        assert!(commutator(&a.x(), &x2).unwrap().is_zero());
        let p = Poly::from_ints(&[2, -1, 0, 5]);
        assert_eq!(
            commutator(&a.y(), &a.from_poly(p.clone())).unwrap(),
            a.from_poly(&f * &p.derivative(1))
        );
        let other = alg(&[0, 1]);
        assert_eq!(commutator(&a.y(), &other.y()), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn printing() {
        let a = alg(&[0, 0, 1]);
        let u = a.element(vec![
            Poly::from_ints(&[0, 0, -1]),
            Poly::from_ints(&[-1]),
            Poly::from_ints(&[1, 0, 1]),
        ]);
        assert_eq!(u.to_string(), "(x^2+1)*y^2-y-x^2");
        assert_eq!(a.zero().to_string(), "0");
    }
}
