//! B₁ = ℚ(x)[∂; d/dx], the localization of the Weyl algebra at ℚ[x]∖{0},
//! its Möbius automorphisms, and the embedding Λ(f) → B₁, y ↦ f∂.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ore::{write_normal_form, OreAlgebra, OreAutomorphism, OreElement};
use crate::poly::{needs_parens, Poly, RationalFunction};
use crate::scalar::{FieldDescriptor, Rational};
use crate::skew::{skew_mul, trim};

fn q() -> FieldDescriptor {
    FieldDescriptor::rational()
}

/// Σ r_i(x) ∂^i with left rational-function coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct B1Operator {
    terms: Vec<RationalFunction>,
}

impl B1Operator {
    /// Coefficients must be over ℚ.
    pub fn new(terms: Vec<RationalFunction>) -> Result<Self> {
        if let Some(r) = terms.iter().find(|r| !r.field().is_rational()) {
            return Err(Error::UnsupportedField(format!(
                "B1 is only available over Q, not {}",
                r.field()
            )));
        }
        Ok(B1Operator { terms: trim(terms) })
    }

    fn from_terms(terms: Vec<RationalFunction>) -> Self {
        B1Operator { terms: trim(terms) }
    }

    pub fn zero() -> Self {
        B1Operator { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_function(RationalFunction::one(&q()))
    }

    pub fn x() -> Self {
        Self::from_function(RationalFunction::x(&q()))
    }

    /// ∂
    pub fn d() -> Self {
        Self::from_terms(vec![RationalFunction::zero(&q()), RationalFunction::one(&q())])
    }

    pub fn from_function(r: RationalFunction) -> Self {
        Self::from_terms(vec![r])
    }

    pub fn terms(&self) -> &[RationalFunction] {
        &self.terms
    }

    pub fn coeff(&self, i: usize) -> RationalFunction {
        self.terms
            .get(i)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(&q()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn order(&self) -> Option<usize> {
        self.terms.len().checked_sub(1)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }
}

/// Product in normal form via ∂·r = r·∂ + r′.
pub fn b1_mul(a: &B1Operator, b: &B1Operator) -> B1Operator {
    let zero = RationalFunction::zero(&q());
    B1Operator::from_terms(skew_mul(&a.terms, &b.terms, &zero, RationalFunction::derivative))
}

pub fn b1_commutator(a: &B1Operator, b: &B1Operator) -> B1Operator {
    &b1_mul(a, b) - &b1_mul(b, a)
}

impl Add for &B1Operator {
    type Output = B1Operator;
    fn add(self, rhs: &B1Operator) -> B1Operator {
        let n = self.terms.len().max(rhs.terms.len());
        B1Operator::from_terms((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &B1Operator {
    type Output = B1Operator;
    fn sub(self, rhs: &B1Operator) -> B1Operator {
        self + &(-rhs)
    }
}

impl Neg for &B1Operator {
    type Output = B1Operator;
    fn neg(self) -> B1Operator {
        B1Operator::from_terms(self.terms.iter().map(|r| -r).collect())
    }
}

impl Mul for &B1Operator {
    type Output = B1Operator;
    fn mul(self, rhs: &B1Operator) -> B1Operator {
        b1_mul(self, rhs)
    }
}

impl fmt::Display for B1Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_normal_form(
            f,
            &self.terms,
            "D",
            RationalFunction::is_zero,
            RationalFunction::is_one,
            |r| (-r).is_one(),
            |r| !r.denominator().is_one() || needs_parens(r.numerator()),
        )
    }
}

impl fmt::Debug for B1Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// [[a, b], [c, d]] acting as x ↦ (ax + b)/(cx + d), stored up to scale with
/// the first nonzero entry equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MobiusMatrix {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl MobiusMatrix {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(Error::SingularMatrix);
        }
        let lead = [&a, &b, &c, &d]
            .into_iter()
            .find(|v| !v.is_zero())
            .expect("nonsingular")
            .clone();
        Ok(MobiusMatrix {
            a: a / &lead,
            b: b / &lead,
            c: c / &lead,
            d: d / &lead,
        })
    }

    pub fn identity() -> Self {
        Self::affine(Rational::one(), Rational::zero()).expect("nonzero scale")
    }

    /// x ↦ λx + μ.
    pub fn affine(lambda: Rational, mu: Rational) -> Result<Self> {
        Self::new(lambda, mu, Rational::zero(), Rational::one())
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn determinant(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// Matrix product self·other; as maps this is self ∘ other.
    pub fn product(&self, other: &MobiusMatrix) -> MobiusMatrix {
        Self::new(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
        .expect("product of nonsingular matrices")
    }

    pub fn inverse(&self) -> MobiusMatrix {
        Self::new(self.d.clone(), -&self.b, -&self.c, self.a.clone()).expect("nonsingular")
    }

    /// σ_M(x) = (ax + b)/(cx + d).
    pub fn as_function(&self) -> RationalFunction {
        let lin = |s: &Rational, t: &Rational| Poly::from_rationals(&q(), [t.clone(), s.clone()]);
        RationalFunction::new(lin(&self.a, &self.b), lin(&self.c, &self.d)).expect("nonsingular")
    }

    /// (dσ_M(x)/dx)^{−1} = (cx + d)²/(ad − bc).
    pub fn inverse_jacobian(&self) -> RationalFunction {
        let den = Poly::from_rationals(&q(), [self.d.clone(), self.c.clone()]);
        let scale = q().from_rational(self.determinant().recip());
        RationalFunction::from_poly(den.pow(2).scale(&scale))
    }
}

/// x ↦ σ_M(x), ∂ ↦ (dσ_M(x)/dx)^{−1}∂ + q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct B1Automorphism {
    m: MobiusMatrix,
    q: RationalFunction,
}

impl B1Automorphism {
    pub fn new(m: MobiusMatrix, q: RationalFunction) -> Result<Self> {
        if !q.field().is_rational() {
            return Err(Error::UnsupportedField("B1 is only available over Q".into()));
        }
        Ok(B1Automorphism { m, q })
    }

    pub fn identity() -> Self {
        B1Automorphism {
            m: MobiusMatrix::identity(),
            q: RationalFunction::zero(&q()),
        }
    }

    pub fn matrix(&self) -> &MobiusMatrix {
        &self.m
    }

    pub fn q(&self) -> &RationalFunction {
        &self.q
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity() && self.q.is_zero()
    }

    pub fn image_x(&self) -> B1Operator {
        B1Operator::from_function(self.m.as_function())
    }

    pub fn image_d(&self) -> B1Operator {
        B1Operator::from_terms(vec![self.q.clone(), self.m.inverse_jacobian()])
    }

    /// Fails when a coefficient has a pole at σ_M(x), which only happens
    /// for constant-in-x Möbius images; these are excluded by det ≠ 0.
    pub fn apply(&self, u: &B1Operator) -> Result<B1Operator> {
        let sub = self.m.as_function();
        let image_d = self.image_d();
        let mut power = B1Operator::one();
        let mut out = B1Operator::zero();
        for (i, r) in u.terms.iter().enumerate() {
            if i > 0 {
                power = &power * &image_d;
            }
            if !r.is_zero() {
                out = &out + &(&B1Operator::from_function(r.compose(&sub)?) * &power);
            }
        }
        Ok(out)
    }

    /// σ∘τ, acting as u ↦ σ(τ(u)).
    pub fn compose(&self, tau: &B1Automorphism) -> Result<B1Automorphism> {
        let sub = self.m.as_function();
        let h_tau = tau.m.inverse_jacobian().compose(&sub)?;
        let q = &(&h_tau * &self.q) + &tau.q.compose(&sub)?;
        Ok(B1Automorphism {
            m: tau.m.product(&self.m),
            q,
        })
    }

    pub fn invert(&self) -> Result<B1Automorphism> {
        let m = self.m.inverse();
        let back = m.as_function();
        let q = -&(&m.inverse_jacobian() * &self.q.compose(&back)?);
        Ok(B1Automorphism { m, q })
    }

    /// The extension of σ = (λ, μ, p) ∈ Aut Λ(f) along y ↦ f∂:
    /// ∂ ↦ λ^{−1}∂ + p/(λ^d f).
    pub fn from_ore(sigma: &OreAutomorphism) -> Result<B1Automorphism> {
        let algebra = sigma.algebra();
        require_rational(algebra)?;
        let f = algebra.f();
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let rational = |c: &crate::scalar::FieldElement| c.as_rational().expect("rational field").clone();
        let m = MobiusMatrix::affine(rational(sigma.lambda()), rational(sigma.mu()))?;
        let den = f.scale(&sigma.lambda().pow(algebra.degree() as u64));
        let q = RationalFunction::new(sigma.p().clone(), den)?;
        Ok(B1Automorphism { m, q })
    }
}

fn require_rational(algebra: &OreAlgebra) -> Result<()> {
    if algebra.field().is_rational() {
        Ok(())
    } else {
        Err(Error::UnsupportedField(format!(
            "B1 is only available over Q, not {}",
            algebra.field()
        )))
    }
}

/// x ↦ x, y ↦ f∂.
pub fn embed_lambda(algebra: &OreAlgebra, u: &OreElement) -> Result<B1Operator> {
    require_rational(algebra)?;
    if u.algebra() != algebra {
        return Err(Error::AlgebraMismatch);
    }
    let fd = B1Operator::from_terms(vec![
        RationalFunction::zero(&q()),
        RationalFunction::from_poly(algebra.f().clone()),
    ]);
    let mut power = B1Operator::one();
    let mut out = B1Operator::zero();
    for (i, c) in u.terms().iter().enumerate() {
        if i > 0 {
            power = &power * &fd;
        }
        if !c.is_zero() {
            out = &out + &(&B1Operator::from_function(RationalFunction::from_poly(c.clone())) * &power);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::int;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    fn mobius(a: i64, b: i64, c: i64, d: i64) -> MobiusMatrix {
        MobiusMatrix::new(int(a), int(b), int(c), int(d)).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let (x, d) = (B1Operator::x(), B1Operator::d());
        assert_eq!((&d * &x).to_string(), "x*D+1");
        let inv_x = B1Operator::from_function(rf(&[1], &[0, 1]));
        assert_eq!((&d * &inv_x).to_string(), "(1/x)*D-1/x^2");
        let xd = &x * &d;
        assert_eq!((&xd * &xd).to_string(), "x^2*D^2+x*D");
        assert_eq!(b1_commutator(&d, &x), B1Operator::one());
    }

    #[test]
    fn matrix_normalization() {
        let m = MobiusMatrix::new(int(2), int(4), int(0), int(2)).unwrap();
        assert_eq!(m, mobius(1, 2, 0, 1));
        assert_eq!(MobiusMatrix::new(int(1), int(2), int(2), int(4)), Err(Error::SingularMatrix));
        let flip = mobius(0, 1, 1, 0);
        assert!(flip.product(&flip).is_identity());
    }

    #[test]
    fn apply_examples() {
        let u = &B1Operator::x() * &B1Operator::d();
        assert_eq!(B1Automorphism::identity().apply(&u).unwrap(), u);
        let flip = B1Automorphism::new(mobius(0, 1, 1, 0), RationalFunction::zero(&q())).unwrap();
        let sd = flip.apply(&B1Operator::d()).unwrap();
        assert_eq!(sd.to_string(), "-x^2*D");
        let sx = flip.apply(&B1Operator::x()).unwrap();
        assert_eq!(b1_commutator(&sd, &sx), B1Operator::one());
        let shift = B1Automorphism::new(mobius(1, 1, 0, 1), RationalFunction::zero(&q())).unwrap();
        assert_eq!(shift.apply(&B1Operator::d()).unwrap(), B1Operator::d());
    }

    #[test]
    fn compose_and_invert() {
        let s = B1Automorphism::new(mobius(2, 1, 1, 1), rf(&[0, 1], &[1, 0, 1])).unwrap();
        let t = B1Automorphism::new(mobius(0, 1, 1, 0), rf(&[3, 0, 1], &[1])).unwrap();
        let st = s.compose(&t).unwrap();
        for g in [B1Operator::x(), B1Operator::d()] {
            assert_eq!(st.apply(&g).unwrap(), s.apply(&t.apply(&g).unwrap()).unwrap());
        }
        assert!(s.compose(&s.invert().unwrap()).unwrap().is_identity());
        assert!(s.invert().unwrap().compose(&s).unwrap().is_identity());
    }

    #[test]
    fn affine_composition_law() {
        let s = B1Automorphism::new(MobiusMatrix::affine(int(2), int(3)).unwrap(), RationalFunction::zero(&q())).unwrap();
        let t = B1Automorphism::new(MobiusMatrix::affine(int(5), int(-1)).unwrap(), RationalFunction::zero(&q())).unwrap();
        // σ_{λ,μ}σ_{λ′,μ′} = σ_{λλ′, λ′μ+μ′}
        assert_eq!(s.compose(&t).unwrap().matrix(), &MobiusMatrix::affine(int(10), int(14)).unwrap());
    }

    #[test]
    fn embedding() {
        let a = OreAlgebra::new(Poly::from_ints(&[0, 0, 1]));
        assert_eq!(embed_lambda(&a, &a.y()).unwrap().to_string(), "x^2*D");
        let fd = embed_lambda(&a, &a.y()).unwrap();
        let x = embed_lambda(&a, &a.x()).unwrap();
        assert_eq!(b1_commutator(&fd, &x), B1Operator::from_function(rf(&[0, 0, 1], &[1])));
        let u = &a.y() * &a.x();
        assert_eq!(embed_lambda(&a, &u).unwrap(), &fd * &x);
    }

    #[test]
    fn ore_extension_commutes_with_embedding() {
        let a = OreAlgebra::new(Poly::from_ints(&[0, -1, 0, 1]));
        let s = OreAutomorphism::new(&a, q().from_i64(-1), q().from_i64(0), Poly::from_ints(&[1, 1])).unwrap();
        let ext = B1Automorphism::from_ore(&s).unwrap();
        for g in [a.x(), a.y()] {
            let lhs = embed_lambda(&a, &s.apply(&g).unwrap()).unwrap();
            let rhs = ext.apply(&embed_lambda(&a, &g).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
