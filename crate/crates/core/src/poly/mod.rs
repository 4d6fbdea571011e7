//! Dense univariate polynomials over a [`FieldDescriptor`].

mod factor;
mod ratfun;

pub use factor::{kronecker_factor, rational_linear_factors, Factorization, LinearFactors};
pub use ratfun::RationalFunction;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::scalar::{FieldDescriptor, FieldElement, Rational};

/// Coefficients are stored ascending by degree with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldDescriptor,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &FieldDescriptor, mut coeffs: Vec<FieldElement>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &FieldDescriptor) -> Self {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &FieldDescriptor) -> Self {
        Poly::constant(&field.one())
    }

    pub fn constant(c: &FieldElement) -> Self {
        Poly::new(c.field(), vec![c.clone()])
    }

    pub fn x(field: &FieldDescriptor) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `c · x^degree`
    pub fn monomial(c: &FieldElement, degree: usize) -> Self {
        let mut coeffs = vec![c.field().zero(); degree + 1];
        coeffs[degree] = c.clone();
        Poly::new(c.field(), coeffs)
    }

    pub fn from_rationals(field: &FieldDescriptor, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| field.from_rational(c)).collect();
        Poly::new(field, coeffs)
    }

    /// Ascending integer coefficients over ℚ; handy in tests and examples.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        let q = FieldDescriptor::rational();
        Poly::from_rationals(&q, coeffs.iter().map(|&c| crate::scalar::rational::int(c)))
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    /// Coefficients as rationals, when every one of them lies in ℚ.
    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs
            .iter()
            .map(|c| c.as_rational().cloned())
            .collect()
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Poly::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero leading")),
            _ => self.clone(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(FieldElement::is_one)
    }

    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * at) + c)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Poly::one(&self.field);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(&self.field, coeffs)
    }

    /// Drops the lowest k coefficients (exact division by x^k when they vanish).
    pub fn shift_down(&self, k: usize) -> Self {
        Poly::new(&self.field, self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Quotient and remainder with deg(remainder) < deg(divisor).
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let Some(lc) = divisor.leading() else {
            return Err(Error::DivisionByZero);
        };
        let lc_inv = lc.inv()?;
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + dlen - 1] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = &rem[shift + j] - &(&c * dj);
            }
            quot[shift] = c;
        }
        rem.truncate(dlen - 1);
        Ok((Poly::new(&self.field, quot), Poly::new(&self.field, rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotADivisor {
                divisor: divisor.to_string(),
                dividend: self.to_string(),
            })
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.divrem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    /// The formal derivative iterated `order` times.
    pub fn derivative(&self, order: usize) -> Poly {
        let mut p = self.clone();
        for _ in 0..order {
            let coeffs = p
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect();
            p = Poly::new(&self.field, coeffs);
        }
        p
    }

    /// `p(αx + β)` by Horner over the affine argument; rejects α = 0.
    pub fn compose_affine(&self, alpha: &FieldElement, beta: &FieldElement) -> Result<Poly> {
        if alpha.is_zero() {
            return Err(Error::ZeroAffineScale);
        }
        let arg = Poly::new(&self.field, vec![beta.clone(), alpha.clone()]);
        Ok(self.compose(&arg))
    }

    /// General substitution `p(q(x))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(&self.field), |acc, c| {
            &(&acc * inner) + &Poly::constant(c)
        })
    }

    /// Re-expresses the coefficients in a larger cyclotomic field.
    pub fn embed(&self, target: &FieldDescriptor) -> Result<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.embed(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(target, coeffs))
    }

    /// Printable view using a different variable name.
    pub fn display_in<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }

    fn zip_with(&self, other: &Poly, op: impl Fn(&FieldElement, &FieldElement) -> FieldElement) -> Poly {
        assert!(self.field == other.field, "polynomial field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| op(&self.coeff(i), &other.coeff(i))).collect();
        Poly::new(&self.field, coeffs)
    }
}

/// Monic gcd by Euclid on monic remainders; `monic_gcd(0, 0)` is zero.
pub fn monic_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut r0, mut r1) = (a.monic(), b.monic());
    while !r1.is_zero() {
        let r = r0.divrem(&r1).expect("nonzero divisor").1.monic();
        r0 = std::mem::replace(&mut r1, r);
    }
    r0
}

/// `Some(ν)` exactly when `f = lc(f)·(x − ν)^d` with d = deg f ≥ 1.
pub fn single_root_test(f: &Poly) -> Option<FieldElement> {
    let d = f.degree().filter(|&d| d >= 1)?;
    let field = f.field();
    let lc = f.leading()?;
    let nu = -(&f.coeff(d - 1) / &(lc * &field.from_i64(d as i64)));
    let linear = Poly::new(field, vec![-&nu, field.one()]);
    (linear.pow(d as u32).scale(lc) == *f).then_some(nu)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "polynomial field mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(&self.field, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Writes one summand `coeff*mono` of a canonical sum without spaces.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &Rational,
    mono: &str,
) -> fmt::Result {
    if !first && !coeff.is_negative() {
        f.write_str("+")?;
    }
    if mono.is_empty() {
        return write!(f, "{coeff}");
    }
    if coeff.is_one() {
        f.write_str(mono)
    } else if (-coeff).is_one() {
        write!(f, "-{mono}")
    } else {
        write!(f, "{coeff}*{mono}")
    }
}

/// `(k, c)` when the element is c·zeta^k.
fn single_zeta_term(coeff: &FieldElement) -> Option<(usize, &Rational)> {
    let mut nonzero = coeff.coords().iter().enumerate().filter(|(_, c)| !num_traits::Zero::is_zero(*c));
    let term = nonzero.next()?;
    nonzero.next().is_none().then_some(term)
}

/// Writes one summand whose coefficient is a field element; coefficients
/// with more than one zeta-power are parenthesized.
pub(crate) fn write_field_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &FieldElement,
    mono: &str,
) -> fmt::Result {
    match single_zeta_term(coeff) {
        Some((0, r)) => write_term(f, first, r, mono),
        Some((k, r)) => {
            let zeta = if k == 1 { "zeta".to_string() } else { format!("zeta^{k}") };
            let mono = if mono.is_empty() { zeta } else { format!("{zeta}*{mono}") };
            write_term(f, first, r, &mono)
        }
        None => {
            if !first {
                f.write_str("+")?;
            }
            if mono.is_empty() {
                write!(f, "({coeff})")
            } else {
                write!(f, "({coeff})*{mono}")
            }
        }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    /// Descending degree, zero terms omitted, unit coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => self.var.to_string(),
                i => format!("{}^{i}", self.var),
            };
            write_field_term(f, first, c, &mono)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("x").fmt(f)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

/// A polynomial with more than one term needs parentheses when used as a
/// coefficient of another variable.
pub(crate) fn needs_parens(p: &Poly) -> bool {
    p.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
}
