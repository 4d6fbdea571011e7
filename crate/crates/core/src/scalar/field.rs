use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::qpoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Largest supported cyclotomic conductor.
pub const MAX_CONDUCTOR: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Cyclotomic,
}

/// Either ℚ or a cyclotomic field ℚ(ζ_k), 3 ≤ k ≤ 64.
///
/// ℚ is stored as the conductor-1 case with modulus Φ₁ = x − 1, so every
/// field shares the same power-basis machinery. Cloning is cheap.
#[derive(Clone)]
pub struct FieldDescriptor(Arc<Descriptor>);

struct Descriptor {
    conductor: u32,
    modulus: Vec<Rational>,
}

impl FieldDescriptor {
    pub fn rational() -> Self {
        FieldDescriptor(Arc::new(Descriptor {
            conductor: 1,
            modulus: qpoly::cyclotomic(1),
        }))
    }

    /// ℚ(ζ_k); `k = 1, 2` normalize to ℚ.
    pub fn cyclotomic(k: u32) -> Result<Self> {
        match k {
            0 => Err(Error::UnsupportedConductor(k)),
            1 | 2 => Ok(Self::rational()),
            k if k > MAX_CONDUCTOR => Err(Error::UnsupportedConductor(k)),
            k => Ok(FieldDescriptor(Arc::new(Descriptor {
                conductor: k,
                modulus: qpoly::cyclotomic(k),
            }))),
        }
    }

    pub fn kind(&self) -> FieldKind {
        if self.0.conductor == 1 {
            FieldKind::Rational
        } else {
            FieldKind::Cyclotomic
        }
    }

    pub fn is_rational(&self) -> bool {
        self.kind() == FieldKind::Rational
    }

    /// The conductor k (1 for ℚ).
    pub fn conductor(&self) -> u32 {
        self.0.conductor
    }

    /// Degree over ℚ, i.e. φ(k).
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    pub(crate) fn modulus(&self) -> &[Rational] {
        &self.0.modulus
    }

    /// Order of the group of roots of unity in the field: lcm(2, k).
    pub fn roots_of_unity_order(&self) -> u32 {
        self.0.conductor.lcm(&2)
    }

    /// Whether some primitive m-th root of unity lies in the field.
    pub fn contains_roots_of_unity(&self, m: u32) -> bool {
        m >= 1 && self.roots_of_unity_order() % m == 0
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::zero(self)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::one(self)
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        FieldElement::from_rational(self, r)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        FieldElement::from_rational(self, super::rational::int(n))
    }

    /// The power-basis generator ζ_k (1 in ℚ).
    pub fn zeta(&self) -> FieldElement {
        if self.is_rational() {
            return self.one();
        }
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[1] = Rational::one();
        FieldElement {
            field: self.clone(),
            coords,
        }
    }

    /// Whether `self` embeds into `other` (ζ_k has an image in `other`).
    pub fn embeds_into(&self, other: &FieldDescriptor) -> bool {
        other.contains_roots_of_unity(self.conductor())
    }
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.conductor == other.0.conductor
    }
}

impl Eq for FieldDescriptor {}

impl Hash for FieldDescriptor {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.conductor.hash(state);
    }
}

impl fmt::Debug for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.conductor {
            1 => f.write_str("Q"),
            k => write!(f, "Q(zeta_{k})"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    /// Accepts `Q` or `Q(zeta_K)`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "Q" {
            return Ok(Self::rational());
        }
        let k = compact
            .strip_prefix("Q(zeta_")
            .and_then(|rest| rest.strip_suffix(')'))
            .and_then(|k| k.parse::<u32>().ok())
            .ok_or_else(|| {
                crate::parse::ParseError::syntax(0, &["Q", "Q(zeta_K)"])
            })?;
        Self::cyclotomic(k)
    }
}

/// An exact element of a [`FieldDescriptor`], stored as its reduced residue
/// in the power basis 1, ζ, …, ζ^{φ(k)−1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldDescriptor,
    coords: Vec<Rational>,
}

impl FieldElement {
    pub fn zero(field: &FieldDescriptor) -> Self {
        FieldElement {
            field: field.clone(),
            coords: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn one(field: &FieldDescriptor) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &FieldDescriptor, r: Rational) -> Self {
        let mut out = Self::zero(field);
        out.coords[0] = r;
        out
    }

    /// Builds an element from power-basis coordinates of any length,
    /// reducing modulo Φ_k.
    pub fn from_coords(field: &FieldDescriptor, coords: Vec<Rational>) -> Self {
        let mut out = FieldElement {
            field: field.clone(),
            coords,
        };
        out.reduce();
        out
    }

    fn reduce(&mut self) {
        let modulus = self.field.modulus();
        let deg = modulus.len() - 1;
        let v = &mut self.coords;
        // Φ_k is monic: fold every coefficient at index ≥ deg back down
        for top in (deg..v.len()).rev() {
            let c = std::mem::take(&mut v[top]);
            if c.is_zero() {
                continue;
            }
            let shift = top - deg;
            for (j, m) in modulus[..deg].iter().enumerate() {
                v[shift + j] -= &c * m;
            }
        }
        v.resize(deg, Rational::zero());
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coords[0])
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.field.is_rational() {
            return Ok(Self::from_rational(
                &self.field,
                &self.coords[0] * &other.coords[0],
            ));
        }
        let product = qpoly::mul(&self.coords, &other.coords);
        Ok(Self::from_coords(&self.field, product))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Multiplicative inverse via extended Euclid modulo Φ_k.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.field.is_rational() {
            return Ok(Self::from_rational(&self.field, self.coords[0].recip()));
        }
        let inv = qpoly::inverse_mod(&qpoly::trim(self.coords.clone()), self.field.modulus())
            .expect("cyclotomic modulus is irreducible");
        Ok(Self::from_coords(&self.field, inv))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn powi(&self, exp: i64) -> Result<Self> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }

    /// Exact multiplicative order, if the element is a root of unity.
    pub fn multiplicative_order(&self) -> Option<u32> {
        let bound = self.field.roots_of_unity_order();
        let mut acc = self.clone();
        for j in 1..=bound {
            if acc.is_one() {
                return Some(j);
            }
            acc = &acc * self;
        }
        None
    }

    /// Image under the embedding ℚ(ζ_k) → ℚ(ζ_K) sending ζ_k to e^{2πi/k}
    /// written in the target's power basis.
    pub fn embed(&self, target: &FieldDescriptor) -> Result<Self> {
        if self.field == *target {
            return Ok(self.clone());
        }
        if !self.field.embeds_into(target) {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                target.to_string(),
            ));
        }
        let image = primitive_root_image(self.field.conductor(), target);
        let mut acc = FieldElement::zero(target);
        let mut power = FieldElement::one(target);
        for c in &self.coords {
            if !c.is_zero() {
                acc = &acc + &(&power * &FieldElement::from_rational(target, c.clone()));
            }
            power = &power * &image;
        }
        Ok(acc)
    }
}

/// e^{2πi/k} as ±ζ_K^e inside `target`; requires k | lcm(2, K).
fn primitive_root_image(k: u32, target: &FieldDescriptor) -> FieldElement {
    let big_k = target.conductor() as u64;
    let k = k as u64;
    // find e, s with e/K + s/2 ≡ 1/k (mod 1)
    for s in 0..2u64 {
        for e in 0..big_k {
            let lhs = (2 * e * k + s * big_k * k) % (2 * big_k * k);
            if lhs == (2 * big_k) % (2 * big_k * k) {
                let root = target.zeta().pow(e);
                return if s == 1 { -root } else { root };
            }
        }
    }
    unreachable!("embedding precondition checked by caller")
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.field)
    }
}

impl fmt::Display for FieldElement {
    /// Ascending powers of `zeta`, no spaces: `1/2+3*zeta^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &Rational)> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (power, c)) in terms.into_iter().enumerate() {
            let mono = match power {
                0 => String::new(),
                1 => "zeta".to_string(),
                p => format!("zeta^{p}"),
            };
            crate::poly::write_term(f, idx == 0, c, &mono)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic with descriptor checking.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
    match op {
        FieldOp::Add => a.checked_add(b),
        FieldOp::Sub => a.checked_sub(b),
        FieldOp::Mul => a.checked_mul(b),
        FieldOp::Div => a.checked_div(b),
    }
}

/// Order L of the root-of-unity group: 2 for ℚ, lcm(2, k) for ℚ(ζ_k).
pub fn roots_of_unity_order(field: &FieldDescriptor) -> u32 {
    field.roots_of_unity_order()
}

/// First element of exact order `m` among ζ^a, then −ζ^a, for a = 0, 1, ….
pub fn element_of_order(field: &FieldDescriptor, m: u32) -> Result<FieldElement> {
    let available = field.roots_of_unity_order();
    if m == 0 || available % m != 0 {
        return Err(Error::NoElementOfOrder {
            order: m,
            available,
            field: field.to_string(),
        });
    }
    let zeta = field.zeta();
    for sign in [false, true] {
        let mut power = field.one();
        for _ in 0..field.conductor() {
            let candidate = if sign { -&power } else { power.clone() };
            if candidate.multiplicative_order() == Some(m) {
                return Ok(candidate);
            }
            power = &power * &zeta;
        }
    }
    unreachable!("every divisor of lcm(2, k) is realized by some ±ζ^a")
}
