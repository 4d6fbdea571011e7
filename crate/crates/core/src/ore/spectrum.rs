use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{kronecker_factor, Poly};
use crate::scalar::{FieldDescriptor, Rational};

use super::{normality_twist, NormalityTwist, OreAlgebra, OreElement};

fn require_rational(algebra: &OreAlgebra, what: &str) -> Result<()> {
    if algebra.field().is_rational() {
        Ok(())
    } else {
        Err(Error::UnsupportedField(format!("{what} is only available over Q")))
    }
}

/// The character x ↦ a, y ↦ b applied to u. Exists only when f(a) = 0.
pub fn evaluate_character(algebra: &OreAlgebra, a: &Rational, b: &Rational, u: &OreElement) -> Result<Rational> {
    require_rational(algebra, "evaluate_character")?;
    if u.algebra() != algebra {
        return Err(Error::AlgebraMismatch);
    }
    let field = algebra.field();
    let at = field.from_rational(a.clone());
    let value = algebra.f().eval(&at);
    if !value.is_zero() {
        return Err(Error::NoCharacter {
            a: a.to_string(),
            value: value.to_string(),
        });
    }
    let mut total = Rational::zero();
    let mut power = Rational::one();
    for c in u.terms() {
        let v = c.eval(&at);
        total += v.as_rational().expect("rational field") * &power;
        power *= b;
    }
    Ok(total)
}

/// Closed points (maximal ideals) lying over a height-one prime Λp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedPoints {
    /// p = x − r: the ideals (x − r, y − μ) for μ ∈ K.
    Line { root: Rational },
    /// Nonlinear p: the ideals (p, q) with q monic irreducible over the
    /// residue field K[x]/(p), described but not enumerated.
    Symbolic { residue_degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightOnePrime {
    pub p: Poly,
    pub multiplicity: u32,
    pub twist: NormalityTwist,
    pub closed_points: ClosedPoints,
}

/// Spec Λ(f) = {0} ∪ {Λp_i} ∪ {(p_i, q)}, p_i the irreducible factors of f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumDescriptor {
    pub f: Poly,
    pub height_one: Vec<HeightOnePrime>,
}

impl SpectrumDescriptor {
    /// Π p_i^{n_i}, which equals the monic form of f.
    pub fn product(&self) -> Poly {
        self.height_one
            .iter()
            .fold(Poly::one(self.f.field()), |acc, h| &acc * &h.p.pow(h.multiplicity))
    }

    /// Whether (p, q(y)) is a closed point over the linear prime p = x − r:
    /// r must be a root of f and q monic irreducible over ℚ.
    pub fn is_second_layer_prime(&self, root: &Rational, q: &Poly) -> Result<bool> {
        let over_root = self
            .height_one
            .iter()
            .any(|h| matches!(&h.closed_points, ClosedPoints::Line { root: r } if r == root));
        if !over_root || !q.is_monic() {
            return Ok(false);
        }
        match q.degree() {
            None | Some(0) => Ok(false),
            Some(_) => {
                let fac = kronecker_factor(q)?;
                Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
            }
        }
    }
}

pub fn spectrum(f: &Poly) -> Result<SpectrumDescriptor> {
    let algebra = OreAlgebra::new(f.clone());
    require_rational(&algebra, "spectrum")?;
    let factorization = kronecker_factor(f)?;
    let mut height_one = Vec::with_capacity(factorization.factors.len());
    for (p, multiplicity) in factorization.factors {
        let twist = normality_twist(&algebra, &p)?;
        let closed_points = if p.degree() == Some(1) {
            let root = -p.coeff(0);
            ClosedPoints::Line {
                root: root.as_rational().expect("rational field").clone(),
            }
        } else {
            ClosedPoints::Symbolic {
                residue_degree: p.degree().unwrap_or(0),
            }
        };
        height_one.push(HeightOnePrime {
            p,
            multiplicity,
            twist,
            closed_points,
        });
    }
    Ok(SpectrumDescriptor {
        f: f.clone(),
        height_one,
    })
}

impl fmt::Display for SpectrumDescriptor {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "0")?;
        for h in &self.height_one {
            write!(out, "\np={} n={} twist={}", h.p, h.multiplicity, h.twist.automorphism.image_y())?;
            match &h.closed_points {
                ClosedPoints::Line { root } => {
                    write!(out, " points=(x-r,y-mu) r={}", FieldDescriptor::rational().from_rational(root.clone()))?
                }
                ClosedPoints::Symbolic { residue_degree } => {
                    write!(out, " points=({},q) residue_degree={residue_degree}", h.p)?
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::int;

    fn cubic() -> OreAlgebra {
        OreAlgebra::new(Poly::from_ints(&[0, -1, 0, 1]))
    }

    #[test]
    fn characters() {
        let a = cubic();
        let yx = &a.y() * &a.x();
        assert_eq!(evaluate_character(&a, &int(1), &int(5), &yx), Ok(int(5)));
        assert_eq!(evaluate_character(&a, &int(1), &int(5), &a.one()), Ok(int(1)));
        assert!(matches!(
            evaluate_character(&a, &int(2), &int(0), &a.one()),
            Err(Error::NoCharacter { .. })
        ));
    }

    #[test]
    fn character_is_multiplicative() {
        let a = cubic();
        let u = a.element(vec![Poly::from_ints(&[1, 2]), Poly::from_ints(&[0, 0, 3])]);
        let v = a.element(vec![Poly::from_ints(&[-1]), Poly::from_ints(&[1, 1]), Poly::from_ints(&[2])]);
        for r in [-1, 0, 1] {
            let (ra, rb) = (int(r), int(3));
            let lhs = evaluate_character(&a, &ra, &rb, &(&u * &v)).unwrap();
            let rhs = evaluate_character(&a, &ra, &rb, &u).unwrap()
                * evaluate_character(&a, &ra, &rb, &v).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cubic_spectrum() {
        let s = spectrum(&Poly::from_ints(&[0, -1, 0, 1])).unwrap();
        let ps: Vec<String> = s.height_one.iter().map(|h| h.p.to_string()).collect();
        assert_eq!(ps, ["x-1", "x", "x+1"]);
        assert_eq!(s.product(), Poly::from_ints(&[0, -1, 0, 1]));
        assert!(s.is_second_layer_prime(&int(1), &Poly::from_ints(&[-4, 1])).unwrap());
        assert!(!s.is_second_layer_prime(&int(2), &Poly::from_ints(&[-4, 1])).unwrap());
        assert!(!s.is_second_layer_prime(&int(0), &Poly::from_ints(&[-4, 0, 1])).unwrap());
        assert!(s.is_second_layer_prime(&int(0), &Poly::from_ints(&[-2, 0, 1])).unwrap());
    }

    #[test]
    fn prime_power_and_quadratic() {
        let s = spectrum(&Poly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(s.height_one.len(), 1);
        assert_eq!(s.height_one[0].multiplicity, 2);
        let s = spectrum(&Poly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(s.height_one.len(), 1);
        assert_eq!(s.height_one[0].closed_points, ClosedPoints::Symbolic { residue_degree: 2 });
    }

    #[test]
    fn display() {
        let s = spectrum(&Poly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(s.to_string(), "0\np=x n=2 twist=y+x points=(x-r,y-mu) r=0");
    }
}
