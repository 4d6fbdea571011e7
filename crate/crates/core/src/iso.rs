//! Isomorphism of Λ(f) and Λ(g) over ℚ.
//!
//! Λ(f) ≅ Λ(g) exactly when g(x) = λ·f(αx + β) for some λ, α ≠ 0. Both sides
//! are centered at their eigenroots, which pins β = ν_f − αν_g, and the
//! remaining unknown α must satisfy α^{d−i} = F_i/G_i on the common support
//! of the centered coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{monic_gcd, Poly};
use crate::scalar::rational::rational_roots;
use crate::scalar::{FieldDescriptor, FieldElement, Rational};

/// `g(x) = λ·f(αx + β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWitness {
    pub lambda: FieldElement,
    pub alpha: FieldElement,
    pub beta: FieldElement,
}

impl AffineWitness {
    pub fn new(lambda: FieldElement, alpha: FieldElement, beta: FieldElement) -> Self {
        AffineWitness {
            lambda,
            alpha,
            beta,
        }
    }

    /// The witness for the reverse direction: f(x) = λ⁻¹·g((x − β)/α).
    pub fn inverse(&self) -> Result<AffineWitness> {
        let alpha_inv = self.alpha.inv()?;
        Ok(AffineWitness {
            lambda: self.lambda.inv()?,
            beta: -&(&self.beta * &alpha_inv),
            alpha: alpha_inv,
        })
    }

    /// Given `self` for (f, g) and `next` for (g, h), a witness for (f, h).
    pub fn then(&self, next: &AffineWitness) -> AffineWitness {
        // h(x) = λ'·g(α'x+β') = λ'λ·f(α(α'x+β')+β)
        AffineWitness {
            lambda: &self.lambda * &next.lambda,
            alpha: &self.alpha * &next.alpha,
            beta: &(&self.alpha * &next.beta) + &self.beta,
        }
    }
}

/// The one-parameter family for f, g both of the form c·(x − ν)^d:
/// α is free, β = ν_f − αν_g, λ = (c_g/c_f)·α^{−d}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusFamily {
    pub nu_f: FieldElement,
    pub nu_g: FieldElement,
    pub lc_ratio: FieldElement,
    pub degree: usize,
}

impl TorusFamily {
    pub fn witness(&self, alpha: &FieldElement) -> Result<AffineWitness> {
        Ok(AffineWitness {
            lambda: &self.lc_ratio * &alpha.powi(-(self.degree as i64))?,
            beta: &self.nu_f - &(alpha * &self.nu_g),
            alpha: alpha.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessSet {
    Finite(Vec<AffineWitness>),
    Torus(TorusFamily),
    /// Constant f and g: α, β are free. `lambda` is forced to c_g/c_f unless
    /// both are zero, where every λ works.
    Unconstrained { lambda: Option<FieldElement> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceResult {
    pub equivalent: bool,
    pub witnesses: WitnessSet,
}

impl EquivalenceResult {
    fn none() -> Self {
        EquivalenceResult {
            equivalent: false,
            witnesses: WitnessSet::Finite(Vec::new()),
        }
    }

    fn from_witnesses(ws: Vec<AffineWitness>) -> Self {
        EquivalenceResult {
            equivalent: !ws.is_empty(),
            witnesses: WitnessSet::Finite(ws),
        }
    }

    pub fn finite_witnesses(&self) -> Option<&[AffineWitness]> {
        match &self.witnesses {
            WitnessSet::Finite(ws) => Some(ws),
            _ => None,
        }
    }
}

/// True iff λ·f(αx + β) = g by exact expansion.
pub fn witness_verify(f: &Poly, g: &Poly, w: &AffineWitness) -> bool {
    if w.alpha.is_zero() || w.lambda.is_zero() {
        return false;
    }
    match f.compose_affine(&w.alpha, &w.beta) {
        Ok(image) => image.scale(&w.lambda) == *g,
        Err(_) => false,
    }
}

fn require_rational(p: &Poly) -> Result<()> {
    if p.field().is_rational() {
        Ok(())
    } else {
        Err(Error::UnsupportedField(format!(
            "isomorphism testing is only available over Q, not {}",
            p.field()
        )))
    }
}

/// Monic centered form F(x) = f̂(x + ν_f) plus (ν_f, c_f).
struct Centered {
    coeffs: Vec<Rational>,
    nu: FieldElement,
    lc: FieldElement,
}

fn center(f: &Poly) -> Centered {
    let d = f.degree().expect("nonzero");
    let field = f.field();
    let lc = f.leading().unwrap().clone();
    let monic = f.monic();
    let nu = -(&monic.coeff(d - 1) / &field.from_i64(d as i64));
    let centered = monic.compose_affine(&field.one(), &nu).expect("unit scale");
    Centered {
        coeffs: centered.rational_coeffs().expect("rational field"),
        nu,
        lc,
    }
}

fn support(c: &[Rational]) -> Vec<usize> {
    (0..c.len() - 1).filter(|&i| !c[i].is_zero()).collect()
}

enum Prelude {
    Done(EquivalenceResult),
    Centered(Centered, Centered),
}

/// Shared degree/constant handling for both the decision procedure and the
/// oracle.
fn prelude(f: &Poly, g: &Poly) -> Result<Prelude> {
    require_rational(f)?;
    require_rational(g)?;
    match (f.degree(), g.degree()) {
        (None, None) => {
            return Ok(Prelude::Done(EquivalenceResult {
                equivalent: true,
                witnesses: WitnessSet::Unconstrained { lambda: None },
            }))
        }
        (None, _) | (_, None) => return Ok(Prelude::Done(EquivalenceResult::none())),
        (Some(a), Some(b)) if a != b => return Ok(Prelude::Done(EquivalenceResult::none())),
        (Some(0), Some(0)) => {
            let lambda = &g.coeff(0) / &f.coeff(0);
            return Ok(Prelude::Done(EquivalenceResult {
                equivalent: true,
                witnesses: WitnessSet::Unconstrained {
                    lambda: Some(lambda),
                },
            }));
        }
        _ => {}
    }
    Ok(Prelude::Centered(center(f), center(g)))
}

fn torus(cf: &Centered, cg: &Centered, d: usize) -> EquivalenceResult {
    EquivalenceResult {
        equivalent: true,
        witnesses: WitnessSet::Torus(TorusFamily {
            nu_f: cf.nu.clone(),
            nu_g: cg.nu.clone(),
            lc_ratio: &cg.lc / &cf.lc,
            degree: d,
        }),
    }
}

/// Decides Λ(f) ≅ Λ(g) over ℚ and returns every witness (λ, α, β).
///
/// ```
/// use orext::{iso::decide_isomorphism, Poly};
/// let f = Poly::from_ints(&[-1, 0, 1]);     // x² − 1
/// let g = Poly::from_ints(&[0, -4, 4]);     // 4x² − 4x
/// let result = decide_isomorphism(&f, &g).unwrap();
/// assert!(result.equivalent);
/// ```
pub fn decide_isomorphism(f: &Poly, g: &Poly) -> Result<EquivalenceResult> {
    let (cf, cg) = match prelude(f, g)? {
        Prelude::Done(r) => return Ok(r),
        Prelude::Centered(cf, cg) => (cf, cg),
    };
    let d = f.degree().unwrap();
    let q = FieldDescriptor::rational();
    let support_f = support(&cf.coeffs);
    if support_f != support(&cg.coeffs) {
        return Ok(EquivalenceResult::none());
    }
    if support_f.is_empty() {
        return Ok(torus(&cf, &cg, d));
    }

    // α^{d−i} = r_i on the common support
    let ratios: Vec<(usize, Rational)> = support_f
        .iter()
        .map(|&i| (d - i, &cf.coeffs[i] / &cg.coeffs[i]))
        .collect();
    let h = ratios.iter().fold(Poly::zero(&q), |acc, (m, r)| {
        let binomial = &Poly::monomial(&q.one(), *m) - &Poly::constant(&q.from_rational(r.clone()));
        monic_gcd(&acc, &binomial)
    });
    if h.is_constant() {
        return Ok(EquivalenceResult::none());
    }
    let (m0, r0) = ratios.iter().min_by_key(|(m, _)| *m).unwrap();
    let mut witnesses = Vec::new();
    for alpha in rational_roots(r0, *m0 as u32) {
        let alpha = q.from_rational(alpha);
        if alpha.is_zero() || !h.eval(&alpha).is_zero() {
            continue;
        }
        let w = AffineWitness {
            lambda: &(&cg.lc / &cf.lc) * &alpha.powi(-(d as i64))?,
            beta: &cf.nu - &(&alpha * &cg.nu),
            alpha,
        };
        if witness_verify(f, g, &w) {
            witnesses.push(w);
        }
    }
    Ok(EquivalenceResult::from_witnesses(witnesses))
}

/// Degree cap for [`brute_force_equiv_oracle`].
pub const ORACLE_MAX_DEGREE: usize = 6;

/// Independent check by exhaustive search over α = p/q with |p|, q ≤
/// `height_bound`, p dividing the numerator and q the denominator of the
/// ratio closest to the top. Every candidate is verified by full expansion.
pub fn brute_force_equiv_oracle(f: &Poly, g: &Poly, height_bound: u32) -> Result<EquivalenceResult> {
    if f.degree().unwrap_or(0).max(g.degree().unwrap_or(0)) > ORACLE_MAX_DEGREE {
        return Err(Error::Capacity(format!(
            "oracle is limited to degree {ORACLE_MAX_DEGREE}"
        )));
    }
    let (cf, cg) = match prelude(f, g)? {
        Prelude::Done(r) => return Ok(r),
        Prelude::Centered(cf, cg) => (cf, cg),
    };
    let d = f.degree().unwrap();
    let q = FieldDescriptor::rational();
    let lc_ratio = &cg.lc / &cf.lc;
    let witness_for = |alpha: FieldElement| -> Result<AffineWitness> {
        Ok(AffineWitness {
            lambda: &lc_ratio * &alpha.powi(-(d as i64))?,
            beta: &cf.nu - &(&alpha * &cg.nu),
            alpha,
        })
    };
    let top_f = (0..d).rev().find(|&i| !cf.coeffs[i].is_zero());
    let top_g = (0..d).rev().find(|&i| !cg.coeffs[i].is_zero());
    let i0 = match (top_f, top_g) {
        (None, None) => {
            // both are pure powers: confirm one member of the family
            let w = witness_for(q.one())?;
            return Ok(if witness_verify(f, g, &w) {
                torus(&cf, &cg, d)
            } else {
                EquivalenceResult::none()
            });
        }
        (Some(a), Some(b)) if a == b => a,
        _ => return Ok(EquivalenceResult::none()),
    };
    let ratio = &cf.coeffs[i0] / &cg.coeffs[i0];
    let num = ratio.numer().abs();
    let den = ratio.denom().clone();
    let mut witnesses = Vec::new();
    for p in 1..=height_bound {
        let p_big = BigInt::from(p);
        if !num.is_multiple_of(&p_big) {
            continue;
        }
        for qq in 1..=height_bound {
            let q_big = BigInt::from(qq);
            if !den.is_multiple_of(&q_big) || !p_big.gcd(&q_big).is_one() {
                continue;
            }
            for sign in [-1, 1] {
                let alpha = Rational::new(&p_big * BigInt::from(sign), q_big.clone());
                let w = witness_for(q.from_rational(alpha))?;
                if witness_verify(f, g, &w) {
                    witnesses.push(w);
                }
            }
        }
    }
    witnesses.sort_by(|a, b| a.alpha.as_rational().cmp(&b.alpha.as_rational()));
    Ok(EquivalenceResult::from_witnesses(witnesses))
}
