use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::FieldElement;

use super::{commutator, OreAlgebra, OreElement};

/// σ(x) = λx + μ, σ(y) = λ^{d−1}y + p(x), subject to f(λx + μ) = λ^d f.
#[derive(Clone, PartialEq, Eq)]
pub struct OreAutomorphism {
    algebra: OreAlgebra,
    lambda: FieldElement,
    mu: FieldElement,
    p: Poly,
}

/// λ^{d−1}, with d = deg f (and d = 0 for f = 0).
fn y_scale_of(algebra: &OreAlgebra, lambda: &FieldElement) -> FieldElement {
    lambda
        .powi(algebra.degree() as i64 - 1)
        .expect("λ is nonzero")
}

impl OreAutomorphism {
    pub fn new(algebra: &OreAlgebra, lambda: FieldElement, mu: FieldElement, p: Poly) -> Result<Self> {
        let field = algebra.field();
        let lambda = lambda.embed(field)?;
        let mu = mu.embed(field)?;
        let p = p.embed(field)?;
        if lambda.is_zero() {
            return Err(Error::ZeroAffineScale);
        }
        let f = algebra.f();
        let moved = f.compose_affine(&lambda, &mu)?;
        if moved != f.scale(&lambda.pow(algebra.degree() as u64)) {
            return Err(Error::NotAnAutomorphism(format!(
                "f(({lambda})*x+{mu}) is not {lambda}^{} times f",
                algebra.degree()
            )));
        }
        Ok(OreAutomorphism {
            algebra: algebra.clone(),
            lambda,
            mu,
            p,
        })
    }

    pub fn identity(algebra: &OreAlgebra) -> Self {
        let field = algebra.field();
        OreAutomorphism {
            algebra: algebra.clone(),
            lambda: field.one(),
            mu: field.zero(),
            p: Poly::zero(field),
        }
    }

    /// s_p: x ↦ x, y ↦ y + p.
    pub fn translation(algebra: &OreAlgebra, p: Poly) -> Result<Self> {
        let field = algebra.field();
        Self::new(algebra, field.one(), field.zero(), p)
    }

    /// The G_f-part (λ, μ, 0).
    pub fn affine(algebra: &OreAlgebra, lambda: FieldElement, mu: FieldElement) -> Result<Self> {
        let zero = Poly::zero(algebra.field());
        Self::new(algebra, lambda, mu, zero)
    }

    pub fn algebra(&self) -> &OreAlgebra {
        &self.algebra
    }

    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }

    pub fn mu(&self) -> &FieldElement {
        &self.mu
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn y_scale(&self) -> FieldElement {
        y_scale_of(&self.algebra, &self.lambda)
    }

    pub fn is_identity(&self) -> bool {
        self.lambda.is_one() && self.mu.is_zero() && self.p.is_zero()
    }

    /// True for elements of 𝕊, i.e. λ = 1 and μ = 0.
    pub fn is_translation(&self) -> bool {
        self.lambda.is_one() && self.mu.is_zero()
    }

    fn x_substitution(&self) -> Poly {
        Poly::new(self.algebra.field(), vec![self.mu.clone(), self.lambda.clone()])
    }

    pub fn image_x(&self) -> OreElement {
        self.algebra.from_poly(self.x_substitution())
    }

    pub fn image_y(&self) -> OreElement {
        self.algebra
            .element(vec![self.p.clone(), Poly::constant(&self.y_scale())])
    }

    /// σ(Σ c_i(x) y^i) = Σ c_i(λx + μ) σ(y)^i.
    pub fn apply(&self, u: &OreElement) -> Result<OreElement> {
        if u.algebra() != &self.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let sub = self.x_substitution();
        let image_y = self.image_y();
        let mut power = self.algebra.one();
        let mut out = self.algebra.zero();
        for (i, c) in u.terms().iter().enumerate() {
            if i > 0 {
                power = &power * &image_y;
            }
            if !c.is_zero() {
                out = &out + &(&self.algebra.from_poly(c.compose(&sub)) * &power);
            }
        }
        Ok(out)
    }

    /// σ∘τ, acting as u ↦ σ(τ(u)).
    pub fn compose(&self, tau: &OreAutomorphism) -> Result<OreAutomorphism> {
        if tau.algebra != self.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let lambda = &self.lambda * &tau.lambda;
        let mu = &(&tau.lambda * &self.mu) + &tau.mu;
        let p = &self.p.scale(&tau.y_scale()) + &tau.p.compose(&self.x_substitution());
        Ok(OreAutomorphism {
            algebra: self.algebra.clone(),
            lambda,
            mu,
            p,
        })
    }

    pub fn invert(&self) -> OreAutomorphism {
        let lambda = self.lambda.inv().expect("λ is nonzero");
        let mu = -&(&self.mu * &lambda);
        let back = Poly::new(self.algebra.field(), vec![mu.clone(), lambda.clone()]);
        let p = -&self.p.compose(&back).scale(&y_scale_of(&self.algebra, &lambda));
        OreAutomorphism {
            algebra: self.algebra.clone(),
            lambda,
            mu,
            p,
        }
    }

    /// σ = s_q ∘ g with g = (λ, μ, 0) ∈ G_f and s_q ∈ 𝕊, q = λ^{1−d}p.
    pub fn factor_semidirect(&self) -> (OreAutomorphism, OreAutomorphism) {
        let q = self
            .p
            .scale(&self.y_scale().inv().expect("λ is nonzero"));
        let s = OreAutomorphism {
            algebra: self.algebra.clone(),
            lambda: self.algebra.field().one(),
            mu: self.algebra.field().zero(),
            p: q,
        };
        let g = OreAutomorphism {
            algebra: self.algebra.clone(),
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
            p: Poly::zero(self.algebra.field()),
        };
        (s, g)
    }
}

impl fmt::Display for OreAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda={} mu={} p={}", self.lambda, self.mu, self.p)
    }
}

impl fmt::Debug for OreAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}) on {:?}", self.lambda, self.mu, self.p, self.algebra)
    }
}

/// Whether x ↦ X, y ↦ Y defines an automorphism. Only the affine-triangular
/// shape X = λx + μ, Y = c·y + p(x) is decided; anything else is
/// `UnsupportedShape`.
pub fn is_automorphism(algebra: &OreAlgebra, x_image: &OreElement, y_image: &OreElement) -> Result<bool> {
    if x_image.algebra() != algebra || y_image.algebra() != algebra {
        return Err(Error::AlgebraMismatch);
    }
    let shape_error = || {
        Error::UnsupportedShape(format!(
            "expected x -> a*x+b and y -> c*y+p(x), got x -> {x_image}, y -> {y_image}"
        ))
    };
    let sub = x_image.as_poly().ok_or_else(shape_error)?;
    if sub.degree() != Some(1) {
        return Err(shape_error());
    }
    let c = match y_image.y_degree() {
        Some(1) if y_image.coeff(1).is_constant() => y_image.coeff(1).coeff(0),
        _ => return Err(shape_error()),
    };
    if c.is_zero() {
        return Ok(false);
    }
    let f = algebra.f();
    if f.is_zero() {
        return Ok(true);
    }
    let lambda = sub.coeff(1);
    if c != y_scale_of(algebra, &lambda) {
        return Ok(false);
    }
    let relation = commutator(y_image, x_image)?;
    Ok(relation == algebra.from_poly(f.compose(&sub)))
}

/// ω_f: x ↦ x, y ↦ y − f′, characterized by f·u = ω_f(u)·f.
pub fn omega_f(algebra: &OreAlgebra) -> Result<OreAutomorphism> {
    match algebra.f().degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => OreAutomorphism::translation(algebra, -&algebra.f().derivative(1)),
    }
}

/// The twist y ↦ y + h, h = (f/p)·p′, witnessing pΛ = Λp for a divisor p
/// of f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityTwist {
    pub p: Poly,
    pub h: Poly,
    pub automorphism: OreAutomorphism,
}

pub fn normality_twist(algebra: &OreAlgebra, p: &Poly) -> Result<NormalityTwist> {
    let f = algebra.f();
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let h = &f.exact_div(p)? * &p.derivative(1);
    let automorphism = OreAutomorphism::translation(algebra, h.clone())?;
    let p_elt = algebra.from_poly(p.clone());
    let lhs = &algebra.y() * &p_elt;
    let rhs = &p_elt * &automorphism.image_y();
    assert_eq!(lhs, rhs, "y·p = p·(y + (f/p)p′) failed");
    Ok(NormalityTwist {
        p: p.clone(),
        h,
        automorphism,
    })
}
