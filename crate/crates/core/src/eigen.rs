//! Eigenforms and eigengroups of polynomials.
//!
//! A monic polynomial f of degree d ≥ 1 has a unique presentation
//!
//! ```text
//! f(x) = (x − ν)^s · g((x − ν)^n)
//! ```
//!
//! where ν = −a_{d−1}/d is the *eigenroot*, s its multiplicity as a root of f,
//! n the *eigenorder* (the exponent of f(x + ν)/x^s) and g the monic
//! *eigenfactor* with g(0) ≠ 0. When f = (x − ν)^d we use n = 0 and g = 1.
//!
//! The eigengroup G_f(K) is the group of affine substitutions x ↦ λx + μ
//! over K under which f is an eigenvector. Away from the single-root case it
//! is cyclic of order gcd(n, L), L being the number of roots of unity in K,
//! generated by x ↦ λx + (1 − λ)ν with λ a primitive root of unity.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{element_of_order, FieldDescriptor, FieldElement};

/// The exponent gcd{i ≥ 1 : a_i ≠ 0}; 0 when that set is empty.
pub fn exponent(p: &Poly) -> usize {
    p.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .fold(0, |acc, (i, _)| acc.gcd(&i))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenForm {
    /// Eigenroot ν.
    pub nu: FieldElement,
    /// Multiplicity of ν as a root.
    pub s: usize,
    /// Eigenorder; 0 in the single-root case.
    pub n: usize,
    /// Monic eigenfactor g.
    pub g: Poly,
    /// Leading coefficient of the input; the form describes the monic part.
    pub leading_coefficient: FieldElement,
}

impl EigenForm {
    /// `(x − ν)^s · g((x − ν)^n)`, the monicized input.
    pub fn reconstruct(&self) -> Poly {
        let field = self.nu.field();
        let shift = Poly::new(field, vec![-&self.nu, field.one()]);
        let inner = shift.pow(self.n as u32);
        &shift.pow(self.s as u32) * &self.g.compose(&inner)
    }

    pub fn is_single_root(&self) -> bool {
        self.n == 0
    }

    pub fn degree(&self) -> usize {
        self.s + self.n * self.g.degree().unwrap_or(0)
    }
}

/// Computes the eigenform of a nonconstant polynomial (monicized first).
pub fn eigenform(f: &Poly) -> Result<EigenForm> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::ConstantPolynomial),
    };
    let field = f.field().clone();
    let leading_coefficient = f.leading().expect("nonzero").clone();
    let monic = f.monic();
    let nu = -(&monic.coeff(d - 1) / &field.from_i64(d as i64));

    // s = smallest t with f^(t)(ν) ≠ 0
    let s = (0..=d)
        .find(|&t| !monic.derivative(t).eval(&nu).is_zero())
        .expect("the d-th derivative is a nonzero constant");

    let centered = monic.compose_affine(&field.one(), &nu)?;
    let quotient = centered.shift_down(s);
    if quotient.is_constant() {
        return Ok(EigenForm {
            nu,
            s,
            n: 0,
            g: Poly::one(&field),
            leading_coefficient,
        });
    }
    let n = exponent(&quotient);
    let g_coeffs = quotient.coeffs().iter().step_by(n).cloned().collect();
    Ok(EigenForm {
        nu,
        s,
        n,
        g: Poly::new(&field, g_coeffs),
        leading_coefficient,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenGroupKind {
    Trivial,
    Cyclic,
    /// The full family {x ↦ λx + (1 − λ)ν : λ ∈ K^×} ≅ K^×.
    Torus,
}

impl EigenGroupKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EigenGroupKind::Trivial => "trivial",
            EigenGroupKind::Cyclic => "cyclic",
            EigenGroupKind::Torus => "torus",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenGroupDescription {
    pub kind: EigenGroupKind,
    /// Group order, cyclic case only.
    pub order: Option<u32>,
    /// The scalar λ of the generator x ↦ λx + (1 − λ)ν, cyclic case only.
    pub generator_lambda: Option<FieldElement>,
    pub nu: FieldElement,
    pub field: FieldDescriptor,
    /// Multiplicity s, so that every element scales f by λ^s.
    pub s: usize,
}

impl EigenGroupDescription {
    /// Cardinality, `None` for the torus.
    pub fn cardinality(&self) -> Option<u32> {
        match self.kind {
            EigenGroupKind::Trivial => Some(1),
            EigenGroupKind::Cyclic => self.order,
            EigenGroupKind::Torus => None,
        }
    }

    /// The translation μ = (1 − λ)ν paired with a given scale λ.
    pub fn translation_for(&self, lambda: &FieldElement) -> FieldElement {
        &(&self.field.one() - lambda) * &self.nu
    }

    /// All scales λ of a finite eigengroup, as powers of the generator.
    pub fn lambdas(&self) -> Option<Vec<FieldElement>> {
        match self.kind {
            EigenGroupKind::Trivial => Some(vec![self.field.one()]),
            EigenGroupKind::Cyclic => {
                let gen = self.generator_lambda.as_ref()?;
                Some((0..self.order?).map(|j| gen.pow(j as u64)).collect())
            }
            EigenGroupKind::Torus => None,
        }
    }
}

fn cyclic_or_trivial(
    order: u32,
    field: FieldDescriptor,
    nu: FieldElement,
    s: usize,
) -> Result<EigenGroupDescription> {
    if order < 2 {
        return Ok(EigenGroupDescription {
            kind: EigenGroupKind::Trivial,
            order: None,
            generator_lambda: None,
            nu,
            field,
            s,
        });
    }
    let lambda = element_of_order(&field, order)?;
    Ok(EigenGroupDescription {
        kind: EigenGroupKind::Cyclic,
        order: Some(order),
        generator_lambda: Some(lambda),
        nu,
        field,
        s,
    })
}

/// Panics unless `x ↦ λx + (1 − λ)ν` scales `f` by λ^s; that always holds,
/// so a failure here is a bug.
fn check_generator(f: &Poly, group: &EigenGroupDescription) {
    if let Some(lambda) = &group.generator_lambda {
        let mu = group.translation_for(lambda);
        let image = f.compose_affine(lambda, &mu).expect("λ ≠ 0");
        assert_eq!(
            image,
            f.scale(&lambda.pow(group.s as u64)),
            "eigengroup generator does not fix f up to scale"
        );
    }
}

/// G_f over the algebraic closure. The generator λ_n is realized in
/// ℚ(ζ_lcm(k, n)), k the conductor of f's field.
pub fn eigengroup_closure(f: &Poly) -> Result<EigenGroupDescription> {
    let form = eigenform(f)?;
    let own = f.field().clone();
    if form.is_single_root() {
        return Ok(EigenGroupDescription {
            kind: EigenGroupKind::Torus,
            order: None,
            generator_lambda: None,
            nu: form.nu,
            field: own,
            s: form.s,
        });
    }
    let n = form.n as u32;
    if n < 2 {
        return cyclic_or_trivial(1, own, form.nu, form.s);
    }
    let field = FieldDescriptor::cyclotomic(own.conductor().lcm(&n))?;
    let nu = form.nu.embed(&field)?;
    let group = cyclic_or_trivial(n, field.clone(), nu, form.s)?;
    check_generator(&f.embed(&field)?, &group);
    Ok(group)
}

/// G_f(K) for the given field K: cyclic of order n' = gcd(n, L), or the
/// torus in the single-root case.
pub fn eigengroup(f: &Poly, field: &FieldDescriptor) -> Result<EigenGroupDescription> {
    let f = f.embed(field)?;
    let form = eigenform(&f)?;
    if form.is_single_root() {
        return Ok(EigenGroupDescription {
            kind: EigenGroupKind::Torus,
            order: None,
            generator_lambda: None,
            nu: form.nu,
            field: field.clone(),
            s: form.s,
        });
    }
    let order = (form.n as u32).gcd(&field.roots_of_unity_order());
    let group = cyclic_or_trivial(order, field.clone(), form.nu, form.s)?;
    check_generator(&f, &group);
    Ok(group)
}
