use crate::eigen::{eigengroup, EigenGroupDescription, EigenGroupKind};
use crate::error::Result;
use crate::poly::Poly;
use crate::scalar::FieldDescriptor;

use super::{OreAlgebra, OreAutomorphism};

/// A named generator family of a wild automorphism group, kept as text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFamily {
    pub name: &'static str,
    pub x_image: &'static str,
    pub y_image: &'static str,
    pub parameters: &'static str,
}

const T_L: GeneratorFamily = GeneratorFamily {
    name: "t_l",
    x_image: "lambda*x",
    y_image: "y",
    parameters: "lambda in K^*",
};

const PHI: GeneratorFamily = GeneratorFamily {
    name: "Phi_{n,lambda}",
    x_image: "x+lambda*y^n",
    y_image: "y",
    parameters: "n >= 0, lambda in K",
};

const PHI_PRIME: GeneratorFamily = GeneratorFamily {
    name: "Phi'_{n,lambda}",
    x_image: "x",
    y_image: "y+lambda*x^n",
    parameters: "n >= 0, lambda in K",
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutGroupDescription {
    /// deg f ≥ 1: 𝕊 ⋊ G_f with 𝕊 = {s_p : p ∈ K[x]} ≅ (K[x], +).
    Semidirect {
        eigengroup: EigenGroupDescription,
        /// The eigengroup generator lifted to Λ(f), cyclic case only.
        generator: Option<OreAutomorphism>,
    },
    /// f = 0: Aut K[x, y].
    Polynomial { families: Vec<GeneratorFamily> },
    /// f ∈ K^×: Aut of the Weyl algebra.
    Weyl { families: Vec<GeneratorFamily> },
}

impl AutGroupDescription {
    /// The finite part, when the group is 𝕊 ⋊ (finite cyclic).
    pub fn finite_elements(&self, algebra: &OreAlgebra) -> Option<Vec<OreAutomorphism>> {
        let AutGroupDescription::Semidirect { eigengroup, .. } = self else {
            return None;
        };
        let lambdas = eigengroup.lambdas()?;
        Some(
            lambdas
                .into_iter()
                .map(|l| {
                    let mu = eigengroup.translation_for(&l);
                    OreAutomorphism::affine(algebra, l, mu).expect("eigengroup element")
                })
                .collect(),
        )
    }

    pub fn is_torus(&self) -> bool {
        matches!(
            self,
            AutGroupDescription::Semidirect { eigengroup, .. } if eigengroup.kind == EigenGroupKind::Torus
        )
    }
}

pub fn aut_group_description(f: &Poly, field: &FieldDescriptor) -> Result<AutGroupDescription> {
    let f = f.embed(field)?;
    match f.degree() {
        None => Ok(AutGroupDescription::Polynomial {
            families: vec![T_L, PHI, PHI_PRIME],
        }),
        Some(0) => Ok(AutGroupDescription::Weyl {
            families: vec![PHI, PHI_PRIME],
        }),
        Some(_) => {
            let group = eigengroup(&f, field)?;
            let generator = match &group.generator_lambda {
                Some(l) => {
                    let algebra = OreAlgebra::new(f.clone());
                    Some(OreAutomorphism::affine(&algebra, l.clone(), group.translation_for(l))?)
                }
                None => None,
            };
            Ok(AutGroupDescription::Semidirect {
                eigengroup: group,
                generator,
            })
        }
    }
}
