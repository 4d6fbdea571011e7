//! Exact computer algebra for the Ore extensions
//! Λ(f) = K[x][y; f·d/dx] = K⟨x, y | yx − xy = f⟩ over K = ℚ or ℚ(ζ_k).
//!
//! Given f the crate computes the eigenform f = (x−ν)^s g((x−ν)^n), the
//! eigengroup G_f of affine substitutions that scale f, the automorphism
//! group Aut Λ(f) = 𝕊 ⋊ G_f as executable maps, and decides Λ(f) ≅ Λ(g)
//! with explicit witnesses g = λ f(αx + β).
//!
//! ```
//! use orext::{eigen::eigenform, iso::decide_isomorphism, parse::parse_poly, FieldDescriptor};
//!
//! let q = FieldDescriptor::rational();
//! let f = parse_poly("x^3 - x", &q).unwrap();
//! let form = eigenform(&f).unwrap();
//! assert_eq!((form.s, form.n), (1, 2));
//!
//! let g = parse_poly("8*x^3 - 2*x", &q).unwrap();
//! assert!(decide_isomorphism(&f, &g).unwrap().equivalent);
//! ```

pub mod cli;
pub mod eigen;
pub mod error;
pub mod iso;
pub mod ore;
pub mod parse;
pub mod poly;
pub mod scalar;
mod skew;
pub mod weyl;

pub use error::{Error, Result};
pub use ore::{OreAlgebra, OreAutomorphism, OreElement};
pub use poly::{Poly, RationalFunction};
pub use scalar::{FieldDescriptor, FieldElement, Rational};
pub use weyl::{B1Automorphism, B1Operator, MobiusMatrix};
