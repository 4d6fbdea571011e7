use thiserror::Error;

use crate::parse::ParseError;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("unsupported conductor {0} (supported: 1..=64)")]
    UnsupportedConductor(u32),
    #[error("no element of order {order} in {field} (roots of unity have order {available})")]
    NoElementOfOrder {
        order: u32,
        available: u32,
        field: String,
    },
    #[error("affine substitution requires a nonzero scale")]
    ZeroAffineScale,
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{divisor} does not divide {dividend}")]
    NotADivisor { divisor: String, dividend: String },
    #[error("no character with x -> {a}: f({a}) = {value} is nonzero")]
    NoCharacter { a: String, value: String },
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("unsupported over this field: {0}")]
    UnsupportedField(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("singular Moebius matrix")]
    SingularMatrix,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
