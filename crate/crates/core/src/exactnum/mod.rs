//! Exact rational, polynomial and number-field arithmetic.

pub mod circle;
pub mod complex;
pub mod factor;
pub mod field;
pub mod modp;
pub mod poly;
pub mod rational;
pub mod roots;

use thiserror::Error;

pub use circle::{
    certify_abs_neq_one, certify_abs_neq_one_capped, poly_unit_check, unit_certificate, CircleVerdict,
    UnitCertificate,
};
pub use complex::{ComplexBall, ComplexRational};
pub use factor::{Irreducibility, IrreducibilityWitness};
pub use field::{
    elem_arith, elem_inv, embeddings, field_compose, field_new, minimal_poly, ArithOp, Composite,
    FieldAutomorphism, FieldElement, FieldEmbedding, FieldHandle, MinimalPolynomial, NumberField,
};
pub use poly::{IntPolynomial, RatPolynomial};
pub use rational::Rational;
pub use roots::{RootDiscs, DEFAULT_PRECISION_CAP, INITIAL_PRECISION};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("modulus {0} is not monic of positive degree")]
    NotMonic(String),
    #[error("modulus {modulus} is reducible (factor {factor})")]
    Reducible { modulus: String, factor: String },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("irreducibility of {0} is unverified")]
    UnverifiedField(String),
    #[error("root discs not separated at {0} bits")]
    PrecisionExhausted(u32),
    #[error("not a field: {0}")]
    NotAField(String),
    #[error("conjugate mismatch: {0}")]
    ConjugateMismatch(String),
}
