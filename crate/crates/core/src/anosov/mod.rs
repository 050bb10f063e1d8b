//! Certification of Anosov automorphisms on nilpotent Lie algebras.

mod automorphism;
mod certificate;
mod lattice;

use thiserror::Error;

use crate::exactnum::ExactError;
use crate::liealg::LieError;

pub use automorphism::{
    hyperbolicity_check, is_automorphism, lemma_m1_filter, splitting_of, unit_products_check, BlockProduct,
    BracketWitness, DiagonalAutomorphism, EigenGroup, Hyperbolicity, M1Verdict, ProductClass, Splitting,
};
pub use certificate::{certify_anosov, AnosovCertificate, CertificateSummary, CertifyOptions, FailureWitness, Verdict};
pub use lattice::{
    galois_twist_sum, integrality_in_basis, orbit_basis, random_unimodular, zbasis_check, BasisMatrix, IntegralityReport,
    StructureWitness, TwistSum,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AnosovError {
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("eigenvalue {0} is zero")]
    ZeroEigenvalue(usize),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("basis matrix is singular")]
    Singular,
    #[error("{count} eigenvalues share a minimal polynomial of degree {degree}")]
    GroupingInconsistent { degree: usize, count: usize },
    #[error("conjugate mismatch: {0}")]
    ConjugateMismatch(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
