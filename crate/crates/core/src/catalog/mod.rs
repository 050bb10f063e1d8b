//! Named algebras and ready-to-certify constructions.

mod algebras;
mod cases;

use thiserror::Error;

use crate::anosov::AnosovError;
use crate::exactnum::ExactError;
use crate::liealg::LieError;

pub use algebras::{algebra_entry, catalog_algebra, catalog_algebra_int, AlgebraEntry, ALGEBRAS};
pub use cases::{
    chebyshev_conjugation, cubic_field, paper_case, quadratic_conjugation, quadratic_field, quintic_field, PaperCase,
    CASE_NAMES,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("{name} takes {expected} parameters, got {found}")]
    ParamCount { name: String, expected: usize, found: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Anosov(#[from] AnosovError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
