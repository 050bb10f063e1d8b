//! Exact arithmetic for nilpotent Lie algebras and certificates for Anosov automorphisms.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`]: rationals, polynomials, number fields and certified embeddings;
//! * [`linalg`]: exact matrices and subspaces over any [`linalg::Scalar`] domain;
//! * [`liealg`]: structure-constant Lie algebras and their series;
//! * [`pfaffian`]: Pfaffian forms of two-step algebras;
//! * [`anosov`]: diagonal automorphisms, lattices and the certification pipeline;
//! * [`catalog`]: named algebras and ready-to-certify cases.

pub mod anosov;
pub mod catalog;
pub mod exactnum;
pub mod liealg;
pub mod linalg;
pub mod pfaffian;
