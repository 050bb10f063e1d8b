//! Nilpotent Lie algebras given by structure constants.

mod algebra;
mod structure;

use thiserror::Error;

pub use algebra::{direct_sum, Bracket, GradedType, JacobiWitness, LieAlgebra};
pub use structure::{AbelianFactor, Reduction};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket [e{0}, e{0}] must vanish")]
    DiagonalBracket(usize),
    #[error("not nilpotent: lower central series stalls at dimension {stalled_at}")]
    NotNilpotent { stalled_at: usize },
    #[error("basis is not adapted: term {term} has dimension {expected} but {found} basis vectors")]
    NonAdaptedBasis { term: usize, expected: usize, found: usize },
    #[error("algebra is already abelian")]
    AlreadyAbelian,
    #[error("basis matrix is singular")]
    Singular,
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("summands are over different coefficient domains")]
    DomainMismatch,
    #[error("direct sum of no summands")]
    EmptySum,
    #[error("grading {found} does not match type {expected}")]
    GradingMismatch { expected: String, found: String },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::int;
    use crate::linalg::{Matrix, Subspace};
    use num_rational::BigRational;

    fn h3() -> LieAlgebra<BigRational> {
        LieAlgebra::from_table(3, &[(1, 2, 3, 1)]).unwrap()
    }

    #[test]
    fn heisenberg_type_and_center() {
        let h = h3();
        assert!(h.jacobi_check().is_ok());
        assert_eq!(h.graded_type().unwrap().0.to_string(), "(2,1)");
        assert_eq!(h.center().dim(), 1);
        assert_eq!(h.coordinate_layers().unwrap(), vec![0, 0, 1]);
        assert_eq!(h.structure_constant(1, 0, 2), int(-1));
    }

    #[test]
    fn flipped_and_duplicate_entries_fold() {
        let a = LieAlgebra::from_table(3, &[(2, 1, 3, 1), (1, 2, 3, 3)]).unwrap();
        assert_eq!(a.structure_constant(0, 1, 2), int(2));
        let z = LieAlgebra::from_table(3, &[(1, 2, 3, 1), (2, 1, 3, 1)]).unwrap();
        assert!(z.is_abelian());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(LieAlgebra::from_table(3, &[(1, 1, 2, 1)]), Err(LieError::DiagonalBracket(1)));
        assert!(matches!(LieAlgebra::from_table(3, &[(1, 2, 4, 1)]), Err(LieError::IndexOutOfRange { .. })));
    }

    #[test]
    fn jacobi_failure_has_witness() {
        // [e1,e2]=e3, [e2,e3]=e1 plus [e1,e3]=e1 is not a Lie algebra.
        let a = LieAlgebra::from_table(3, &[(1, 2, 3, 1), (2, 3, 1, 1), (1, 3, 1, 1)]).unwrap();
        let w = a.jacobi_check().unwrap_err();
        assert_eq!((w.i, w.j, w.k), (0, 1, 2));
    }

    #[test]
    fn so3_is_not_nilpotent() {
        let a = LieAlgebra::from_table(3, &[(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)]).unwrap();
        assert!(a.jacobi_check().is_ok());
        assert!(matches!(a.graded_type(), Err(LieError::NotNilpotent { .. })));
    }

    #[test]
    fn non_adapted_basis_detected() {
        let h = h3();
        let b = Matrix::from_rows(&(), vec![
            vec![int(1), int(0), int(0)],
            vec![int(0), int(1), int(1)],
            vec![int(0), int(0), int(1)],
        ]);
        let g = h.change_basis(&b).unwrap();
        assert!(matches!(g.coordinate_layers(), Err(LieError::NonAdaptedBasis { .. })));
        assert_eq!(g.graded_type().unwrap().0.parts, vec![2, 1]);
    }

    #[test]
    fn abelian_factor_of_h3_plus_r2() {
        let a = direct_sum(&[&h3(), &LieAlgebra::abelian(2, &())]).unwrap();
        let f = a.abelian_factor();
        assert_eq!(f.dim, 2);
        assert_eq!(f.complement.dim(), 3);
        assert!(f.complement.contains_subspace(&a.derived()));
        assert_eq!(f.factor.intersection(&f.complement).dim(), 0);
    }

    #[test]
    fn reduce_filiform() {
        let l4 = LieAlgebra::from_table(4, &[(1, 2, 3, 1), (1, 3, 4, 1)]).unwrap();
        let r = l4.reduce().unwrap();
        assert_eq!(r.quotient.graded_type().unwrap().0.parts, vec![2, 1]);
        assert_eq!(r.derived.dim(), 2);
        assert!(r.derived.is_abelian());
        assert_eq!(LieAlgebra::<BigRational>::abelian(2, &()).reduce(), Err(LieError::AlreadyAbelian));
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let s = Subspace::span(3, &(), &[vec![int(1), int(0), int(0)]]);
        assert_eq!(h3().quotient(&s).unwrap_err(), LieError::NotAnIdeal);
    }

    #[test]
    fn ad_image_in_h3() {
        let h = h3();
        assert_eq!(h.ad_image_dim(&h.unit_vector(0)), 1);
        assert_eq!(h.ad_image_dim(&h.unit_vector(2)), 0);
    }
}
