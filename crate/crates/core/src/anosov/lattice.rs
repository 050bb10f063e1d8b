use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AnosovError, DiagonalAutomorphism};
use crate::exactnum::{FieldAutomorphism, FieldElement, FieldHandle, NumberField};
use crate::liealg::{Bracket, LieAlgebra};
use crate::linalg::Matrix;

/// An invertible matrix whose columns are the new basis vectors in eigencoordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisMatrix {
    matrix: Matrix<FieldElement>,
}

impl BasisMatrix {
    pub fn new(matrix: Matrix<FieldElement>) -> Result<Self, AnosovError> {
        if matrix.rows() != matrix.cols() {
            return Err(AnosovError::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        if matrix.rank() != matrix.rows() {
            return Err(AnosovError::Singular);
        }
        Ok(BasisMatrix { matrix })
    }

    pub fn from_columns(field: &Arc<NumberField>, columns: Vec<Vec<FieldElement>>) -> Result<Self, AnosovError> {
        let n = columns.len();
        if columns.iter().any(|c| c.len() != n) {
            return Err(AnosovError::DimensionMismatch { expected: n, found: columns.iter().map(|c| c.len()).max().unwrap_or(0) });
        }
        BasisMatrix::new(Matrix::from_columns(field, n, columns))
    }

    pub fn identity(field: &Arc<NumberField>, dim: usize) -> Self {
        BasisMatrix { matrix: Matrix::identity(dim, field) }
    }

    pub fn matrix(&self) -> &Matrix<FieldElement> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `B · U` for a rational matrix `U`.
    pub fn times_rational(&self, u: &Matrix<BigRational>) -> Result<Self, AnosovError> {
        let f = self.matrix.ctx().clone();
        BasisMatrix::new(self.matrix.mul(&u.map(&f, |q| f.from_rational(q.clone()))))
    }
}

/// `[A]_β` with its integrality flags.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralityReport {
    /// Rational matrix when every entry is rational.
    pub matrix: Option<Matrix<BigRational>>,
    pub integral: bool,
    pub det: Option<BigRational>,
    pub det_pm1: bool,
    /// First entry that is irrational or not an integer.
    pub witness: Option<(usize, usize, FieldElement)>,
}

impl IntegralityReport {
    pub fn passed(&self) -> bool {
        self.integral && self.det_pm1
    }
}

/// `M = B⁻¹ · diag(A) · B`, which must lie in `GL_n(ℤ)`.
pub fn integrality_in_basis(a: &DiagonalAutomorphism, b: &BasisMatrix) -> Result<IntegralityReport, AnosovError> {
    let n = b.dim();
    if a.dim() != n {
        return Err(AnosovError::DimensionMismatch { expected: n, found: a.dim() });
    }
    let inv = b.matrix.inverse().ok_or(AnosovError::Singular)?;
    let db = Matrix::from_fn(n, n, a.field(), |i, j| a.eigenvalue(i) * b.matrix.get(i, j));
    let m = inv.mul(&db);
    let mut witness = None;
    let mut integral = true;
    let mut rational = true;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let e = m.get(i, j);
            match e.as_rational() {
                Some(q) => {
                    if !q.is_integer() {
                        integral = false;
                        witness.get_or_insert((i, j, e.clone()));
                    }
                    row.push(q);
                }
                None => {
                    rational = false;
                    integral = false;
                    witness.get_or_insert((i, j, e.clone()));
                    row.push(BigRational::from_integer(BigInt::from(0)));
                }
            }
        }
        rows.push(row);
    }
    if !rational {
        return Ok(IntegralityReport { matrix: None, integral, det: None, det_pm1: false, witness });
    }
    let q = Matrix::from_rows(&(), rows);
    let det = q.det();
    let det_pm1 = det.abs().is_one();
    Ok(IntegralityReport { matrix: Some(q), integral, det: Some(det), det_pm1, witness })
}

/// A structure constant of the transformed basis that is not a rational integer.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: FieldElement,
}

/// Structure constants in the basis `B`; all must be rational integers.
///
/// Returns the lattice algebra over ℚ on success.
pub fn zbasis_check(
    l: &LieAlgebra<FieldElement>,
    b: &BasisMatrix,
) -> Result<Result<LieAlgebra<BigRational>, StructureWitness>, AnosovError> {
    let t = l.change_basis(&b.matrix)?;
    let mut brackets = Vec::new();
    for br in t.brackets() {
        match br.coeff.as_rational() {
            Some(q) if q.is_integer() => brackets.push(Bracket::new(br.i, br.j, br.k, q)),
            _ => return Ok(Err(StructureWitness { i: br.i, j: br.j, k: br.k, value: br.coeff })),
        }
    }
    Ok(Ok(LieAlgebra::new(t.dim(), &(), brackets)?))
}

fn check_conjugations(field: &Arc<NumberField>, conj: &[FieldAutomorphism]) -> Result<(), AnosovError> {
    if conj.len() != field.degree() {
        return Err(AnosovError::ConjugateMismatch(format!(
            "{} conjugations for a degree-{} field",
            conj.len(),
            field.degree()
        )));
    }
    for (a, s) in conj.iter().enumerate() {
        if s.field() != field {
            return Err(AnosovError::ConjugateMismatch("conjugation over a different field".into()));
        }
        if conj[..a].iter().any(|t| t.generator_image() == s.generator_image()) {
            return Err(AnosovError::ConjugateMismatch(format!("conjugation {} repeats an earlier one", a + 1)));
        }
    }
    Ok(())
}

/// Conjugate-symmetric basis over orbits of basis vectors.
///
/// For an orbit `(i_0, …, i_{k-1})` the vectors are `Σ_c σ_c(θ^p) e_{i_c}` for
/// `p = 0, …, k-1`, with `θ` the field generator and `σ_c` the given conjugations.
/// Columns follow the orbit order, then `p`.
pub fn orbit_basis(
    field: &Arc<NumberField>,
    dim: usize,
    orbits: &[Vec<usize>],
    conj: &[FieldAutomorphism],
) -> Result<BasisMatrix, AnosovError> {
    check_conjugations(field, conj)?;
    let k = conj.len();
    let theta = field.generator();
    let powers: Vec<FieldElement> = (0..k).map(|p| theta.pow(p as i64).expect("nonnegative power")).collect();
    let mut cols = Vec::with_capacity(dim);
    for o in orbits {
        if o.len() != k {
            return Err(AnosovError::ConjugateMismatch(format!("orbit of length {} for {k} conjugations", o.len())));
        }
        for w in &powers {
            let mut v = vec![field.zero(); dim];
            for (c, &i) in o.iter().enumerate() {
                v[i] = conj[c].apply(w);
            }
            cols.push(v);
        }
    }
    BasisMatrix::from_columns(field, cols)
}

/// `L ⊕ … ⊕ L` with copy `c` twisted by the conjugation `σ_c`.
#[derive(Clone, Debug)]
pub struct TwistSum {
    pub algebra: LieAlgebra<FieldElement>,
    pub automorphism: DiagonalAutomorphism,
    pub basis: BasisMatrix,
}

pub fn galois_twist_sum(
    l: &LieAlgebra<FieldElement>,
    a: &DiagonalAutomorphism,
    conj: &[FieldAutomorphism],
) -> Result<TwistSum, AnosovError> {
    let field = l.ctx().clone();
    if a.field() != &field {
        return Err(AnosovError::FieldMismatch);
    }
    if a.dim() != l.dim() {
        return Err(AnosovError::DimensionMismatch { expected: l.dim(), found: a.dim() });
    }
    check_conjugations(&field, conj)?;
    let n = l.dim();
    let k = conj.len();
    let mut brackets = Vec::new();
    let mut eigenvalues = Vec::with_capacity(n * k);
    for (c, s) in conj.iter().enumerate() {
        let off = c * n;
        for b in l.brackets() {
            brackets.push(Bracket::new(b.i + off, b.j + off, b.k + off, s.apply(&b.coeff)));
        }
        eigenvalues.extend(a.eigenvalues().iter().map(|e| s.apply(e)));
    }
    let algebra = LieAlgebra::new(n * k, &field, brackets)?;
    let automorphism = DiagonalAutomorphism::new(&field, eigenvalues)?;
    let orbits: Vec<Vec<usize>> = (0..n).map(|i| (0..k).map(|c| i + c * n).collect()).collect();
    let basis = orbit_basis(&field, n * k, &orbits, conj)?;
    Ok(TwistSum { algebra, automorphism, basis })
}

/// A seeded random integer matrix with determinant ±1: a product of
/// elementary row operations, swaps and sign flips.
pub fn random_unimodular(n: usize, seed: u64) -> Matrix<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Matrix::<BigRational>::identity(n, &());
    if n == 0 {
        return m;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        match rng.gen_range(0..4) {
            0 if i != j => {
                let c = BigRational::from_integer(BigInt::from(rng.gen_range(-2i64..=2)));
                for col in 0..n {
                    let v = m.get(i, col) + &(&c * m.get(j, col));
                    m.set(i, col, v);
                }
            }
            1 if i != j => {
                for col in 0..n {
                    let a = m.get(i, col).clone();
                    let b = m.get(j, col).clone();
                    m.set(i, col, b);
                    m.set(j, col, a);
                }
            }
            2 => {
                for col in 0..n {
                    let v = -m.get(i, col);
                    m.set(i, col, v);
                }
            }
            _ => {}
        }
    }
    m
}
