use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::AnosovError;
use crate::exactnum::{
    certify_abs_neq_one_capped, minimal_poly, CircleVerdict, FieldElement, FieldHandle, IntPolynomial,
    NumberField,
};
use crate::liealg::LieAlgebra;
use crate::linalg::Matrix;

/// A semisimple automorphism given by its eigenvalues on the algebra's basis.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalAutomorphism {
    field: Arc<NumberField>,
    eigenvalues: Vec<FieldElement>,
}

impl DiagonalAutomorphism {
    pub fn new(field: &Arc<NumberField>, eigenvalues: Vec<FieldElement>) -> Result<Self, AnosovError> {
        for (i, e) in eigenvalues.iter().enumerate() {
            if e.field() != field {
                return Err(AnosovError::FieldMismatch);
            }
            if e.is_zero() {
                return Err(AnosovError::ZeroEigenvalue(i));
            }
        }
        Ok(DiagonalAutomorphism { field: field.clone(), eigenvalues })
    }

    pub fn identity(field: &Arc<NumberField>, dim: usize) -> Self {
        DiagonalAutomorphism { field: field.clone(), eigenvalues: vec![field.one(); dim] }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[FieldElement] {
        &self.eigenvalues
    }

    pub fn eigenvalue(&self, i: usize) -> &FieldElement {
        &self.eigenvalues[i]
    }

    /// A copy with eigenvalue `i` replaced.
    pub fn with_eigenvalue(&self, i: usize, v: FieldElement) -> Result<Self, AnosovError> {
        let mut e = self.eigenvalues.clone();
        e[i] = v;
        DiagonalAutomorphism::new(&self.field, e)
    }

    /// Reorders eigenvalues so that the new `i`-th is the old `perm[i]`-th.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let eigenvalues = perm.iter().map(|&p| self.eigenvalues[p].clone()).collect();
        DiagonalAutomorphism { field: self.field.clone(), eigenvalues }
    }

    /// Every eigenvalue squared.
    pub fn square(&self) -> Self {
        let eigenvalues = self.eigenvalues.iter().map(|e| e * e).collect();
        DiagonalAutomorphism { field: self.field.clone(), eigenvalues }
    }

    pub fn matrix(&self) -> Matrix<FieldElement> {
        Matrix::diagonal(&self.field, &self.eigenvalues)
    }
}

/// A stored bracket `[e_i, e_j] ∋ c e_k` with `λ_i λ_j ≠ λ_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// For a diagonal map, bracket preservation is `λ_i λ_j = λ_k` on every nonzero
/// constant; returns the first bracket that fails.
///
/// Panics if the dimensions differ.
pub fn is_automorphism(l: &LieAlgebra<FieldElement>, a: &DiagonalAutomorphism) -> Result<(), BracketWitness> {
    assert_eq!(l.dim(), a.dim(), "automorphism dimension mismatch");
    let e = a.eigenvalues();
    match l.brackets().into_iter().find(|b| &e[b.i] * &e[b.j] != e[b.k]) {
        Some(b) => Err(BracketWitness { i: b.i, j: b.j, k: b.k }),
        None => Ok(()),
    }
}

/// Eigenvalues of one block grouped by minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenGroup {
    pub min_poly: IntPolynomial,
    pub members: Vec<usize>,
}

/// The degrees `[k_1; …; k_m]` of the irreducible factors of a block's
/// characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub degrees: Vec<usize>,
    pub groups: Vec<EigenGroup>,
    /// Some factor has degree one.
    pub low_degree: bool,
}

impl std::fmt::Display for Splitting {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let d: Vec<String> = self.degrees.iter().map(|k| k.to_string()).collect();
        write!(f, "[{}]", d.join(";"))
    }
}

/// Groups eigenvalues by minimal polynomial; a group of `c` roots of a degree-`d`
/// polynomial contributes `c / d` factors of degree `d`.
pub fn splitting_of(eigenvalues: &[FieldElement]) -> Result<Splitting, AnosovError> {
    let mut by_poly: BTreeMap<String, EigenGroup> = BTreeMap::new();
    for (i, e) in eigenvalues.iter().enumerate() {
        let p = minimal_poly(e).to_int();
        by_poly
            .entry(p.to_string())
            .or_insert_with(|| EigenGroup { min_poly: p, members: Vec::new() })
            .members
            .push(i);
    }
    let mut groups: Vec<EigenGroup> = by_poly.into_values().collect();
    groups.sort_by_key(|g| g.members[0]);
    let mut degrees = Vec::new();
    for g in &groups {
        let d = g.min_poly.degree().unwrap_or(0);
        if d == 0 || g.members.len() % d != 0 {
            return Err(AnosovError::GroupingInconsistent { degree: d, count: g.members.len() });
        }
        degrees.extend(std::iter::repeat(d).take(g.members.len() / d));
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let low_degree = degrees.contains(&1);
    Ok(Splitting { degrees, groups, low_degree })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum M1Verdict {
    Admissible,
    Violates(u8),
}

impl std::fmt::Display for M1Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            M1Verdict::Admissible => write!(f, "ADMISSIBLE"),
            M1Verdict::Violates(r) => write!(f, "VIOLATES rule {r}"),
        }
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Degree constraints on a product `αβ` of eigenvalues.
///
/// Rule 1: coprime degrees force `deg(αβ)` to be composite.
/// Rule 2 (only when `αβ` is itself an eigenvalue): the larger degree and
/// `deg(αβ)` must share a factor.
pub fn lemma_m1_filter(deg_a: usize, deg_b: usize, deg_ab: usize, product_is_eigenvalue: bool) -> M1Verdict {
    if deg_a.gcd(&deg_b) == 1 && is_prime(deg_ab) {
        return M1Verdict::Violates(1);
    }
    if product_is_eigenvalue && deg_a.max(deg_b).gcd(&deg_ab) == 1 {
        return M1Verdict::Violates(2);
    }
    M1Verdict::Admissible
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hyperbolicity {
    /// Every conjugate of every eigenvalue is at least `margin` away from the unit circle.
    Hyperbolic { margin: BigRational },
    /// Eigenvalue `index` has a conjugate on the unit circle.
    Fails { index: usize },
    /// Eigenvalue `index` could not be separated from the circle within the cap.
    Inconclusive { index: usize },
}

pub fn hyperbolicity_check(a: &DiagonalAutomorphism, precision_cap: u32) -> Hyperbolicity {
    let mut margin: Option<BigRational> = None;
    let mut memo: BTreeMap<Vec<BigRational>, CircleVerdict> = BTreeMap::new();
    let mut inconclusive = None;
    for (i, e) in a.eigenvalues().iter().enumerate() {
        let v = memo
            .entry(e.coords().to_vec())
            .or_insert_with(|| certify_abs_neq_one_capped(e, precision_cap))
            .clone();
        match v {
            CircleVerdict::OnCircle => return Hyperbolicity::Fails { index: i },
            CircleVerdict::Inconclusive => {
                inconclusive.get_or_insert(i);
            }
            CircleVerdict::OffCircle { margin: m } => {
                if margin.as_ref().map_or(true, |cur| m < *cur) {
                    margin = Some(m);
                }
            }
        }
    }
    match inconclusive {
        Some(index) => Hyperbolicity::Inconclusive { index },
        None => Hyperbolicity::Hyperbolic { margin: margin.unwrap_or_else(BigRational::zero) },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductClass {
    One,
    MinusOne,
    Other,
}

/// Exact product of the eigenvalues on one layer.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockProduct {
    pub indices: Vec<usize>,
    pub product: FieldElement,
    pub class: ProductClass,
}

pub fn unit_products_check(a: &DiagonalAutomorphism, blocks: &[Vec<usize>]) -> Vec<BlockProduct> {
    blocks
        .iter()
        .map(|b| {
            let product = b.iter().fold(a.field().one(), |acc, &i| &acc * a.eigenvalue(i));
            let class = if product.is_one() {
                ProductClass::One
            } else if product.neg().is_one() {
                ProductClass::MinusOne
            } else {
                ProductClass::Other
            };
            BlockProduct { indices: b.clone(), product, class }
        })
        .collect()
}
