use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use super::LieError;
use crate::exactnum::{FieldElement, FieldHandle, NumberField};
use crate::linalg::{Matrix, Scalar};

/// One structure constant `[e_i, e_j] ∋ coeff · e_k` (0-based indices).
#[derive(Clone, Debug, PartialEq)]
pub struct Bracket<K> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: K,
}

impl<K> Bracket<K> {
    pub fn new(i: usize, j: usize, k: usize, coeff: K) -> Self {
        Bracket { i, j, k, coeff }
    }
}

/// The type `(n_1, …, n_r)` of a nilpotent Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedType {
    pub parts: Vec<usize>,
}

impl GradedType {
    pub fn new(parts: Vec<usize>) -> Self {
        GradedType { parts }
    }

    pub fn steps(&self) -> usize {
        self.parts.len()
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for GradedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", p.join(","))
    }
}

/// A finite-dimensional Lie algebra given by structure constants in a fixed basis.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; the rest follow from
/// antisymmetry.
#[derive(Clone, PartialEq)]
pub struct LieAlgebra<K: Scalar> {
    dim: usize,
    ctx: K::Ctx,
    tensor: BTreeMap<(usize, usize), Vec<(usize, K)>>,
    grading: Option<GradedType>,
}

impl<K: Scalar> fmt::Debug for LieAlgebra<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for ((i, j), v) in &self.tensor {
            m.entry(&(i + 1, j + 1), &v.iter().map(|(k, c)| (k + 1, c)).collect::<Vec<_>>());
        }
        m.finish()
    }
}

impl<K: Scalar> LieAlgebra<K> {
    /// Builds an algebra from bracket entries; `i > j` entries are folded in
    /// with a sign change and duplicates are summed.
    pub fn new(dim: usize, ctx: &K::Ctx, brackets: impl IntoIterator<Item = Bracket<K>>) -> Result<Self, LieError> {
        let mut acc: BTreeMap<(usize, usize), BTreeMap<usize, K>> = BTreeMap::new();
        for b in brackets {
            for idx in [b.i, b.j, b.k] {
                if idx >= dim {
                    return Err(LieError::IndexOutOfRange { index: idx + 1, dim });
                }
            }
            if b.i == b.j {
                return Err(LieError::DiagonalBracket(b.i + 1));
            }
            let (key, c) = if b.i < b.j { ((b.i, b.j), b.coeff) } else { ((b.j, b.i), b.coeff.neg()) };
            let slot = acc.entry(key).or_default();
            let v = match slot.remove(&b.k) {
                Some(old) => old.add(&c),
                None => c,
            };
            slot.insert(b.k, v);
        }
        let tensor = acc
            .into_iter()
            .filter_map(|(key, m)| {
                let v: Vec<(usize, K)> = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                (!v.is_empty()).then_some((key, v))
            })
            .collect();
        Ok(LieAlgebra { dim, ctx: ctx.clone(), tensor, grading: None })
    }

    pub fn abelian(dim: usize, ctx: &K::Ctx) -> Self {
        LieAlgebra { dim, ctx: ctx.clone(), tensor: BTreeMap::new(), grading: None }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }

    pub fn is_abelian(&self) -> bool {
        self.tensor.is_empty()
    }

    /// Nonzero structure constants with `i < j`, in index order.
    pub fn brackets(&self) -> Vec<Bracket<K>> {
        self.tensor
            .iter()
            .flat_map(|(&(i, j), v)| v.iter().map(move |(k, c)| Bracket::new(i, j, *k, c.clone())))
            .collect()
    }

    /// Number of nonzero structure constants with `i < j`.
    pub fn nonzero_constants(&self) -> usize {
        self.tensor.values().map(|v| v.len()).sum()
    }

    /// The coefficient of `e_k` in `[e_i, e_j]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> K {
        let (key, sign) = if i < j { ((i, j), false) } else { ((j, i), true) };
        let c = self
            .tensor
            .get(&key)
            .and_then(|v| v.iter().find(|(kk, _)| *kk == k))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| K::zero_in(&self.ctx));
        if sign {
            c.neg()
        } else {
            c
        }
    }

    /// `[e_i, e_j]` as a dense vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<K> {
        let mut out = vec![K::zero_in(&self.ctx); self.dim];
        if i == j {
            return out;
        }
        let (key, sign) = if i < j { ((i, j), false) } else { ((j, i), true) };
        if let Some(v) = self.tensor.get(&key) {
            for (k, c) in v {
                out[*k] = if sign { c.neg() } else { c.clone() };
            }
        }
        out
    }

    /// The bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[K], y: &[K]) -> Vec<K> {
        assert!(x.len() == self.dim && y.len() == self.dim, "vector length mismatch");
        let mut out = vec![K::zero_in(&self.ctx); self.dim];
        for (&(i, j), v) in &self.tensor {
            let w = x[i].mul(&y[j]).sub(&x[j].mul(&y[i]));
            if w.is_zero() {
                continue;
            }
            for (k, c) in v {
                out[*k] = out[*k].add(&w.mul(c));
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<K> {
        let mut v = vec![K::zero_in(&self.ctx); self.dim];
        v[i] = K::one_in(&self.ctx);
        v
    }

    /// Exact Jacobi identity on all basis triples; returns the first failing triple.
    pub fn jacobi_check(&self) -> Result<(), JacobiWitness<K>> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let eij = self.basis_bracket(i, j);
                for k in j + 1..self.dim {
                    let ek = self.unit_vector(k);
                    let ei = self.unit_vector(i);
                    let ej = self.unit_vector(j);
                    let a = self.bracket(&eij, &ek);
                    let b = self.bracket(&self.basis_bracket(j, k), &ei);
                    let c = self.bracket(&self.basis_bracket(k, i), &ej);
                    let s: Vec<K> = a.iter().zip(&b).zip(&c).map(|((x, y), z)| x.add(y).add(z)).collect();
                    if s.iter().any(|v| !v.is_zero()) {
                        return Err(JacobiWitness { i, j, k, value: s });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `ad x` (column `b` is `[x, e_b]`).
    pub fn ad_matrix(&self, x: &[K]) -> Matrix<K> {
        let cols: Vec<Vec<K>> = (0..self.dim).map(|b| self.bracket(x, &self.unit_vector(b))).collect();
        Matrix::from_columns(&self.ctx, self.dim, cols)
    }

    pub fn ad_image_dim(&self, x: &[K]) -> usize {
        self.ad_matrix(x).rank()
    }

    /// Structure constants in the basis given by the columns of `b`.
    pub fn change_basis(&self, b: &Matrix<K>) -> Result<LieAlgebra<K>, LieError> {
        if b.rows() != self.dim || b.cols() != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, found: b.rows().max(b.cols()) });
        }
        let inv = b.inverse().ok_or(LieError::Singular)?;
        let cols: Vec<Vec<K>> = (0..self.dim).map(|j| b.column(j)).collect();
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.bracket(&cols[i], &cols[j]);
                if v.iter().all(|c| c.is_zero()) {
                    continue;
                }
                for (k, c) in inv.mul_vec(&v).into_iter().enumerate() {
                    if !c.is_zero() {
                        brackets.push(Bracket::new(i, j, k, c));
                    }
                }
            }
        }
        let out = LieAlgebra::new(self.dim, &self.ctx, brackets)?;
        self.verify_equivariance(&out, b);
        Ok(out)
    }

    fn verify_equivariance(&self, new: &LieAlgebra<K>, b: &Matrix<K>) {
        let ctx = &self.ctx;
        let x: Vec<K> = (0..self.dim).map(|_| K::one_in(ctx)).collect();
        let y: Vec<K> = (0..self.dim)
            .map(|i| K::from_rational_in(ctx, &BigRational::from_integer(((i * i + 1) as i64).into())))
            .collect();
        let lhs = b.mul_vec(&new.bracket(&x, &y));
        let rhs = self.bracket(&b.mul_vec(&x), &b.mul_vec(&y));
        assert_eq!(lhs, rhs, "change of basis broke bracket equivariance");
    }

    /// Applies `f` to every structure constant.
    pub fn map_scalars<L: Scalar>(&self, ctx: &L::Ctx, f: impl Fn(&K) -> L) -> LieAlgebra<L> {
        let tensor = self
            .tensor
            .iter()
            .map(|(key, v)| (*key, v.iter().map(|(k, c)| (*k, f(c))).filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>()))
            .filter(|(_, v)| !v.is_empty())
            .collect();
        LieAlgebra { dim: self.dim, ctx: ctx.clone(), tensor, grading: self.grading.clone() }
    }

    /// Attaches a grading after checking it matches the coordinate layers.
    pub fn with_grading(mut self, grading: GradedType) -> Result<Self, LieError> {
        let (ty, _) = self.graded_type()?;
        if ty != grading {
            return Err(LieError::GradingMismatch { expected: ty.to_string(), found: grading.to_string() });
        }
        self.coordinate_layers()?;
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn stored_grading(&self) -> Option<&GradedType> {
        self.grading.as_ref()
    }
}

impl LieAlgebra<BigRational> {
    /// Builds a rational algebra from 1-based `(i, j, k, c)` rows.
    pub fn from_table(dim: usize, rows: &[(usize, usize, usize, i64)]) -> Result<Self, LieError> {
        let mut bs = Vec::with_capacity(rows.len());
        for &(i, j, k, c) in rows {
            if i == 0 || j == 0 || k == 0 {
                return Err(LieError::IndexOutOfRange { index: 0, dim });
            }
            bs.push(Bracket::new(i - 1, j - 1, k - 1, BigRational::from_integer(c.into())));
        }
        LieAlgebra::new(dim, &(), bs)
    }

    /// The same structure constants read in a number field.
    pub fn lift(&self, field: &Arc<NumberField>) -> LieAlgebra<FieldElement> {
        self.map_scalars(field, |q| field.from_rational(q.clone()))
    }
}

/// A basis triple where the Jacobi identity fails, with the offending cyclic sum.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiWitness<K> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Vec<K>,
}

/// Direct sum with block-diagonal structure constants.
pub fn direct_sum<K: Scalar>(parts: &[&LieAlgebra<K>]) -> Result<LieAlgebra<K>, LieError> {
    let Some(first) = parts.first() else {
        return Err(LieError::EmptySum);
    };
    let ctx = first.ctx.clone();
    let mut offset = 0;
    let mut brackets = Vec::new();
    for p in parts {
        if p.ctx != ctx {
            return Err(LieError::DomainMismatch);
        }
        for b in p.brackets() {
            brackets.push(Bracket::new(b.i + offset, b.j + offset, b.k + offset, b.coeff));
        }
        offset += p.dim;
    }
    LieAlgebra::new(offset, &ctx, brackets)
}
