//! Exact dense linear algebra over ℚ and number fields.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactnum::rational::{common_denominator, from_bigint};

/// An exact coefficient domain: ℚ or a number field.
///
/// Elements carry their domain (`Ctx`) so that zero and one can be built
/// without a witness element.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn context(&self) -> Self::Ctx;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_rational_in(ctx: &Self::Ctx, q: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero (or a zero divisor).
    fn inv(&self) -> Option<Self>;
    /// The element as a rational number, when it is one.
    fn to_rational(&self) -> Option<BigRational>;

    fn rank_of(m: &Matrix<Self>) -> usize {
        m.rref().1.len()
    }

    fn det_of(m: &Matrix<Self>) -> Self {
        m.det_by_elimination()
    }
}

impl Scalar for BigRational {
    type Ctx = ();

    fn context(&self) {}
    fn zero_in(_: &()) -> Self {
        BigRational::zero()
    }
    fn one_in(_: &()) -> Self {
        BigRational::one()
    }
    fn from_rational_in(_: &(), q: &BigRational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn rank_of(m: &Matrix<Self>) -> usize {
        bareiss(&integer_rows(m)).0
    }

    fn det_of(m: &Matrix<Self>) -> Self {
        assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
        if m.rows == 0 {
            return BigRational::one();
        }
        let mut scale = BigInt::one();
        for i in 0..m.rows {
            scale *= common_denominator(m.row_slice(i));
        }
        let (_, det) = bareiss(&integer_rows(m));
        BigRational::new(det, scale)
    }
}

/// Rows scaled to integers by their own common denominators.
fn integer_rows(m: &Matrix<BigRational>) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|i| {
            let row = m.row_slice(i);
            let den = from_bigint(common_denominator(row));
            row.iter().map(|q| (q * &den).numer().clone()).collect()
        })
        .collect()
}

/// Fraction-free elimination; returns the rank and, for square input, the determinant.
pub fn bareiss(rows: &[Vec<BigInt>]) -> (usize, BigInt) {
    let n = rows.len();
    if n == 0 {
        return (0, BigInt::one());
    }
    let m = rows[0].len();
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut r = 0;
    for c in 0..m {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..n {
            for j in c + 1..m {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = if n == m && r == n { sign * &a[n - 1][n - 1] } else { BigInt::zero() };
    (r, det)
}

/// A dense row-major matrix over a [`Scalar`] domain.
#[derive(Clone, PartialEq)]
pub struct Matrix<K: Scalar> {
    rows: usize,
    cols: usize,
    ctx: K::Ctx,
    data: Vec<K>,
}

impl<K: Scalar> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[K]> = (0..self.rows).map(|i| self.row_slice(i)).collect();
        f.debug_struct("Matrix").field("rows", &rows).finish()
    }
}

impl<K: Scalar> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize, ctx: &K::Ctx) -> Self {
        Matrix { rows, cols, ctx: ctx.clone(), data: vec![K::zero_in(ctx); rows * cols] }
    }

    pub fn identity(n: usize, ctx: &K::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m.set(i, i, K::one_in(ctx));
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(ctx: &K::Ctx, rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, ctx: ctx.clone(), data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(ctx: &K::Ctx, rows: usize, cols: Vec<Vec<K>>) -> Self {
        let mut m = Self::zeros(rows, cols.len(), ctx);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, ctx: &K::Ctx, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, ctx: ctx.clone(), data }
    }

    pub fn diagonal(ctx: &K::Ctx, entries: &[K]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len(), ctx);
        for (i, v) in entries.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_slice(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row(&self, i: usize) -> Vec<K> {
        self.row_slice(i).to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[K] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, &self.ctx, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols, &self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row_slice(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(K::zero_in(&self.ctx), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    pub fn map<L: Scalar>(&self, ctx: &L::Ctx, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix { rows: self.rows, cols: self.cols, ctx: ctx.clone(), data: self.data.iter().map(f).collect() }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let found = (r..a.rows).find_map(|i| a.get(i, c).inv().map(|inv| (i, inv)));
            let Some((p, inv)) = found else {
                assert!(
                    (r..a.rows).all(|i| a.get(i, c).is_zero()),
                    "zero divisor met during elimination"
                );
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
            }
            for j in c..a.cols {
                let v = a.get(r, j).mul(&inv);
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let f = a.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..a.cols {
                    let v = a.get(i, j).sub(&f.mul(a.get(r, j)));
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        K::rank_of(self)
    }

    pub fn det(&self) -> K {
        K::det_of(self)
    }

    fn det_by_elimination(&self) -> K {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = K::one_in(&self.ctx);
        for c in 0..n {
            let found = (c..n).find_map(|i| a.get(i, c).inv().map(|inv| (i, inv)));
            let Some((p, inv)) = found else {
                return K::zero_in(&self.ctx);
            };
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                }
                det = det.neg();
            }
            det = det.mul(a.get(c, c));
            for i in c + 1..n {
                let f = a.get(i, c).mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = a.get(i, j).sub(&f.mul(a.get(c, j)));
                    a.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, &self.ctx, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                K::one_in(&self.ctx)
            } else {
                K::zero_in(&self.ctx)
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, &self.ctx, |i, j| r.get(i, n + j).clone()))
    }

    /// Some solution of `self · x = b`, if one exists.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let n = self.cols;
        let aug = Self::from_fn(self.rows, n + 1, &self.ctx, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut x = vec![K::zero_in(&self.ctx); n];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r.get(row, n).clone();
        }
        Some(x)
    }

    /// A basis of the right null space.
    pub fn kernel(&self) -> Vec<Vec<K>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![K::zero_in(&self.ctx); self.cols];
                v[f] = K::one_in(&self.ctx);
                for (row, &c) in pivots.iter().enumerate() {
                    v[c] = r.get(row, f).neg();
                }
                v
            })
            .collect()
    }
}

/// A subspace of `K^n`, stored as the nonzero rows of a reduced echelon form.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<K: Scalar> {
    ambient: usize,
    ctx: K::Ctx,
    basis: Vec<Vec<K>>,
    pivots: Vec<usize>,
}

impl<K: Scalar> Subspace<K> {
    pub fn span(ambient: usize, ctx: &K::Ctx, vectors: &[Vec<K>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient, ctx);
        }
        let m = Matrix::from_rows(ctx, vectors.to_vec());
        assert_eq!(m.cols(), ambient, "vector length mismatch");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace { ambient, ctx: ctx.clone(), basis, pivots }
    }

    pub fn zero(ambient: usize, ctx: &K::Ctx) -> Self {
        Subspace { ambient, ctx: ctx.clone(), basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize, ctx: &K::Ctx) -> Self {
        let id = Matrix::<K>::identity(ambient, ctx);
        Subspace { ambient, ctx: ctx.clone(), basis: (0..ambient).map(|i| id.row(i)).collect(), pivots: (0..ambient).collect() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vectors(&self) -> &[Vec<K>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }

    pub fn contains(&self, v: &[K]) -> bool {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let f = r[p].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                if !b[j].is_zero() {
                    r[j] = r[j].sub(&f.mul(&b[j]));
                }
            }
        }
        r.iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &self.ctx, &v)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(self.ambient, &self.ctx);
        }
        let (a, b) = (self.dim(), other.dim());
        let m = Matrix::from_fn(self.ambient, a + b, &self.ctx, |i, j| {
            if j < a {
                self.basis[j][i].clone()
            } else {
                other.basis[j - a][i].neg()
            }
        });
        let vecs: Vec<Vec<K>> = m
            .kernel()
            .into_iter()
            .map(|k| {
                (0..self.ambient)
                    .map(|i| {
                        (0..a).fold(K::zero_in(&self.ctx), |acc, j| acc.add(&k[j].mul(&self.basis[j][i])))
                    })
                    .collect()
            })
            .collect();
        Self::span(self.ambient, &self.ctx, &vecs)
    }

    /// Standard basis vectors completing `self` to the whole space.
    pub fn coordinate_complement(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}
