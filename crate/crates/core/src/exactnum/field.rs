//! Number fields `ℚ[t]/(m(t))` with certified complex embeddings.

use std::collections::BTreeMap;
use std::fmt;
use std::ops;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::complex::{taylor_at, ComplexBall};
use super::factor::{analyze, Irreducibility, IrreducibilityWitness};
use super::poly::{IntPolynomial, RatPolynomial};
use super::rational::{common_denominator, int, is_integer};
use super::roots::{isolate_roots_capped, RootDiscs, DEFAULT_PRECISION_CAP, INITIAL_PRECISION};
use super::ExactError;
use crate::linalg::Matrix;

/// The field `ℚ[t]/(m(t))` for a monic irreducible integer polynomial `m`.
pub struct NumberField {
    modulus: IntPolynomial,
    modulus_q: RatPolynomial,
    witness: IrreducibilityWitness,
    discs: Arc<RootDiscs>,
    warnings: Vec<String>,
    refined: Mutex<BTreeMap<u32, Arc<RootDiscs>>>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumberField")
            .field("modulus", &self.modulus.to_string())
            .field("witness", &self.witness)
            .finish()
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}

impl Eq for NumberField {}

/// Builds the field defined by a monic polynomial, proving irreducibility when possible.
pub fn field_new(m: IntPolynomial) -> Result<Arc<NumberField>, ExactError> {
    NumberField::new(m).map(Arc::new)
}

impl NumberField {
    pub fn new(m: IntPolynomial) -> Result<Self, ExactError> {
        if m.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        if !m.is_monic() || m.degree() == Some(0) {
            return Err(ExactError::NotMonic(m.to_string()));
        }
        let witness = match analyze(&m) {
            Irreducibility::Reducible(factor) => {
                return Err(ExactError::Reducible { modulus: m.to_string(), factor: factor.to_string() })
            }
            Irreducibility::Irreducible(w) => w,
        };
        Self::with_witness(m, witness, INITIAL_PRECISION)
    }

    fn with_witness(m: IntPolynomial, witness: IrreducibilityWitness, bits: u32) -> Result<Self, ExactError> {
        let modulus_q = m.to_rational();
        let discs = isolate_roots_capped(&modulus_q, bits, DEFAULT_PRECISION_CAP.max(bits))
            .ok_or(ExactError::PrecisionExhausted(DEFAULT_PRECISION_CAP.max(bits)))?;
        let mut warnings = Vec::new();
        if !witness.is_verified() {
            warnings.push(format!("irreducibility of {m} is unverified"));
        }
        Ok(NumberField {
            modulus: m,
            modulus_q,
            witness,
            discs: Arc::new(discs),
            warnings,
            refined: Mutex::new(BTreeMap::new()),
        })
    }

    /// The same field with root discs at twice the working precision.
    pub fn refine(&self) -> Result<NumberField, ExactError> {
        let bits = self.discs.precision * 2;
        let discs = self.discs_at(bits)?;
        Ok(NumberField {
            modulus: self.modulus.clone(),
            modulus_q: self.modulus_q.clone(),
            witness: self.witness.clone(),
            discs,
            warnings: self.warnings.clone(),
            refined: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn modulus(&self) -> &IntPolynomial {
        &self.modulus
    }

    pub fn modulus_rational(&self) -> &RatPolynomial {
        &self.modulus_q
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn witness(&self) -> &IrreducibilityWitness {
        &self.witness
    }

    pub fn is_verified(&self) -> bool {
        self.witness.is_verified()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn root_discs(&self) -> &RootDiscs {
        &self.discs
    }

    /// Root discs at working precision at least `bits` (cached).
    pub fn discs_at(&self, bits: u32) -> Result<Arc<RootDiscs>, ExactError> {
        if bits <= self.discs.precision {
            return Ok(self.discs.clone());
        }
        let mut cache = self.refined.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(d) = cache.get(&bits) {
            return Ok(d.clone());
        }
        let d = super::roots::isolate_roots(&self.modulus_q, bits)
            .ok_or(ExactError::PrecisionExhausted(bits))?;
        let d = Arc::new(d);
        cache.insert(bits, d.clone());
        Ok(d)
    }
}

/// Convenience constructors on a shared field handle.
pub trait FieldHandle {
    fn element(&self, coords: Vec<BigRational>) -> FieldElement;
    fn from_poly(&self, p: &RatPolynomial) -> FieldElement;
    fn from_int(&self, n: i64) -> FieldElement;
    fn from_rational(&self, q: BigRational) -> FieldElement;
    fn generator(&self) -> FieldElement;
    fn zero(&self) -> FieldElement;
    fn one(&self) -> FieldElement;
}

impl FieldHandle for Arc<NumberField> {
    /// Panics when `coords` has more than `degree` entries.
    fn element(&self, mut coords: Vec<BigRational>) -> FieldElement {
        let d = self.degree();
        assert!(coords.len() <= d, "too many coordinates for a degree-{d} field");
        coords.resize(d, BigRational::zero());
        FieldElement { field: self.clone(), coords }
    }

    fn from_poly(&self, p: &RatPolynomial) -> FieldElement {
        let r = p.rem(&self.modulus_q);
        self.element(r.into_coeffs())
    }

    fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(int(n))
    }

    fn from_rational(&self, q: BigRational) -> FieldElement {
        self.element(vec![q])
    }

    fn generator(&self) -> FieldElement {
        if self.degree() == 1 {
            return self.from_poly(&RatPolynomial::x());
        }
        self.element(vec![BigRational::zero(), BigRational::one()])
    }

    fn zero(&self) -> FieldElement {
        self.element(Vec::new())
    }

    fn one(&self) -> FieldElement {
        self.from_int(1)
    }
}

/// An element of a number field, stored by its coordinates in `1, t, …, t^{d-1}`.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coords: Vec<BigRational>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field) && self.coords == other.coords
    }
}

/// Arithmetic operation selector for [`elem_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked field arithmetic.
pub fn elem_arith(op: ArithOp, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, ExactError> {
    a.check_same(b)?;
    Ok(match op {
        ArithOp::Add => a.add_unchecked(b),
        ArithOp::Sub => a.sub_unchecked(b),
        ArithOp::Mul => a.mul_unchecked(b),
    })
}

/// Checked inverse.
pub fn elem_inv(a: &FieldElement) -> Result<FieldElement, ExactError> {
    a.inv()
}

impl FieldElement {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn to_poly(&self) -> RatPolynomial {
        RatPolynomial::new(self.coords.clone())
    }

    fn check_same(&self, other: &Self) -> Result<(), ExactError> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(ExactError::FieldMismatch)
        }
    }

    fn assert_same(&self, other: &Self) {
        if let Err(e) = self.check_same(other) {
            panic!("{e}: {} vs {}", self.field.modulus, other.field.modulus);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The element as a rational number when it lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// The element as an integer when it lies in ℤ.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(is_integer).map(|q| q.numer().clone())
    }

    fn add_unchecked(&self, b: &Self) -> Self {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        }
    }

    fn sub_unchecked(&self, b: &Self) -> Self {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect(),
        }
    }

    fn mul_unchecked(&self, b: &Self) -> Self {
        let d = self.coords.len();
        let (xa, da) = integer_parts(&self.coords);
        let (xb, db) = integer_parts(&b.coords);
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in xa.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in xb.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        // reduce using t^d = -(m_0 + … + m_{d-1} t^{d-1})
        let m = self.field.modulus.coeffs();
        for k in (d..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (j, mj) in m.iter().enumerate().take(d) {
                if !mj.is_zero() {
                    prod[k - d + j] -= &c * mj;
                }
            }
        }
        prod.truncate(d);
        let den = da * db;
        let coords = prod.into_iter().map(|c| BigRational::new(c, den.clone())).collect();
        FieldElement { field: self.field.clone(), coords }
    }

    pub fn neg(&self) -> Self {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| c * q).collect() }
    }

    /// Inverse by extended Euclid against the modulus.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if !self.field.is_verified() {
            return Err(ExactError::UnverifiedField(self.field.modulus.to_string()));
        }
        self.inv_raw().ok_or(ExactError::DivisionByZero)
    }

    fn inv_raw(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s) = self.to_poly().gcd_inverse(&self.field.modulus_q);
        if g.degree() != Some(0) {
            return None;
        }
        Some(self.field.from_poly(&s))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&b);
            }
            b = b.mul_unchecked(&b);
            n >>= 1;
        }
        Ok(acc)
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval_poly(&self, p: &RatPolynomial) -> Self {
        p.coeffs().iter().rev().fold(self.field.zero(), |acc, c| {
            acc.mul_unchecked(self).add_unchecked(&self.field.from_rational(c.clone()))
        })
    }

    /// The multiplication-by-`self` matrix on the power basis (columns are images of `t^j`).
    pub fn multiplication_matrix(&self) -> Matrix<BigRational> {
        let d = self.field.degree();
        let mut cols = Vec::with_capacity(d);
        let mut basis = self.field.one();
        let t = self.field.generator();
        for _ in 0..d {
            cols.push(self.mul_unchecked(&basis).coords);
            basis = basis.mul_unchecked(&t);
        }
        Matrix::from_columns(&(), d, cols)
    }

    pub fn trace(&self) -> BigRational {
        let m = self.multiplication_matrix();
        (0..m.rows()).fold(BigRational::zero(), |acc, i| acc + m.get(i, i))
    }

    pub fn norm(&self) -> BigRational {
        self.multiplication_matrix().det()
    }

    /// Certified discs for the images of `self` under every complex embedding,
    /// ordered like the field's root discs.
    pub fn embeddings(&self) -> Vec<ComplexBall> {
        embed_with(self, self.field.root_discs())
    }

    /// Embeddings computed from root discs of at least `bits` precision.
    pub fn embeddings_at(&self, bits: u32) -> Result<Vec<ComplexBall>, ExactError> {
        let discs = self.field.discs_at(bits)?;
        Ok(embed_with(self, &discs))
    }
}

/// Embeddings of `a` as certified discs; errors only past the precision cap.
pub fn embeddings(a: &FieldElement) -> Result<Vec<ComplexBall>, ExactError> {
    Ok(a.embeddings())
}

fn embed_with(a: &FieldElement, discs: &RootDiscs) -> Vec<ComplexBall> {
    let p = a.to_poly();
    discs
        .discs
        .iter()
        .map(|disc| {
            let t = taylor_at(&p, &disc.center);
            if t.is_empty() {
                return ComplexBall::exact(Default::default());
            }
            let mut radius = BigRational::zero();
            let mut rk = BigRational::one();
            for c in &t[1..] {
                rk = &rk * &disc.radius;
                if rk.is_zero() {
                    break;
                }
                radius += c.abs_upper_l1() * &rk;
            }
            ComplexBall { center: t[0].clone(), radius }
        })
        .collect()
}

macro_rules! binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl ops::$tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            /// Panics when the operands live in different fields.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.assert_same(rhs);
                self.$inner(rhs)
            }
        }
        impl ops::$tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl ops::$tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl ops::$tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_unchecked);
binop!(Sub, sub, sub_unchecked);
binop!(Mul, mul, mul_unchecked);

impl ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

impl ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(&self)
    }
}

impl crate::linalg::Scalar for FieldElement {
    type Ctx = Arc<NumberField>;

    fn context(&self) -> Arc<NumberField> {
        self.field.clone()
    }
    fn zero_in(ctx: &Arc<NumberField>) -> Self {
        ctx.zero()
    }
    fn one_in(ctx: &Arc<NumberField>) -> Self {
        ctx.one()
    }
    fn from_rational_in(ctx: &Arc<NumberField>, q: &BigRational) -> Self {
        ctx.from_rational(q.clone())
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
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
        FieldElement::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        self.inv_raw()
    }
    fn to_rational(&self) -> Option<BigRational> {
        self.as_rational()
    }
}

/// A field automorphism determined by the image of the generator.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldAutomorphism {
    image: FieldElement,
}

impl FieldAutomorphism {
    /// Checks `m(image) = 0` exactly.
    pub fn new(image: FieldElement) -> Result<Self, ExactError> {
        let m = image.field.modulus_q.clone();
        if !image.eval_poly(&m).is_zero() {
            return Err(ExactError::ConjugateMismatch(format!(
                "{image} is not a root of {}",
                image.field.modulus
            )));
        }
        Ok(FieldAutomorphism { image })
    }

    pub fn identity(field: &Arc<NumberField>) -> Self {
        FieldAutomorphism { image: field.generator() }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.image.field
    }

    pub fn generator_image(&self) -> &FieldElement {
        &self.image
    }

    /// Panics when `a` lives in another field.
    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        a.assert_same(&self.image);
        self.image.eval_poly(&a.to_poly())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        FieldAutomorphism { image: self.apply(&other.image) }
    }

    pub fn is_identity(&self) -> bool {
        self.image == self.image.field.generator()
    }

    /// `[id, σ, σ², …]` up to the order of `σ`.
    pub fn powers(&self) -> Vec<FieldAutomorphism> {
        let mut out = vec![Self::identity(self.field())];
        let mut cur = self.clone();
        while !cur.is_identity() && out.len() <= self.field().degree() {
            out.push(cur.clone());
            cur = self.compose(&cur);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.powers().len()
    }
}

/// A field homomorphism `F → K` given by the image of `F`'s generator.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldEmbedding {
    source: Arc<NumberField>,
    image: FieldElement,
}

impl FieldEmbedding {
    pub fn new(source: Arc<NumberField>, image: FieldElement) -> Result<Self, ExactError> {
        if !image.eval_poly(source.modulus_rational()).is_zero() {
            return Err(ExactError::ConjugateMismatch(format!(
                "{image} is not a root of {}",
                source.modulus()
            )));
        }
        Ok(FieldEmbedding { source, image })
    }

    pub fn source(&self) -> &Arc<NumberField> {
        &self.source
    }

    pub fn target(&self) -> &Arc<NumberField> {
        &self.image.field
    }

    pub fn generator_image(&self) -> &FieldElement {
        &self.image
    }

    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        a.assert_same(&self.source.one());
        self.image.eval_poly(&a.to_poly())
    }
}

/// A compositum together with the embeddings of both factors.
#[derive(Clone, Debug)]
pub struct Composite {
    pub field: Arc<NumberField>,
    pub left: FieldEmbedding,
    pub right: FieldEmbedding,
}

/// Maximal shift tried when searching for a primitive element `y + k z`.
pub const MAX_PRIMITIVE_SHIFT: i64 = 32;

/// Tensor-ring element `Σ c[i][j] y^i z^j`.
struct TensorRing<'a> {
    mf: &'a RatPolynomial,
    mg: &'a RatPolynomial,
    df: usize,
    dg: usize,
}

impl TensorRing<'_> {
    fn reduce(&self, mut v: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
        // reduce in z then in y
        for row in v.iter_mut() {
            let r = RatPolynomial::new(std::mem::take(row)).rem(self.mg);
            let mut c = r.into_coeffs();
            c.resize(self.dg, BigRational::zero());
            *row = c;
        }
        let mut cols: Vec<Vec<BigRational>> = vec![Vec::new(); self.dg];
        for j in 0..self.dg {
            let col: Vec<BigRational> = v.iter().map(|r| r[j].clone()).collect();
            let mut c = RatPolynomial::new(col).rem(self.mf).into_coeffs();
            c.resize(self.df, BigRational::zero());
            cols[j] = c;
        }
        (0..self.df).map(|i| (0..self.dg).map(|j| cols[j][i].clone()).collect()).collect()
    }

    fn mul(&self, a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
        let mut out = vec![vec![BigRational::zero(); 2 * self.dg - 1]; 2 * self.df - 1];
        for (i1, r1) in a.iter().enumerate() {
            for (j1, x) in r1.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (i2, r2) in b.iter().enumerate() {
                    for (j2, y) in r2.iter().enumerate() {
                        if !y.is_zero() {
                            out[i1 + i2][j1 + j2] += x * y;
                        }
                    }
                }
            }
        }
        self.reduce(out)
    }

    fn flatten(&self, a: &[Vec<BigRational>]) -> Vec<BigRational> {
        a.iter().flat_map(|r| r.iter().cloned()).collect()
    }

    fn basis_elem(&self, i: usize, j: usize) -> Vec<Vec<BigRational>> {
        let mut v = vec![vec![BigRational::zero(); self.dg]; self.df];
        v[i][j] = BigRational::one();
        v
    }
}

/// Builds a primitive element of `F ⊗ G` and returns the field it generates.
pub fn field_compose(f: &Arc<NumberField>, g: &Arc<NumberField>) -> Result<Composite, ExactError> {
    for fld in [f, g] {
        if !fld.is_verified() {
            return Err(ExactError::UnverifiedField(fld.modulus.to_string()));
        }
    }
    if f == g {
        let id = FieldEmbedding::new(f.clone(), f.generator())?;
        return Ok(Composite { field: f.clone(), left: id.clone(), right: id });
    }
    let ring = TensorRing { mf: &f.modulus_q, mg: &g.modulus_q, df: f.degree(), dg: g.degree() };
    let n = ring.df * ring.dg;
    let y = if ring.df > 1 { ring.basis_elem(1, 0) } else { ring.reduce(vec![vec![BigRational::zero()], vec![BigRational::one()]]) };
    let z = if ring.dg > 1 { ring.basis_elem(0, 1) } else { ring.reduce(vec![vec![BigRational::zero(), BigRational::one()]]) };
    for k in 1..=MAX_PRIMITIVE_SHIFT {
        let gamma: Vec<Vec<BigRational>> = y
            .iter()
            .zip(&z)
            .map(|(ry, rz)| ry.iter().zip(rz).map(|(a, b)| a + b * int(k)).collect())
            .collect();
        // powers 1, γ, …, γ^n as flattened coordinate vectors
        let mut powers = vec![ring.basis_elem(0, 0)];
        for i in 1..=n {
            let next = ring.mul(&powers[i - 1], &gamma);
            powers.push(next);
        }
        let cols: Vec<Vec<BigRational>> = powers[..n].iter().map(|p| ring.flatten(p)).collect();
        let mat = Matrix::from_columns(&(), n, cols);
        if mat.rank() < n {
            continue;
        }
        let coeffs = match mat.solve(&ring.flatten(&powers[n])) {
            Some(c) => c,
            None => continue,
        };
        let mut mp: Vec<BigRational> = coeffs.iter().map(|c| -c).collect();
        mp.push(BigRational::one());
        let mp = RatPolynomial::new(mp);
        let mi = mp.to_int().ok_or_else(|| ExactError::NotAField("non-integral primitive element".into()))?;
        let field = match field_new(mi) {
            Ok(fld) => fld,
            Err(ExactError::Reducible { .. }) => {
                return Err(ExactError::NotAField(format!("{} ⊗ {} has zero divisors", f.modulus, g.modulus)))
            }
            Err(e) => return Err(e),
        };
        let ycoords = mat.solve(&ring.flatten(&y)).expect("full rank");
        let zcoords = mat.solve(&ring.flatten(&z)).expect("full rank");
        let left = FieldEmbedding::new(f.clone(), field.element(ycoords))?;
        let right = FieldEmbedding::new(g.clone(), field.element(zcoords))?;
        return Ok(Composite { field, left, right });
    }
    Err(ExactError::NotAField(format!(
        "no primitive element y + k z with k ≤ {MAX_PRIMITIVE_SHIFT} for {} ⊗ {}",
        f.modulus, g.modulus
    )))
}

/// Minimal polynomial over ℚ together with an integrality flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPolynomial {
    pub poly: RatPolynomial,
    pub integral: bool,
}

impl MinimalPolynomial {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// Primitive integer multiple with positive leading coefficient.
    pub fn to_int(&self) -> IntPolynomial {
        self.poly.to_int().unwrap_or_else(|| self.poly.primitive_int())
    }
}

/// First linear dependence among `1, a, a², …`, returned monic.
pub fn minimal_poly(a: &FieldElement) -> MinimalPolynomial {
    let d = a.field.degree();
    let mut powers = vec![a.field.one()];
    for k in 1..=d {
        let next = powers[k - 1].mul_unchecked(a);
        let cols: Vec<Vec<BigRational>> = powers.iter().map(|p| p.coords.clone()).collect();
        let m = Matrix::from_columns(&(), d, cols);
        if let Some(x) = m.solve(&next.coords) {
            let mut c: Vec<BigRational> = x.iter().map(|v| -v).collect();
            c.push(BigRational::one());
            let poly = RatPolynomial::new(c);
            let integral = poly.is_integral();
            return MinimalPolynomial { poly, integral };
        }
        powers.push(next);
    }
    unreachable!("a degree-{d} field element satisfies a polynomial of degree ≤ {d}")
}

/// Integer numerators over the common denominator.
fn integer_parts(coords: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let l = common_denominator(coords);
    let nums = coords.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    (nums, l)
}
