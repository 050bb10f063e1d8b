//! Pfaffian forms of 2-step nilpotent algebras of type `(2k, m)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::liealg::{LieAlgebra, LieError};
use crate::linalg::{Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PfaffianError {
    #[error("expected a 2-step algebra of type (2k, m), found {0}")]
    WrongType(String),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// The skew forms `(J_i)_{ab}` = coefficient of `Z_i` in `[X_a, X_b]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewFormSet<K: Scalar> {
    ctx: K::Ctx,
    size: usize,
    forms: Vec<Matrix<K>>,
}

impl<K: Scalar> SkewFormSet<K> {
    /// Panics if some matrix is not square of the common size or not skew.
    pub fn new(ctx: &K::Ctx, size: usize, forms: Vec<Matrix<K>>) -> Self {
        for j in &forms {
            assert!(j.rows() == size && j.cols() == size, "form size mismatch");
            for a in 0..size {
                for b in 0..size {
                    assert!(j.get(a, b).add(j.get(b, a)).is_zero(), "form is not skew-symmetric");
                }
            }
        }
        SkewFormSet { ctx: ctx.clone(), size, forms }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn forms(&self) -> &[Matrix<K>] {
        &self.forms
    }

    pub fn count(&self) -> usize {
        self.forms.len()
    }

    /// `Σ v_i J_i`.
    pub fn combination(&self, v: &[K]) -> Matrix<K> {
        Matrix::from_fn(self.size, self.size, &self.ctx, |a, b| {
            self.forms
                .iter()
                .zip(v)
                .fold(K::zero_in(&self.ctx), |acc, (j, c)| acc.add(&c.mul(j.get(a, b))))
        })
    }
}

/// Extracts the skew forms of a 2-step algebra in a basis adapted to its layers.
pub fn skew_forms<K: Scalar>(l: &LieAlgebra<K>) -> Result<SkewFormSet<K>, PfaffianError> {
    let (ty, _) = l.graded_type()?;
    if ty.parts.len() != 2 || ty.parts[0] % 2 != 0 {
        return Err(PfaffianError::WrongType(ty.to_string()));
    }
    let layers = l.layer_indices()?;
    let (v, w) = (&layers[0], &layers[1]);
    let forms = w
        .iter()
        .map(|&z| {
            Matrix::from_fn(v.len(), v.len(), l.ctx(), |a, b| l.structure_constant(v[a], v[b], z))
        })
        .collect();
    Ok(SkewFormSet::new(l.ctx(), v.len(), forms))
}

/// A homogeneous polynomial in `m` variables, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct PfaffianForm<K: Scalar> {
    ctx: K::Ctx,
    variables: Vec<String>,
    terms: BTreeMap<Vec<u32>, K>,
}

impl<K: Scalar> PfaffianForm<K> {
    pub fn new(ctx: &K::Ctx, variables: Vec<String>, terms: BTreeMap<Vec<u32>, K>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        PfaffianForm { ctx: ctx.clone(), variables, terms }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, K> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> K {
        self.terms.get(exponents).cloned().unwrap_or_else(|| K::zero_in(&self.ctx))
    }

    pub fn eval(&self, v: &[K]) -> K {
        self.terms.iter().fold(K::zero_in(&self.ctx), |acc, (e, c)| {
            let mut t = c.clone();
            for (x, &p) in v.iter().zip(e) {
                for _ in 0..p {
                    t = t.mul(x);
                }
            }
            acc.add(&t)
        })
    }

    /// Substitutes `x_i ↦ c · x_i`.
    pub fn scale_variable(&self, i: usize, c: &K) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| {
                let mut t = v.clone();
                for _ in 0..e[i] {
                    t = t.mul(c);
                }
                (e.clone(), t)
            })
            .collect();
        PfaffianForm::new(&self.ctx, self.variables.clone(), terms)
    }
}

impl<K: Scalar + fmt::Display> fmt::Display for PfaffianForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .zip(&self.variables)
                .filter(|(p, _)| **p > 0)
                .map(|(p, x)| if *p == 1 { x.clone() } else { format!("{x}^{p}") })
                .collect();
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c == &K::one_in(&self.ctx) {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Default variable names: `x, y, z` for three forms, `x1, x2, …` otherwise.
pub fn variable_names(m: usize) -> Vec<String> {
    if m <= 3 {
        ["x", "y", "z"][..m].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=m).map(|i| format!("x{i}")).collect()
    }
}

type Poly<K> = BTreeMap<Vec<u32>, K>;

fn poly_mul<K: Scalar>(a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
    let mut out: Poly<K> = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = ca.mul(cb);
            let v = match out.remove(&e) {
                Some(old) => old.add(&c),
                None => c,
            };
            if !v.is_zero() {
                out.insert(e, v);
            }
        }
    }
    out
}

fn poly_add_into<K: Scalar>(acc: &mut Poly<K>, p: &Poly<K>, negate: bool) {
    for (e, c) in p {
        let c = if negate { c.neg() } else { c.clone() };
        let v = match acc.remove(e) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            acc.insert(e.clone(), v);
        }
    }
}

/// `Pf(x_1 J_1 + … + x_m J_m)` by first-row expansion memoized on index subsets.
pub fn pfaffian_form<K: Scalar>(s: &SkewFormSet<K>) -> PfaffianForm<K> {
    let m = s.count();
    let n = s.size;
    let names = variable_names(m);
    if n % 2 == 1 {
        return PfaffianForm::new(&s.ctx, names, BTreeMap::new());
    }
    // Linear entries of the generic matrix.
    let entry = |a: usize, b: usize| -> Poly<K> {
        let mut p = BTreeMap::new();
        for (i, j) in s.forms.iter().enumerate() {
            let c = j.get(a, b);
            if !c.is_zero() {
                let mut e = vec![0u32; m];
                e[i] = 1;
                p.insert(e, c.clone());
            }
        }
        p
    };
    let mut memo: HashMap<u64, Poly<K>> = HashMap::new();
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let terms = pf_rec(full, &entry, &mut memo, &s.ctx, m);
    PfaffianForm::new(&s.ctx, names, terms)
}

fn pf_rec<K: Scalar>(
    mask: u64,
    entry: &impl Fn(usize, usize) -> Poly<K>,
    memo: &mut HashMap<u64, Poly<K>>,
    ctx: &K::Ctx,
    m: usize,
) -> Poly<K> {
    if mask == 0 {
        let mut one = BTreeMap::new();
        one.insert(vec![0u32; m], K::one_in(ctx));
        return one;
    }
    if let Some(p) = memo.get(&mask) {
        return p.clone();
    }
    let idx: Vec<usize> = (0..64).filter(|b| mask >> b & 1 == 1).collect();
    let first = idx[0];
    let mut acc = BTreeMap::new();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let a = entry(first, j);
        if a.is_empty() {
            continue;
        }
        let rest = pf_rec(mask & !(1 << first) & !(1 << j), entry, memo, ctx, m);
        if rest.is_empty() {
            continue;
        }
        poly_add_into(&mut acc, &poly_mul(&a, &rest), pos % 2 == 0);
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Checks `det(Σ v_i J_i) = P(v)²` at random small-integer points.
///
/// Returns the first counterexample point.
pub fn det_consistency<K: Scalar>(
    s: &SkewFormSet<K>,
    p: &PfaffianForm<K>,
    samples: usize,
    seed: u64,
) -> Result<(), Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let pt: Vec<i64> = (0..s.count()).map(|_| rng.gen_range(-5..=5)).collect();
        let v: Vec<K> = pt
            .iter()
            .map(|&x| K::from_rational_in(&s.ctx, &BigRational::from_integer(x.into())))
            .collect();
        let det = if s.size == 0 { K::one_in(&s.ctx) } else { s.combination(&v).det() };
        let pf = p.eval(&v);
        if det != pf.mul(&pf) {
            return Err(pt);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::int;

    #[test]
    fn pfaffian_of_standard_symplectic_pair() {
        let h = LieAlgebra::from_table(3, &[(1, 2, 3, 1)]).unwrap();
        let s = skew_forms(&h).unwrap();
        let p = pfaffian_form(&s);
        assert_eq!(p.to_string(), "x");
        assert!(det_consistency(&s, &p, 20, 1).is_ok());
    }

    #[test]
    fn four_by_four_pfaffian() {
        // Pf = a12 a34 - a13 a24 + a14 a23.
        let l = LieAlgebra::from_table(5, &[(1, 2, 5, 2), (3, 4, 5, 3), (1, 3, 5, 1), (2, 4, 5, 5), (1, 4, 5, 7), (2, 3, 5, 1)])
            .unwrap();
        let p = pfaffian_form(&skew_forms(&l).unwrap());
        assert_eq!(p.coefficient(&[2]), int(2 * 3 - 5 + 7));
    }

    #[test]
    fn odd_first_layer_is_rejected() {
        let l = LieAlgebra::from_table(5, &[(1, 2, 4, 1), (2, 3, 5, 1)]).unwrap();
        assert!(matches!(skew_forms(&l), Err(PfaffianError::WrongType(_))));
    }
}
