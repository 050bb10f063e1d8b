use super::{Bracket, GradedType, LieAlgebra, LieError};
use crate::linalg::{Matrix, Scalar, Subspace};

/// Center `z(L)` split off from an ideal containing `[L, L]`.
#[derive(Clone, Debug, PartialEq)]
pub struct AbelianFactor<K: Scalar> {
    /// Dimension of the largest abelian direct factor.
    pub dim: usize,
    /// A central subspace complementary to `[L, L] ∩ z(L)` inside `z(L)`.
    pub factor: Subspace<K>,
    /// A complementary ideal containing `[L, L]`.
    pub complement: Subspace<K>,
}

/// Result of quotienting by the last lower-central term.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction<K: Scalar> {
    pub quotient: LieAlgebra<K>,
    pub derived: LieAlgebra<K>,
    /// Standard basis indices kept in the quotient.
    pub kept: Vec<usize>,
}

impl<K: Scalar> LieAlgebra<K> {
    /// Span of all `[x, v]` with `x` a basis vector and `v ∈ s`.
    pub fn bracket_with(&self, s: &Subspace<K>) -> Subspace<K> {
        let mut out = Vec::new();
        for a in 0..self.dim() {
            let ea = self.unit_vector(a);
            for v in s.vectors() {
                let w = self.bracket(&ea, v);
                if w.iter().any(|c| !c.is_zero()) {
                    out.push(w);
                }
            }
        }
        Subspace::span(self.dim(), self.ctx(), &out)
    }

    /// `C⁰ = L ⊋ C¹ ⊋ … ⊋ Cʳ = 0`, ending with the zero subspace.
    pub fn lower_central_series(&self) -> Result<Vec<Subspace<K>>, LieError> {
        let mut series = vec![Subspace::full(self.dim(), self.ctx())];
        loop {
            let last = series.last().expect("nonempty");
            if last.dim() == 0 {
                return Ok(series);
            }
            let next = self.bracket_with(last);
            if next.dim() == last.dim() {
                return Err(LieError::NotNilpotent { stalled_at: next.dim() });
            }
            series.push(next);
        }
    }

    /// The type together with the lower central series.
    pub fn graded_type(&self) -> Result<(GradedType, Vec<Subspace<K>>), LieError> {
        let series = self.lower_central_series()?;
        let parts = series.windows(2).map(|w| w[0].dim() - w[1].dim()).collect();
        Ok((GradedType::new(parts), series))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().is_ok()
    }

    /// Layer of each basis vector, assuming the basis is adapted to the lower
    /// central series (`Cⁱ` spanned by the `e_k` of layer ≥ i).
    pub fn coordinate_layers(&self) -> Result<Vec<usize>, LieError> {
        let series = self.lower_central_series()?;
        let n = self.dim();
        let layers: Vec<usize> = (0..n)
            .map(|k| {
                let e = self.unit_vector(k);
                (0..series.len()).rev().find(|&s| series[s].contains(&e)).unwrap_or(0)
            })
            .collect();
        for (s, c) in series.iter().enumerate() {
            let count = layers.iter().filter(|&&l| l >= s).count();
            if count != c.dim() {
                return Err(LieError::NonAdaptedBasis { term: s, expected: c.dim(), found: count });
            }
        }
        Ok(layers)
    }

    /// Basis indices grouped by layer.
    pub fn layer_indices(&self) -> Result<Vec<Vec<usize>>, LieError> {
        let layers = self.coordinate_layers()?;
        let steps = layers.iter().copied().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); steps];
        for (k, l) in layers.into_iter().enumerate() {
            out[l].push(k);
        }
        Ok(out)
    }

    pub fn center(&self) -> Subspace<K> {
        let n = self.dim();
        // x is central iff Σ_i x_i [e_i, e_b] = 0 for every b.
        let mut rows = Vec::new();
        for b in 0..n {
            let cols: Vec<Vec<K>> = (0..n).map(|i| self.basis_bracket(i, b)).collect();
            let m = Matrix::from_columns(self.ctx(), n, cols);
            for r in 0..n {
                rows.push(m.row(r));
            }
        }
        if rows.is_empty() {
            return Subspace::full(n, self.ctx());
        }
        let sys = Matrix::from_rows(self.ctx(), rows);
        Subspace::span(n, self.ctx(), &sys.kernel())
    }

    /// `[L, L]`.
    pub fn derived(&self) -> Subspace<K> {
        let full = Subspace::full(self.dim(), self.ctx());
        self.bracket_with(&full)
    }

    /// Largest abelian direct factor `L = ñ ⊕ ℝᵏ` with `ñ ⊇ [L, L]`.
    pub fn abelian_factor(&self) -> AbelianFactor<K> {
        let n = self.dim();
        let ctx = self.ctx();
        let z = self.center();
        let d = self.derived();
        let mut acc = z.intersection(&d);
        let mut factor = Vec::new();
        for v in z.vectors() {
            if !acc.contains(v) {
                acc = acc.sum(&Subspace::span(n, ctx, std::slice::from_ref(v)));
                factor.push(v.clone());
            }
        }
        let factor = Subspace::span(n, ctx, &factor);
        let mut comp = d.clone();
        let mut all = d.sum(&factor);
        for k in 0..n {
            if all.dim() == n {
                break;
            }
            let e = self.unit_vector(k);
            if !all.contains(&e) {
                let s = Subspace::span(n, ctx, std::slice::from_ref(&e));
                all = all.sum(&s);
                comp = comp.sum(&s);
            }
        }
        AbelianFactor { dim: factor.dim(), factor, complement: comp }
    }

    /// `L / I` on the standard basis vectors complementary to `I`.
    ///
    /// `ideal` must be an ideal; this is checked.
    pub fn quotient(&self, ideal: &Subspace<K>) -> Result<(LieAlgebra<K>, Vec<usize>), LieError> {
        if !ideal.contains_subspace(&self.bracket_with(ideal)) {
            return Err(LieError::NotAnIdeal);
        }
        let kept = ideal.coordinate_complement();
        let project = |mut v: Vec<K>| -> Vec<K> {
            for (b, &p) in ideal.vectors().iter().zip(ideal.pivots()) {
                let f = v[p].clone();
                if f.is_zero() {
                    continue;
                }
                for (vj, bj) in v.iter_mut().zip(b) {
                    if !bj.is_zero() {
                        *vj = vj.sub(&f.mul(bj));
                    }
                }
            }
            kept.iter().map(|&w| v[w].clone()).collect()
        };
        let mut brackets = Vec::new();
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate().skip(a + 1) {
                for (c, coeff) in project(self.basis_bracket(i, j)).into_iter().enumerate() {
                    if !coeff.is_zero() {
                        brackets.push(Bracket::new(a, b, c, coeff));
                    }
                }
            }
        }
        Ok((LieAlgebra::new(kept.len(), self.ctx(), brackets)?, kept))
    }

    /// The subalgebra spanned by `s`, in its reduced echelon basis.
    pub fn subalgebra(&self, s: &Subspace<K>) -> Result<LieAlgebra<K>, LieError> {
        let basis = s.vectors();
        let mut brackets = Vec::new();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let w = self.bracket(&basis[a], &basis[b]);
                if !s.contains(&w) {
                    return Err(LieError::NotASubalgebra);
                }
                for (c, &p) in s.pivots().iter().enumerate() {
                    if !w[p].is_zero() {
                        brackets.push(Bracket::new(a, b, c, w[p].clone()));
                    }
                }
            }
        }
        LieAlgebra::new(basis.len(), self.ctx(), brackets)
    }

    /// Quotient by the last nonzero lower-central term, plus `[L, L]` as an algebra.
    pub fn reduce(&self) -> Result<Reduction<K>, LieError> {
        if self.is_abelian() {
            return Err(LieError::AlreadyAbelian);
        }
        let series = self.lower_central_series()?;
        let last = &series[series.len() - 2];
        let (quotient, kept) = self.quotient(last)?;
        let derived = self.subalgebra(&series[1])?;
        Ok(Reduction { quotient, derived, kept })
    }
}
