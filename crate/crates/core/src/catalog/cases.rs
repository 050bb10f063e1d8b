use std::sync::{Arc, OnceLock};

use super::{catalog_algebra_int, CatalogError};
use crate::anosov::{galois_twist_sum, orbit_basis, BasisMatrix, DiagonalAutomorphism};
use crate::exactnum::{field_compose, field_new, FieldAutomorphism, FieldElement, FieldHandle, IntPolynomial, NumberField};
use crate::liealg::{GradedType, LieAlgebra};

/// Everything needed to certify one construction.
#[derive(Clone, Debug)]
pub struct PaperCase {
    pub name: &'static str,
    pub algebra: LieAlgebra<FieldElement>,
    pub field: Arc<NumberField>,
    pub automorphism: DiagonalAutomorphism,
    pub basis: BasisMatrix,
    pub expected_type: GradedType,
    pub provenance: String,
}

pub const CASE_NAMES: &[&str] = &[
    "dim9_333",
    "dim9_63_u2u3",
    "dim9_ntilde",
    "dim9_u2u3_n3",
    "dim9_h3cubed",
    "dim10_55",
    "dim10_622",
    "dim10_442_n0",
    "dim10_442_n1",
    "dim10_424",
    "dim10_4222",
];

fn cached(cell: &'static OnceLock<Arc<NumberField>>, coeffs: &[i64]) -> Arc<NumberField> {
    cell.get_or_init(|| field_new(IntPolynomial::from_i64(coeffs)).expect("catalog modulus is irreducible"))
        .clone()
}

/// `ℚ[t]/(t² − 3t + 1)`.
pub fn quadratic_field() -> Arc<NumberField> {
    static F: OnceLock<Arc<NumberField>> = OnceLock::new();
    cached(&F, &[1, -3, 1])
}

/// `ℚ[t]/(t³ − 3t + 1)`.
pub fn cubic_field() -> Arc<NumberField> {
    static F: OnceLock<Arc<NumberField>> = OnceLock::new();
    cached(&F, &[1, -3, 0, 1])
}

/// `ℚ[t]/(t⁵ + t⁴ − 4t³ − 3t² + 3t + 1)`, the real subfield of the 11th cyclotomic field.
pub fn quintic_field() -> Arc<NumberField> {
    static F: OnceLock<Arc<NumberField>> = OnceLock::new();
    cached(&F, &[1, 3, -3, -4, 1, 1])
}

/// The Galois generator `t ↦ 3 − t = t⁻¹` of the quadratic field.
pub fn quadratic_conjugation(f: &Arc<NumberField>) -> FieldAutomorphism {
    FieldAutomorphism::new(&f.from_int(3) - &f.generator()).expect("3 - t is a root of t^2 - 3t + 1")
}

/// `t ↦ t² − 2`, a generator of the Galois group for the cubic and quintic fields.
pub fn chebyshev_conjugation(f: &Arc<NumberField>) -> FieldAutomorphism {
    let t = f.generator();
    FieldAutomorphism::new(&(&t * &t) - &f.from_int(2)).expect("t^2 - 2 is a conjugate of t")
}

/// The cubic roots `λ_j = σ^{j−1}(t)` inside `target` via `embed`.
fn cubic_roots(embed: impl Fn(&FieldElement) -> FieldElement) -> [FieldElement; 3] {
    let f = cubic_field();
    let s = chebyshev_conjugation(&f);
    let l1 = f.generator();
    let l2 = s.apply(&l1);
    let l3 = s.apply(&l2);
    [embed(&l1), embed(&l2), embed(&l3)]
}

fn pw(x: &FieldElement, e: i64) -> FieldElement {
    x.pow(e).expect("catalog eigenvalues are nonzero")
}

fn zeros(f: &Arc<NumberField>, n: usize) -> Vec<FieldElement> {
    vec![f.zero(); n]
}

/// `𝒳_i = Σ_j λ_j^{i−1} e_{idx_j}` for `i = 1, 2, 3`.
fn vandermonde(f: &Arc<NumberField>, n: usize, lam: &[FieldElement], idx: [usize; 3]) -> Vec<Vec<FieldElement>> {
    (0..3)
        .map(|i| {
            let mut v = zeros(f, n);
            for (l, &k) in lam.iter().zip(&idx) {
                v[k] = &v[k] + &pw(l, i as i64);
            }
            v
        })
        .collect()
}

/// `λ₃^{1−i}(λ₂−λ₁) e_a + λ₁^{1−i}(λ₃−λ₂) e_b + λ₂^{1−i}(λ₃−λ₁) e_c`.
fn difference_pattern(f: &Arc<NumberField>, n: usize, lam: &[FieldElement; 3], idx: [usize; 3]) -> Vec<Vec<FieldElement>> {
    let [l1, l2, l3] = lam;
    let w = [(l3, l2 - l1), (l1, l3 - l2), (l2, l3 - l1)];
    (1..=3)
        .map(|i| {
            let mut v = zeros(f, n);
            for ((base, d), &k) in w.iter().zip(&idx) {
                v[k] = &pw(base, 1 - i) * d;
            }
            v
        })
        .collect()
}

fn finish(
    name: &'static str,
    algebra: LieAlgebra<FieldElement>,
    eigenvalues: Vec<FieldElement>,
    columns: Vec<Vec<FieldElement>>,
    expected: &[usize],
    provenance: &str,
) -> Result<PaperCase, CatalogError> {
    let field = algebra.ctx().clone();
    let automorphism = DiagonalAutomorphism::new(&field, eigenvalues)?;
    let basis = BasisMatrix::from_columns(&field, columns)?;
    Ok(PaperCase {
        name,
        algebra,
        field,
        automorphism,
        basis,
        expected_type: GradedType::new(expected.to_vec()),
        provenance: provenance.to_string(),
    })
}

fn dim9_333() -> Result<PaperCase, CatalogError> {
    let f = cubic_field();
    let l = catalog_algebra_int("n333", &[1, 1, 1])?.lift(&f);
    let lam = cubic_roots(|x| x.clone());
    let [l1, l2, l3] = &lam;
    let mu = [l1 * l2, l2 * l3, l1 * l3];
    let nu = [l1 * &mu[0], l2 * &mu[1], l3 * &mu[2]];
    let eig: Vec<FieldElement> = lam.iter().chain(&mu).chain(&nu).cloned().collect();
    let mut cols = vandermonde(&f, 9, &lam, [0, 1, 2]);
    cols.extend(difference_pattern(&f, 9, &lam, [3, 4, 5]));
    // 𝒵_i uses increasing powers of λ₁, λ₂, λ₃.
    let w = [(l1, l2 - l1), (l2, l3 - l2), (l3, l3 - l1)];
    for i in 0..3 {
        let mut v = zeros(&f, 9);
        for (k, (base, d)) in w.iter().enumerate() {
            v[6 + k] = &pw(base, i) * d;
        }
        cols.push(v);
    }
    finish(
        "dim9_333",
        l,
        eig,
        cols,
        &[3, 3, 3],
        "n(1,1,1), type (3,3,3); eigenvalues lambda_j, lambda_i*lambda_j, lambda_i*mu_i from the roots of t^3-3t+1; X/Y/Z lattice basis",
    )
}

fn dim9_ntilde() -> Result<PaperCase, CatalogError> {
    let f = cubic_field();
    let l = catalog_algebra_int("ntilde", &[1, 1, 1])?.lift(&f);
    let lam = cubic_roots(|x| x.clone());
    let [l1, l2, l3] = &lam;
    let x4 = &(l2 * l3) * &pw(l1, -1);
    let x5 = &(l1 * l3) * &pw(l2, -1);
    let x6 = &(l1 * l2) * &pw(l3, -1);
    let eig = vec![
        l1.clone(),
        l2.clone(),
        l3.clone(),
        x4,
        x5,
        x6,
        l1 * l2,
        l2 * l3,
        l1 * l3,
    ];
    let mut cols = vandermonde(&f, 9, &lam, [0, 1, 2]);
    // 𝒳'_j carries the difference pattern on (X6, X4, X5).
    cols.extend(difference_pattern(&f, 9, &lam, [5, 3, 4]));
    cols.extend(difference_pattern(&f, 9, &lam, [6, 7, 8]));
    finish(
        "dim9_ntilde",
        l,
        eig,
        cols,
        &[6, 3],
        "ntilde(1,1,1), type (6,3); X, X' and Y lattice vectors built from the roots of t^3-3t+1",
    )
}

fn dim9_63_u2u3() -> Result<PaperCase, CatalogError> {
    let q = quadratic_field();
    let c = cubic_field();
    let comp = field_compose(&q, &c)?;
    let f = comp.field.clone();
    let l = catalog_algebra_int("U", &[0, 1, 1])?.lift(&f);
    let mu = comp.left.apply(&q.generator());
    let mu_inv = pw(&mu, -1);
    let lam = cubic_roots(|x| comp.right.apply(x));
    let [l1, l2, l3] = &lam;
    let eig = vec![
        &mu * l3,
        &mu_inv * l3,
        &mu * l2,
        &mu_inv * l2,
        &mu * l1,
        &mu_inv * l1,
        l1 * l2,
        l1 * l3,
        l2 * l3,
    ];
    let mut cols = Vec::new();
    for k in 0..2 {
        for lp in 0..3 {
            let mut v = zeros(&f, 9);
            for (pair, base) in [l3, l2, l1].into_iter().enumerate() {
                let s = pw(base, lp);
                v[2 * pair] = &s * &pw(&mu, k);
                v[2 * pair + 1] = &s * &pw(&mu, -k);
            }
            cols.push(v);
        }
    }
    let scale = &mu_inv - &mu;
    for r in -1..=1 {
        let mut v = zeros(&f, 9);
        for (k, base) in [l3, l2, l1].into_iter().enumerate() {
            v[6 + k] = &scale * &pw(base, r);
        }
        cols.push(v);
    }
    finish(
        "dim9_63_u2u3",
        l,
        eig,
        cols,
        &[6, 3],
        "U2+U3, type (6,3), over the compositum of Q(mu) and Q(lambda); mu is pinned to a root of t^2-3t+1; X_(k,l) and Y_r lattice vectors",
    )
}

fn dim9_u2u3_n3() -> Result<PaperCase, CatalogError> {
    let f = cubic_field();
    let l = catalog_algebra_int("g12", &[1, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 1])?.lift(&f);
    let lam = cubic_roots(|x| x.clone());
    let [l1, l2, l3] = &lam;
    let eig = vec![
        l1.clone(),
        l2.clone(),
        l3.clone(),
        l1.clone(),
        l2.clone(),
        l3.clone(),
        l1 * l2,
        l2 * l3,
        l1 * l3,
    ];
    let mut cols = Vec::new();
    for i in 0..3 {
        let mut v = zeros(&f, 9);
        for (j, base) in lam.iter().enumerate() {
            let s = pw(base, i);
            v[j] = s.clone();
            v[j + 3] = s;
        }
        cols.push(v);
    }
    // Completion of the X block: the eigenvectors X1, X5, X3 pair with λ1, λ2, λ3.
    cols.extend(vandermonde(&f, 9, &lam, [0, 4, 2]));
    cols.extend(difference_pattern(&f, 9, &lam, [6, 7, 8]));
    finish(
        "dim9_u2u3_n3",
        l,
        eig,
        cols,
        &[6, 3],
        "U2+U3+n3 as g12(1,1,1,1,1,0,1,0,1,0,1,1), type (6,3); the listed X_i, Y_k are completed by X'_i = l1^(i-1) X1 + l2^(i-1) X5 + l3^(i-1) X3",
    )
}

fn dim9_h3cubed() -> Result<PaperCase, CatalogError> {
    let f = cubic_field();
    let s = chebyshev_conjugation(&f);
    let h = catalog_algebra_int("h3", &[])?.lift(&f);
    let t = f.generator();
    let st = s.apply(&t);
    let a = DiagonalAutomorphism::new(&f, vec![t.clone(), st.clone(), &t * &st])?;
    let conj = s.powers();
    let tw = galois_twist_sum(&h, &a, &conj)?;
    Ok(PaperCase {
        name: "dim9_h3cubed",
        algebra: tw.algebra,
        field: f,
        automorphism: tw.automorphism,
        basis: tw.basis,
        expected_type: GradedType::new(vec![6, 3]),
        provenance: "h3+h3+h3, type (6,3), as the threefold Galois twist of h3 over Q(lambda), lambda a root of t^3-3t+1".into(),
    })
}

fn dim10_55() -> Result<PaperCase, CatalogError> {
    let f = quintic_field();
    let l = catalog_algebra_int("n55", &[])?.lift(&f);
    let s = chebyshev_conjugation(&f);
    // λ_{i+1}² − 2 = λ_i, so λ_{i+1} = σ⁻¹(λ_i) = σ⁴(λ_i).
    let inv = s.compose(&s).compose(&s).compose(&s);
    let mut lam = vec![f.generator()];
    for i in 0..4 {
        let next = inv.apply(&lam[i]);
        lam.push(next);
    }
    let mut eig = lam.clone();
    for i in 0..5 {
        eig.push(&lam[i] * &lam[(i + 1) % 5]);
    }
    let mut cols = Vec::new();
    for i in 0..5 {
        let mut v = zeros(&f, 10);
        for (j, base) in lam.iter().enumerate() {
            v[j] = pw(base, i);
        }
        cols.push(v);
    }
    for i in 0..5 {
        let mut v = zeros(&f, 10);
        for k in 0..5 {
            v[5 + k] = pw(&lam[(k + 1) % 5], i);
        }
        cols.push(v);
    }
    finish(
        "dim10_55",
        l,
        eig,
        cols,
        &[5, 5],
        "(5,5) cyclic algebra [Xi,Xi+1]=Yi over the real subfield of the 11th cyclotomic field; lambda_(i+1)^2 - 2 = lambda_i",
    )
}

fn twist_case(
    name: &'static str,
    half: &str,
    powers: &[i64],
    expected: &[usize],
    provenance: &str,
) -> Result<PaperCase, CatalogError> {
    let f = quadratic_field();
    let h = catalog_algebra_int(half, &[])?.lift(&f);
    let lam = f.generator();
    let a = DiagonalAutomorphism::new(&f, powers.iter().map(|&e| pw(&lam, e)).collect())?;
    let conj = vec![FieldAutomorphism::identity(&f), quadratic_conjugation(&f)];
    let tw = galois_twist_sum(&h, &a, &conj)?;
    Ok(PaperCase {
        name,
        algebra: tw.algebra,
        field: f,
        automorphism: tw.automorphism,
        basis: tw.basis,
        expected_type: GradedType::new(expected.to_vec()),
        provenance: provenance.to_string(),
    })
}

fn dim10_442(name: &'static str) -> Result<PaperCase, CatalogError> {
    let f = quadratic_field();
    let (alg, w) = if name == "dim10_442_n0" {
        (catalog_algebra_int("n442_0", &[1, 1, 1, 1])?, 2)
    } else {
        (catalog_algebra_int("n442_1", &[1, 1])?, 4)
    };
    let l = alg.lift(&f);
    let lam = f.generator();
    let exps = [1, -1, 2, -2, 3, -3, 1, -1, w, -w];
    let eig = exps.iter().map(|&e| pw(&lam, e)).collect();
    let conj = vec![FieldAutomorphism::identity(&f), quadratic_conjugation(&f)];
    let orbits: Vec<Vec<usize>> = (0..5).map(|p| vec![2 * p, 2 * p + 1]).collect();
    let basis = orbit_basis(&f, 10, &orbits, &conj)?;
    let automorphism = DiagonalAutomorphism::new(&f, eig)?;
    let prov = if w == 2 {
        "(4,4,2) algebra n0(1,1,1,1); blocks [l, 1/l, l^2, 1/l^2], [l^3, 1/l^3, l, 1/l], [l^2, 1/l^2] with l a root of t^2-3t+1; doubling basis over the pairs"
    } else {
        "(4,4,2) algebra n1(1,1); blocks [l, 1/l, l^2, 1/l^2], [l^3, 1/l^3, l, 1/l], [l^4, 1/l^4] with l a root of t^2-3t+1; doubling basis over the pairs"
    };
    Ok(PaperCase {
        name: if w == 2 { "dim10_442_n0" } else { "dim10_442_n1" },
        algebra: l,
        field: f,
        automorphism,
        basis,
        expected_type: GradedType::new(vec![4, 4, 2]),
        provenance: prov.into(),
    })
}

/// Builds a named case.
pub fn paper_case(name: &str) -> Result<PaperCase, CatalogError> {
    match name {
        "dim9_333" => dim9_333(),
        "dim9_63_u2u3" => dim9_63_u2u3(),
        "dim9_ntilde" => dim9_ntilde(),
        "dim9_u2u3_n3" => dim9_u2u3_n3(),
        "dim9_h3cubed" => dim9_h3cubed(),
        "dim10_55" => dim10_55(),
        "dim10_622" => twist_case(
            "dim10_622",
            "n622_half",
            &[1, 1, 2, 2, 3],
            &[6, 2, 2],
            "(6,2,2) as the Galois double of [X1,X2]=Z1, [X5,X2]=W1, [X1,Z1]=W1 over Q(l), l a root of t^2-3t+1 (mu = l)",
        ),
        "dim10_442_n0" | "dim10_442_n1" => dim10_442(if name == "dim10_442_n0" { "dim10_442_n0" } else { "dim10_442_n1" }),
        "dim10_424" => twist_case(
            "dim10_424",
            "n424_half",
            &[1, 1, 2, 3, 3],
            &[4, 2, 4],
            "(4,2,4) as the Galois double of [X1,X2]=Z1, [X1,Z1]=W1, [X2,Z1]=W2 over Q(l), l a root of t^2-3t+1 (mu = l)",
        ),
        "dim10_4222" => twist_case(
            "dim10_4222",
            "n4222_half",
            &[1, 1, 2, 3, 4],
            &[4, 2, 2, 2],
            "(4,2,2,2) as the Galois double of [X1,X2]=Z1, [X1,Z1]=W1, [X1,W1]=U1 over Q(l), l a root of t^2-3t+1 (mu = l)",
        ),
        _ => Err(CatalogError::UnknownName(name.to_string())),
    }
}
