use anosov_core::anosov::random_unimodular;
use anosov_core::catalog::{catalog_algebra, catalog_algebra_int, ALGEBRAS};
use anosov_core::exactnum::rational::{int, rat};
use anosov_core::liealg::{direct_sum, LieAlgebra, LieError};
use anosov_core::linalg::Matrix;
use num_rational::BigRational;
use proptest::prelude::*;

fn q(name: &str, p: &[i64]) -> LieAlgebra<BigRational> {
    catalog_algebra_int(name, p).unwrap()
}

fn ty(l: &LieAlgebra<BigRational>) -> Vec<usize> {
    l.graded_type().unwrap().0.parts
}

#[test]
fn n333_jacobi_and_type() {
    let n = q("n333", &[1, 1, 1]);
    assert!(n.jacobi_check().is_ok());
    assert_eq!(ty(&n), vec![3, 3, 3]);
    assert_eq!(n.abelian_factor().dim, 0);
}

#[test]
fn spec_jacobi_witness() {
    let l = LieAlgebra::from_table(3, &[(1, 2, 3, 1), (1, 3, 1, 1)]).unwrap();
    let w = l.jacobi_check().unwrap_err();
    assert_eq!((w.i + 1, w.j + 1, w.k + 1), (1, 2, 3));
    // [[e3,e1],e2] = [-e1,e2] = -e3 under the cyclic order (i,j,k), (j,k,i), (k,i,j)
    assert_eq!(w.value, vec![int(0), int(0), int(-1)]);
}

#[test]
fn catalog_types() {
    assert_eq!(ty(&q("n4222", &[])), vec![4, 2, 2, 2]);
    let h = q("h3", &[]);
    let h33 = direct_sum(&[&h, &h, &h]).unwrap();
    assert_eq!(h33.dim(), 9);
    assert_eq!(ty(&h33), vec![6, 3]);
    let l4 = q("l4", &[]);
    assert_eq!(ty(&direct_sum(&[&l4, &l4]).unwrap()), vec![4, 2, 2]);
    assert_eq!(ty(&q("n55", &[])), vec![5, 5]);
}

#[test]
fn direct_sum_with_zero_dim_is_identity() {
    let h = q("h3", &[]);
    let z = LieAlgebra::<BigRational>::abelian(0, &());
    assert_eq!(direct_sum(&[&h, &z]).unwrap(), h);
}

#[test]
fn abelian_factor_examples() {
    let f3 = q("f3", &[]);
    let a3 = LieAlgebra::abelian(3, &());
    assert_eq!(direct_sum(&[&f3, &a3]).unwrap().abelian_factor().dim, 3);
    assert_eq!(q("abelian", &[9]).abelian_factor().dim, 9);
}

#[test]
fn reduce_examples() {
    let r = q("n333", &[1, 1, 1]).reduce().unwrap();
    assert_eq!(ty(&r.quotient), vec![3, 3]);
    assert!(r.derived.is_abelian());
    assert_eq!(r.derived.dim(), 6);

    let r = q("n4222", &[]).reduce().unwrap();
    assert_eq!(ty(&r.quotient), vec![4, 2, 2]);
    let l4 = q("l4", &[]);
    let l4l4 = direct_sum(&[&l4, &l4]).unwrap();
    // quotient equals l4 ⊕ l4 after reordering X1,X2,Z1,W1 | X3,X4,Z2,W2
    let perm = [0, 1, 4, 6, 2, 3, 5, 7];
    let p = Matrix::from_fn(8, 8, &(), |i, j| if perm[j] == i { int(1) } else { int(0) });
    assert_eq!(r.quotient.change_basis(&p).unwrap(), l4l4);
    assert!(r.derived.is_abelian());
    assert_eq!(r.derived.dim(), 6);

    let r = q("h3", &[]).reduce().unwrap();
    assert!(r.quotient.is_abelian());
    assert_eq!(r.quotient.dim(), 2);
    assert_eq!(r.derived.dim(), 1);
    assert_eq!(LieAlgebra::<BigRational>::abelian(4, &()).reduce(), Err(LieError::AlreadyAbelian));
}

#[test]
fn center_rescaling_normalizes_n333() {
    let n = q("n333", &[2, 1, 1]);
    let mut d = vec![int(1); 9];
    // columns are the new basis vectors: 2·Z1 absorbs the coefficient 2
    d[6] = int(2);
    let b = Matrix::diagonal(&(), &d);
    assert_eq!(n.change_basis(&b).unwrap(), q("n333", &[1, 1, 1]));
    let id = Matrix::identity(9, &());
    assert_eq!(n.change_basis(&id).unwrap(), n);
}

#[test]
fn n333_general_rescaling() {
    for (a, b, c) in [(2, 3, 5), (-1, 4, 7), (3, -2, -1)] {
        let n = catalog_algebra("n333", &[int(a), int(b), int(c)]).unwrap();
        let mut d = vec![int(1); 9];
        d[6] = int(a);
        d[7] = int(b);
        d[8] = int(c);
        assert_eq!(n.change_basis(&Matrix::diagonal(&(), &d)).unwrap(), q("n333", &[1, 1, 1]));
    }
}

#[test]
fn n63prime_rescaling_to_abc() {
    for (a, b, c) in [(2, 3, 5), (1, -1, 2), (3, 1, -2)] {
        let (a, b, c) = (int(a), int(b), int(c));
        let n = catalog_algebra("n63prime", &[a.clone(), b.clone(), c.clone()]).unwrap();
        let one = int(1);
        let d = vec![
            one.clone(),
            a.clone(),
            &one / &a,
            &one / &c,
            c.clone(),
            one.clone(),
            a.clone(),
            &one / (&a * &c),
            c.clone(),
        ];
        let target = catalog_algebra("n63prime", &[one.clone(), &a * &b * &c, one.clone()]).unwrap();
        assert_eq!(n.change_basis(&Matrix::diagonal(&(), &d)).unwrap(), target);
    }
}

#[test]
fn n6314_reorders_onto_n63prime() {
    let perm = [0, 3, 1, 4, 2, 5, 6, 7, 8];
    let p = Matrix::from_fn(9, 9, &(), |i, j| if perm[j] == i { int(1) } else { int(0) });
    for (a, b, c) in [(1, 1, 1), (2, 3, 5), (0, 1, -1)] {
        let n = q("n6314", &[a, b, c]);
        assert_eq!(n.change_basis(&p).unwrap(), q("n63prime", &[a, b, c]));
    }
}

#[test]
fn singular_basis_rejected() {
    let b = Matrix::zeros(3, 3, &());
    assert_eq!(q("h3", &[]).change_basis(&b), Err(LieError::Singular));
}

#[test]
fn every_catalog_algebra_satisfies_jacobi() {
    for e in ALGEBRAS {
        let params: Vec<BigRational> = match e.name {
            "abelian" => vec![int(4)],
            "n442_0" => vec![int(1); 4],
            _ => e.params.iter().enumerate().map(|(i, _)| rat(i as i64 + 1, 1)).collect(),
        };
        let l = catalog_algebra(e.name, &params).unwrap();
        assert!(l.jacobi_check().is_ok(), "{} fails Jacobi", e.name);
        assert!(l.is_nilpotent(), "{} is not nilpotent", e.name);
    }
}

#[test]
fn n442_0_jacobi_forces_equal_pairs() {
    assert!(q("n442_0", &[1, 1, 1, 1]).jacobi_check().is_ok());
    let w = q("n442_0", &[1, 1, 1, 0]).jacobi_check().unwrap_err();
    assert_eq!((w.i, w.j, w.k), (0, 1, 3));
    assert!(q("n442_0", &[1, 2, 1, 1]).jacobi_check().is_err());
}

fn arb_algebra() -> impl Strategy<Value = LieAlgebra<BigRational>> {
    prop_oneof![
        Just(q("n333", &[1, 1, 1])),
        Just(q("U", &[0, 1, 1])),
        Just(q("ntilde", &[1, 1, 1])),
        Just(q("n442_1", &[1, 1])),
        Just(q("n4222", &[])),
        Just(q("h5", &[])),
        Just(q("l4", &[])),
        (-3i64..=3, -3i64..=3, -3i64..=3).prop_map(|(a, b, c)| q("n63prime", &[a, b, c])),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn type_is_basis_invariant(l in arb_algebra(), seed in 0u64..1000) {
        let u = random_unimodular(l.dim(), seed);
        let m = l.change_basis(&u).unwrap();
        prop_assert_eq!(m.graded_type().unwrap().0, l.graded_type().unwrap().0);
        prop_assert!(m.jacobi_check().is_ok());
    }

    #[test]
    fn direct_sum_preserves_jacobi(a in arb_algebra(), b in arb_algebra()) {
        prop_assert!(direct_sum(&[&a, &b]).unwrap().jacobi_check().is_ok());
    }

    #[test]
    fn abelian_factor_is_additive(l in arb_algebra(), k in 0usize..4) {
        let s = direct_sum(&[&l, &LieAlgebra::abelian(k, &())]).unwrap();
        let f = s.abelian_factor();
        prop_assert_eq!(f.dim, l.abelian_factor().dim + k);
        prop_assert!(f.complement.contains_subspace(&s.derived()));
        prop_assert_eq!(f.complement.dim() + f.dim, s.dim());
        prop_assert_eq!(f.factor.intersection(&f.complement).dim(), 0);
        prop_assert!(s.quotient(&f.complement).is_ok());
    }

    #[test]
    fn reduce_drops_last_layer(l in arb_algebra()) {
        let t = l.graded_type().unwrap().0.parts;
        if t.len() >= 2 {
            let r = l.reduce().unwrap();
            let qt = if r.quotient.is_abelian() { vec![r.quotient.dim()] } else { ty(&r.quotient) };
            prop_assert_eq!(qt, t[..t.len() - 1].to_vec());
            if t.len() == 3 {
                prop_assert!(r.derived.graded_type().unwrap().0.parts.len() <= 2);
            }
        }
    }

    #[test]
    fn ad_rank_is_basis_invariant(l in arb_algebra(), seed in 0u64..1000, x in proptest::collection::vec(-3i64..=3, 10)) {
        let n = l.dim();
        let xv: Vec<BigRational> = x.iter().take(n).map(|&v| int(v)).chain(std::iter::repeat(int(0))).take(n).collect();
        let u = random_unimodular(n, seed);
        let m = l.change_basis(&u).unwrap();
        let y = u.inverse().unwrap().mul_vec(&xv);
        prop_assert_eq!(m.ad_image_dim(&y), l.ad_image_dim(&xv));
    }
}
