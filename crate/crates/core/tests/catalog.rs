use std::collections::BTreeSet;

use anosov_core::anosov::{certify_anosov, CertifyOptions};
use anosov_core::catalog::{algebra_entry, catalog_algebra_int, paper_case, CatalogError, ALGEBRAS, CASE_NAMES};
use anosov_core::exactnum::rational::int;
use anosov_core::exactnum::FieldHandle;
use anosov_core::linalg::Matrix;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn vector(n: usize, entries: &[(usize, i64)]) -> Vec<BigRational> {
    let mut v = vec![int(0); n];
    for &(i, c) in entries {
        v[i] = int(c);
    }
    v
}

#[test]
fn every_case_has_its_expected_type() {
    for name in CASE_NAMES {
        let c = paper_case(name).unwrap();
        assert_eq!(c.name, *name);
        assert!(c.algebra.jacobi_check().is_ok(), "{name}");
        assert_eq!(c.algebra.graded_type().unwrap().0, c.expected_type, "{name}");
        assert!(!c.provenance.is_empty());
    }
}

#[test]
fn every_case_certifies() {
    let opts = CertifyOptions { auto_square: true, ..CertifyOptions::default() };
    for name in CASE_NAMES {
        let c = paper_case(name).unwrap();
        let cert = certify_anosov(&c.algebra, &c.automorphism, &c.basis, opts).unwrap();
        assert!(cert.passed(), "{name}: {:?}", cert.witness);
        assert!(cert.witness.is_none());
        assert!(cert.automorphism.is_ok());
        assert!(cert.margin().is_some_and(|m| m > &int(0)));
        assert!(cert.zbasis.is_ok());
        assert!(cert.integrality.passed());
        for s in &cert.splittings {
            assert!(!s.as_ref().unwrap().low_degree, "{name} has a degree-one factor");
        }
        let squared = matches!(*name, "dim9_333" | "dim10_55");
        assert_eq!(cert.squared, squared, "{name}");
    }
}

#[test]
fn twist_cases_match_catalog_algebras() {
    let cases = [
        ("dim10_622", "n622", [1, 2, 5, 7, 9], [3, 4, 6, 8, 10]),
        ("dim10_424", "n424", [1, 2, 5, 7, 8], [3, 4, 6, 9, 10]),
        ("dim10_4222", "n4222", [1, 2, 5, 7, 9], [3, 4, 6, 8, 10]),
    ];
    for (case, target, copy0, copy1) in cases {
        let c = paper_case(case).unwrap();
        let f = &c.field;
        let slot: Vec<usize> = copy0.iter().chain(&copy1).map(|&k| k - 1).collect();
        // the catalog vector slot[t] is twist vector t
        let p = Matrix::from_fn(10, 10, f, |t, col| if slot[t] == col { f.one() } else { f.zero() });
        let want = catalog_algebra_int(target, &[]).unwrap().lift(f);
        assert_eq!(c.algebra.change_basis(&p).unwrap(), want, "{case}");
    }
}

#[test]
fn u2u3_n3_uses_the_twelve_parameter_point() {
    let c = paper_case("dim9_u2u3_n3").unwrap();
    let g = catalog_algebra_int("g12", &[1, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 1]).unwrap().lift(&c.field);
    assert_eq!(c.algebra, g);
}

#[test]
fn unknown_names_and_parameter_counts() {
    assert_eq!(catalog_algebra_int("nope", &[]), Err(CatalogError::UnknownName("nope".into())));
    assert_eq!(
        catalog_algebra_int("n333", &[1]),
        Err(CatalogError::ParamCount { name: "n333".into(), expected: 3, found: 1 })
    );
    assert!(matches!(catalog_algebra_int("abelian", &[0]), Err(CatalogError::BadParameter(_))));
    assert!(paper_case("dim11_nothing").is_err());
}

#[test]
fn catalog_names_are_unique_and_documented() {
    let names: BTreeSet<&str> = ALGEBRAS.iter().map(|e| e.name).collect();
    assert_eq!(names.len(), ALGEBRAS.len());
    for e in ALGEBRAS {
        assert!(!e.description.is_empty());
        assert_eq!(algebra_entry(e.name).unwrap().name, e.name);
    }
}

#[test]
fn type_table() {
    let table: [(&str, &[i64], &[usize]); 8] = [
        ("n333", &[1, 1, 1], &[3, 3, 3]),
        ("U", &[0, 1, 1], &[6, 3]),
        ("ntilde", &[1, 1, 1], &[6, 3]),
        ("n55", &[], &[5, 5]),
        ("n622", &[], &[6, 2, 2]),
        ("n442_0", &[1, 1, 1, 1], &[4, 4, 2]),
        ("n442_1", &[1, 1], &[4, 4, 2]),
        ("n424", &[], &[4, 2, 4]),
    ];
    for (name, p, ty) in table {
        let l = catalog_algebra_int(name, p).unwrap();
        assert!(l.jacobi_check().is_ok(), "{name}");
        assert_eq!(l.graded_type().unwrap().0.parts, ty, "{name}");
    }
}

/// `dim Im(ad X)` on the two (4,4,2) algebras, read on n itself.
#[test]
fn ad_rank_on_442_algebras() {
    let n0 = catalog_algebra_int("n442_0", &[1, 1, 1, 1]).unwrap();
    let n1 = catalog_algebra_int("n442_1", &[1, 1]).unwrap();
    // indices: X1..X4 = 0..3, Z1..Z4 = 4..7, W1, W2 = 8, 9
    let rows: [(&[(usize, i64)], usize, usize); 12] = [
        (&[(0, 1)], 4, 3),
        (&[(1, 1)], 4, 3),
        (&[(2, 1)], 2, 2),
        (&[(3, 1)], 2, 2),
        (&[(0, 1), (1, 1)], 4, 4),
        (&[(0, 1), (1, 2)], 4, 4),
        (&[(0, 1), (2, 1)], 5, 4),
        (&[(0, 1), (4, 1)], 4, 3),
        (&[(0, 1), (5, 1)], 4, 4),
        (&[(1, 1), (4, 1)], 4, 4),
        (&[(1, 1), (5, 1)], 4, 3),
        (&[(0, 1), (1, 2), (2, 3), (3, 5), (4, 7)], 5, 5),
    ];
    for (x, r0, r1) in rows {
        let v = vector(10, x);
        assert_eq!(n0.ad_image_dim(&v), r0, "n0 at {x:?}");
        assert_eq!(n1.ad_image_dim(&v), r1, "n1 at {x:?}");
    }

    // rank 3 is attained in n1 but not seen in n0
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..400 {
        let v: Vec<BigRational> = (0..10).map(|_| int(rng.gen_range(-2..=2))).collect();
        assert_ne!(n0.ad_image_dim(&v), 3, "n0 at {v:?}");
    }
}

/// The same invariant read on the quotient by the last layer does not separate them.
#[test]
fn ad_rank_on_442_quotients() {
    let q0 = catalog_algebra_int("n442_0", &[1, 1, 1, 1]).unwrap().reduce().unwrap();
    let q1 = catalog_algebra_int("n442_1", &[1, 1]).unwrap().reduce().unwrap();
    assert_eq!(q0.kept, (0..8).collect::<Vec<_>>());
    assert_eq!(q0.quotient, q1.quotient);
    let q = &q0.quotient;
    assert_eq!(q.ad_image_dim(&vector(8, &[(0, 1)])), 2);
    assert_eq!(q.ad_image_dim(&vector(8, &[(2, 1)])), 2);
    assert_eq!(q.ad_image_dim(&vector(8, &[(0, 1), (2, 1)])), 3);
}
