//! Certified isolation of the complex roots of a squarefree polynomial.
//!
//! Approximations come from Aberth–Ehrlich iterations, first in `f64` and then
//! in dyadic rationals. Each approximation `z` gets the a-posteriori radius
//! `d·|m(z)|/|m'(z)|`, which always encloses a root; pairwise disjoint discs
//! therefore contain exactly one root each.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::complex::{eval_complex, ComplexBall, ComplexRational};
use super::poly::RatPolynomial;
use super::rational::{dyadic_unit, from_f64, int, sqrt_upper, to_f64};

/// Initial working precision in bits.
pub const INITIAL_PRECISION: u32 = 128;
/// Default refinement cap in bits.
pub const DEFAULT_PRECISION_CAP: u32 = 1024;

/// Certified root discs of a polynomial at a given working precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDiscs {
    pub precision: u32,
    pub discs: Vec<ComplexBall>,
}

fn aberth_f64(p: &RatPolynomial) -> Vec<Complex64> {
    let lead = to_f64(p.leading().expect("nonzero polynomial"));
    let c: Vec<f64> = p.coeffs().iter().map(|x| to_f64(x) / lead).collect();
    let n = c.len() - 1;
    // Fujiwara bound
    let mut bound: f64 = 0.0;
    for k in 1..=n {
        let a = c[n - k].abs();
        let v = if k == n { (a / 2.0).powf(1.0 / k as f64) } else { a.powf(1.0 / k as f64) };
        bound = bound.max(v);
    }
    let r0 = (2.0 * bound).max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(r0, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for &a in c.iter().rev() {
            d = d * x + v;
            v = v * x + a;
        }
        (v, d)
    };
    for _ in 0..500 {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let (v, d) = eval(z[k]);
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = v / d;
            let s: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| Complex64::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[k] -= w;
                worst = worst.max(w.norm() / z[k].norm().max(1.0));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

fn aberth_exact_pass(
    p: &RatPolynomial,
    dp: &RatPolynomial,
    z: &mut [ComplexRational],
    bits: u32,
) -> BigRational {
    let n = z.len();
    let one = ComplexRational::real(int(1));
    let mut worst = BigRational::zero();
    for k in 0..n {
        let v = eval_complex(p, &z[k]);
        if v.is_zero() {
            continue;
        }
        let d = eval_complex(dp, &z[k]);
        let ratio = match v.div(&d) {
            Some(r) => r,
            None => continue,
        };
        let mut s = ComplexRational::zero();
        for j in 0..n {
            if j != k {
                if let Some(q) = one.div(&z[k].sub(&z[j])) {
                    s = s.add(&q);
                }
            }
        }
        let denom = one.sub(&ratio.mul(&s));
        let w = match ratio.div(&denom) {
            Some(w) => w,
            None => continue,
        };
        let size = w.norm_sq();
        if size > worst {
            worst = size;
        }
        z[k] = z[k].sub(&w).round(bits);
    }
    worst
}

fn certify(p: &RatPolynomial, dp: &RatPolynomial, z: &[ComplexRational], bits: u32) -> Option<Vec<ComplexBall>> {
    let n = z.len();
    let nn = int(n as i64);
    let mut discs = Vec::with_capacity(n);
    for c in z {
        let v = eval_complex(p, c);
        let radius = if v.is_zero() {
            BigRational::zero()
        } else {
            let d = eval_complex(dp, c).norm_sq();
            if d.is_zero() {
                return None;
            }
            let r2 = &nn * &nn * v.norm_sq() / d;
            sqrt_upper(&r2, 2 * bits + 32)
        };
        discs.push(ComplexBall { center: c.clone(), radius });
    }
    for i in 0..n {
        for j in i + 1..n {
            if !discs[i].disjoint_from(&discs[j]) {
                return None;
            }
        }
    }
    Some(discs)
}

/// Isolates all roots of a squarefree polynomial at the requested precision.
/// Returns `None` if the discs could not be separated at that precision.
pub fn isolate_roots(p: &RatPolynomial, bits: u32) -> Option<RootDiscs> {
    let n = p.degree()?;
    if n == 0 {
        return Some(RootDiscs { precision: bits, discs: Vec::new() });
    }
    if n == 1 {
        let root = -(p.coeff(0) / p.coeff(1));
        return Some(RootDiscs {
            precision: bits,
            discs: vec![ComplexBall::exact(ComplexRational::real(root))],
        });
    }
    let dp = p.derivative();
    let approx = aberth_f64(p);
    let mut z: Vec<ComplexRational> = approx
        .iter()
        .map(|w| ComplexRational::new(from_f64(w.re, bits), from_f64(w.im, bits)))
        .collect();
    let target = {
        let u = dyadic_unit(bits.saturating_sub(8));
        &u * &u
    };
    for _ in 0..64 {
        let worst = aberth_exact_pass(p, &dp, &mut z, bits);
        if worst <= target {
            break;
        }
    }
    // one more pass once converged tightens the residuals used for the radii
    aberth_exact_pass(p, &dp, &mut z, bits);
    certify(p, &dp, &z, bits).map(|discs| RootDiscs { precision: bits, discs })
}

/// Isolates roots starting at [`INITIAL_PRECISION`] and doubling up to `cap` bits.
pub fn isolate_roots_capped(p: &RatPolynomial, start: u32, cap: u32) -> Option<RootDiscs> {
    let mut bits = start.max(16);
    loop {
        if let Some(r) = isolate_roots(p, bits) {
            return Some(r);
        }
        if bits >= cap {
            return None;
        }
        bits = (bits * 2).min(cap);
    }
}
