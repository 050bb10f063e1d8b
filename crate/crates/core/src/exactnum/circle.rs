//! Unit tests for algebraic numbers and their position relative to the unit circle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{minimal_poly, FieldElement};
use super::poly::{IntPolynomial, RatPolynomial};
use super::rational::int;
use super::roots::DEFAULT_PRECISION_CAP;
use super::ExactError;

/// Whether a polynomial is the minimal polynomial of an algebraic unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCertificate {
    pub min_poly: IntPolynomial,
    pub is_unit: bool,
    /// Degree-one polynomials (rational eigenvalues).
    pub low_degree: bool,
}

pub fn poly_unit_check(p: &IntPolynomial) -> Result<UnitCertificate, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let c0 = p.coeff(0);
    let is_unit = p.is_monic() && c0.abs().is_one();
    Ok(UnitCertificate { min_poly: p.clone(), is_unit, low_degree: p.degree() == Some(1) })
}

/// Unit certificate for a field element via its minimal polynomial.
pub fn unit_certificate(a: &FieldElement) -> UnitCertificate {
    let mp = minimal_poly(a);
    let p = mp.to_int();
    let mut cert = poly_unit_check(&p).expect("minimal polynomials are nonzero");
    cert.is_unit &= mp.integral;
    cert
}

/// Position of every conjugate relative to the unit circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircleVerdict {
    /// All conjugates are certified off the circle; `margin` is a lower bound
    /// on their distance to it.
    OffCircle { margin: BigRational },
    /// Some conjugate lies exactly on the circle.
    OnCircle,
    /// Neither could be certified within the precision cap.
    Inconclusive,
}

/// Sturm-sequence count of distinct real roots in the open interval `(a, b)`.
fn sturm_count(p: &RatPolynomial, a: &BigRational, b: &BigRational) -> usize {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().map_or(true, |q| q.is_zero()) {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]).neg();
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    let changes = |x: &BigRational| {
        let signs: Vec<bool> = seq
            .iter()
            .map(|q| q.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    changes(a).saturating_sub(changes(b))
}

/// For a palindromic `q` of even degree `2h`, the `g` with `q(t) = t^h g(t + 1/t)`.
fn trace_polynomial(q: &RatPolynomial) -> RatPolynomial {
    let n = q.degree().unwrap_or(0);
    let h = n / 2;
    // P_k(x) expresses t^k + t^-k in x = t + 1/t
    let mut p: Vec<RatPolynomial> = vec![RatPolynomial::constant(int(2)), RatPolynomial::x()];
    for k in 2..=h {
        let next = RatPolynomial::x().mul(&p[k - 1]).sub(&p[k - 2]);
        p.push(next);
    }
    let mut g = RatPolynomial::constant(q.coeff(h));
    for k in 1..=h {
        g = g.add(&p[k].scale(&q.coeff(h + k)));
    }
    g
}

fn is_palindromic(q: &RatPolynomial) -> bool {
    let c = q.coeffs();
    let n = c.len();
    (0..n).all(|i| c[i] == c[n - 1 - i])
}

/// Exact decision whether some root of the irreducible `q` has absolute value 1.
fn has_root_on_circle(q: &RatPolynomial) -> bool {
    match q.degree() {
        None | Some(0) => false,
        Some(1) => {
            let r = -(q.coeff(0) / q.coeff(1));
            r.abs().is_one()
        }
        Some(n) => {
            // an irreducible polynomial with a root on the circle is self-reciprocal
            if n % 2 == 1 || !is_palindromic(q) {
                return false;
            }
            let g = trace_polynomial(q);
            sturm_count(&g, &int(-2), &int(2)) > 0
        }
    }
}

pub fn certify_abs_neq_one(a: &FieldElement) -> CircleVerdict {
    certify_abs_neq_one_capped(a, DEFAULT_PRECISION_CAP)
}

/// As [`certify_abs_neq_one`] with an explicit refinement cap in bits.
pub fn certify_abs_neq_one_capped(a: &FieldElement, cap: u32) -> CircleVerdict {
    let mp = minimal_poly(a);
    if has_root_on_circle(&mp.poly) {
        return CircleVerdict::OnCircle;
    }
    if let Some(q) = a.as_rational() {
        if q.is_zero() {
            return CircleVerdict::Inconclusive;
        }
        return CircleVerdict::OffCircle { margin: (q.abs() - BigRational::one()).abs() };
    }
    let mut bits = a.field().root_discs().precision;
    loop {
        let balls = match a.embeddings_at(bits) {
            Ok(b) => b,
            Err(_) => return CircleVerdict::Inconclusive,
        };
        let margins: Option<Vec<BigRational>> =
            balls.iter().map(|b| b.unit_circle_margin(bits + 16)).collect();
        if let Some(m) = margins {
            let margin = m.into_iter().min().unwrap_or_else(BigRational::zero);
            return CircleVerdict::OffCircle { margin };
        }
        if bits >= cap {
            return CircleVerdict::Inconclusive;
        }
        bits = (bits * 2).min(cap);
    }
}

/// `true` for polynomials whose roots are closed under `z ↦ 1/z` (up to sign).
pub fn is_self_reciprocal(p: &IntPolynomial) -> bool {
    let r = p.reversed();
    r == *p || r == IntPolynomial::new(p.coeffs().iter().map(|c| -c).collect::<Vec<BigInt>>())
}
