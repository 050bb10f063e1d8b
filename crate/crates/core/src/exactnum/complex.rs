//! Exact complex rationals and certified complex discs.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::RatPolynomial;
use super::rational::{round_dyadic, sqrt_lower, sqrt_upper, to_f64};

/// A complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ComplexRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl ComplexRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ComplexRational { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        ComplexRational { re, im: BigRational::zero() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.re * c, &self.im * c)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `None` when dividing by zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        let n = o.norm_sq();
        if n.is_zero() {
            return None;
        }
        let num = self.mul(&o.conj());
        Some(Self::new(num.re / &n, num.im / n))
    }

    /// Cheap upper bound `|re| + |im| ≥ |z|`.
    pub fn abs_upper_l1(&self) -> BigRational {
        self.re.abs() + self.im.abs()
    }

    pub fn round(&self, bits: u32) -> Self {
        Self::new(round_dyadic(&self.re, bits), round_dyadic(&self.im, bits))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }
}

/// Evaluates a rational polynomial at a complex rational point.
pub fn eval_complex(p: &RatPolynomial, z: &ComplexRational) -> ComplexRational {
    p.coeffs()
        .iter()
        .rev()
        .fold(ComplexRational::zero(), |acc, c| {
            let m = acc.mul(z);
            ComplexRational::new(m.re + c, m.im)
        })
}

/// Taylor coefficients `p^(k)(z)/k!`, `k = 0..=deg p`.
pub fn taylor_at(p: &RatPolynomial, z: &ComplexRational) -> Vec<ComplexRational> {
    let mut work: Vec<ComplexRational> = p
        .coeffs()
        .iter()
        .map(|c| ComplexRational::real(c.clone()))
        .collect();
    let n = work.len();
    let mut out = Vec::with_capacity(n);
    // repeated synthetic division by (x - z)
    for k in 0..n {
        for i in (k..n - 1).rev() {
            let t = work[i + 1].mul(z);
            work[i] = work[i].add(&t);
        }
        out.push(work[k].clone());
    }
    out
}

/// A closed disc `{w : |w - center| ≤ radius}` certified to contain some value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBall {
    pub center: ComplexRational,
    pub radius: BigRational,
}

impl ComplexBall {
    pub fn exact(center: ComplexRational) -> Self {
        ComplexBall { center, radius: BigRational::zero() }
    }

    pub fn disjoint_from(&self, other: &ComplexBall) -> bool {
        let d = self.center.sub(&other.center).norm_sq();
        let r = &self.radius + &other.radius;
        d > &r * &r
    }

    pub fn contains_point(&self, z: &ComplexRational) -> bool {
        self.center.sub(z).norm_sq() <= &self.radius * &self.radius
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBall {
            center: self.center.add(&o.center),
            radius: &self.radius + &o.radius,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let a = self.center.abs_upper_l1();
        let b = o.center.abs_upper_l1();
        ComplexBall {
            center: self.center.mul(&o.center),
            radius: &a * &o.radius + &b * &self.radius + &self.radius * &o.radius,
        }
    }

    /// Certified lower bound on the distance from the disc to the unit circle;
    /// `None` when the disc meets the circle.
    pub fn unit_circle_margin(&self, bits: u32) -> Option<BigRational> {
        let n = self.center.norm_sq();
        let one = BigRational::from_integer(1.into());
        let lo = sqrt_lower(&n, bits);
        let hi = sqrt_upper(&n, bits);
        let outside = &lo - &one - &self.radius;
        if outside.is_positive() {
            return Some(outside);
        }
        let inside = &one - &hi - &self.radius;
        if inside.is_positive() {
            return Some(inside);
        }
        None
    }

    pub fn center_f64(&self) -> (f64, f64) {
        self.center.to_f64()
    }
}
