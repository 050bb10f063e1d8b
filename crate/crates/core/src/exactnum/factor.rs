//! Irreducibility witnesses and bounded factor search for integer polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::{factor_degrees, possible_factor_degrees, SMALL_PRIMES};
use super::poly::{IntPolynomial, RatPolynomial};
use super::rational::from_bigint;

/// Largest factor degree tried by the Kronecker search.
pub const MAX_TRIAL_DEGREE: usize = 8;
const MAX_COMBINATIONS: u64 = 2_000_000;
const MAX_TRIAL_DIVISOR: u64 = 10_000_000;

/// How irreducibility of a modulus was established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityWitness {
    /// The reduction mod `p` is irreducible of the same degree.
    ModPrime(u64),
    /// Factor-degree patterns modulo these primes admit no proper factor degree.
    DegreePatterns(Vec<u64>),
    /// Every candidate factor degree was excluded by exhaustive Kronecker search.
    ExhaustiveSearch,
    /// No proof was found within the search bounds.
    Unverified,
}

impl IrreducibilityWitness {
    pub fn is_verified(&self) -> bool {
        !matches!(self, IrreducibilityWitness::Unverified)
    }
}

/// Outcome of the irreducibility analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(IrreducibilityWitness),
    /// A proper factor (monic up to sign, positive degree).
    Reducible(IntPolynomial),
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if d > MAX_TRIAL_DIVISOR {
            return None;
        }
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    let neg: Vec<BigInt> = out.iter().map(|d| -d).collect();
    out.extend(neg);
    Some(out)
}

/// Lagrange interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> RatPolynomial {
    let mut acc = RatPolynomial::zero();
    for i in 0..xs.len() {
        let mut basis = RatPolynomial::one();
        let mut denom = BigInt::one();
        for j in 0..xs.len() {
            if i != j {
                basis = basis.mul(&RatPolynomial::new(vec![
                    from_bigint(-&xs[j]),
                    BigRational::one(),
                ]));
                denom *= &xs[i] - &xs[j];
            }
        }
        acc = acc.add(&basis.scale(&BigRational::new(ys[i].clone(), denom)));
    }
    acc
}

/// Exact divisibility of integer polynomials; returns the quotient.
pub fn exact_quotient(f: &IntPolynomial, g: &IntPolynomial) -> Option<IntPolynomial> {
    let (q, r) = f.to_rational().div_rem(&g.to_rational());
    if r.is_zero() {
        q.to_int()
    } else {
        None
    }
}

enum Search {
    Found(IntPolynomial),
    NoFactor,
    GaveUp,
}

/// Kronecker search for a factor of degree exactly `k`.
fn kronecker(f: &IntPolynomial, k: usize) -> Search {
    let mut points: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
    let mut candidates: Vec<(BigInt, BigInt)> = Vec::new();
    for x in 0..=40i64 {
        for x in [x, -x] {
            let xb = BigInt::from(x);
            if candidates.iter().any(|(c, _)| *c == xb) {
                continue;
            }
            let v = f.eval(&xb);
            if v.is_zero() {
                return Search::Found(IntPolynomial::new(vec![-xb, BigInt::one()]));
            }
            candidates.push((xb, v));
        }
    }
    candidates.sort_by_key(|(_, v)| v.abs());
    for (x, v) in candidates {
        if points.len() == k + 1 {
            break;
        }
        match divisors(&v) {
            Some(d) => points.push((x, d)),
            None => return Search::GaveUp,
        }
    }
    if points.len() < k + 1 {
        return Search::GaveUp;
    }
    let total: u64 = points
        .iter()
        .try_fold(1u64, |acc, (_, d)| acc.checked_mul(d.len() as u64))
        .unwrap_or(u64::MAX);
    if total > MAX_COMBINATIONS {
        return Search::GaveUp;
    }
    let xs: Vec<BigInt> = points.iter().map(|(x, _)| x.clone()).collect();
    let mut idx = vec![0usize; points.len()];
    loop {
        // fix the sign of the first value to skip ±g duplicates
        if points[0].1[idx[0]].is_positive() {
            let ys: Vec<BigInt> = idx
                .iter()
                .zip(&points)
                .map(|(&i, (_, d))| d[i].clone())
                .collect();
            let g = interpolate(&xs, &ys);
            if g.degree() == Some(k) {
                if let Some(gi) = g.to_int() {
                    if exact_quotient(f, &gi).is_some() {
                        return Search::Found(gi);
                    }
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Search::NoFactor;
            }
            idx[pos] += 1;
            if idx[pos] < points[pos].1.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Decides irreducibility of a monic integer polynomial of positive degree.
pub fn analyze(f: &IntPolynomial) -> Irreducibility {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Irreducibility::Irreducible(IrreducibilityWitness::Unverified),
    };
    if n == 1 {
        return Irreducibility::Irreducible(IrreducibilityWitness::ModPrime(2));
    }
    let fr = f.to_rational();
    let g = fr.gcd(&fr.derivative());
    if g.degree().is_some_and(|d| d > 0) {
        return Irreducibility::Reducible(g.primitive_int());
    }
    let mut possible = vec![true; n + 1];
    let mut used = Vec::new();
    for &p in SMALL_PRIMES.iter() {
        if let Some(pattern) = factor_degrees(f, p) {
            if pattern == [n] {
                return Irreducibility::Irreducible(IrreducibilityWitness::ModPrime(p));
            }
            let reach = possible_factor_degrees(&pattern);
            for (d, ok) in possible.iter_mut().enumerate() {
                *ok &= reach[d];
            }
            used.push(p);
        }
    }
    let open: Vec<usize> = (1..=n / 2).filter(|&d| possible[d]).collect();
    if open.is_empty() {
        return Irreducibility::Irreducible(IrreducibilityWitness::DegreePatterns(used));
    }
    let mut exhaustive = true;
    for d in open {
        if d > MAX_TRIAL_DEGREE {
            exhaustive = false;
            continue;
        }
        match kronecker(f, d) {
            Search::Found(g) => return Irreducibility::Reducible(g),
            Search::NoFactor => {}
            Search::GaveUp => exhaustive = false,
        }
    }
    Irreducibility::Irreducible(if exhaustive {
        IrreducibilityWitness::ExhaustiveSearch
    } else {
        IrreducibilityWitness::Unverified
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn catalog_moduli_have_small_prime_witnesses() {
        assert_eq!(
            analyze(&p(&[1, -3, 0, 1])),
            Irreducibility::Irreducible(IrreducibilityWitness::ModPrime(2))
        );
        assert_eq!(
            analyze(&p(&[1, -3, 1])),
            Irreducibility::Irreducible(IrreducibilityWitness::ModPrime(2))
        );
        assert!(matches!(
            analyze(&p(&[1, 3, -3, -4, 1, 1])),
            Irreducibility::Irreducible(IrreducibilityWitness::ModPrime(_))
        ));
    }

    #[test]
    fn finds_linear_and_quadratic_factors() {
        assert!(matches!(analyze(&p(&[-1, 0, 1])), Irreducibility::Reducible(_)));
        // (t^2 + 1)(t^2 + t + 3)
        let f = p(&[1, 0, 1]).mul(&p(&[3, 1, 1]));
        match analyze(&f) {
            Irreducibility::Reducible(g) => assert!(exact_quotient(&f, &g).is_some()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn biquadratic_needs_exhaustive_search() {
        assert_eq!(
            analyze(&p(&[1, 0, -10, 0, 1])),
            Irreducibility::Irreducible(IrreducibilityWitness::ExhaustiveSearch)
        );
    }

    #[test]
    fn repeated_factor_is_reducible() {
        let f = p(&[1, 1]).mul(&p(&[1, 1])).mul(&p(&[1, 0, 1]));
        assert!(matches!(analyze(&f), Irreducibility::Reducible(_)));
    }
}
