//! Polynomials over small prime fields and distinct-degree factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::IntPolynomial;

/// Primes up to 100, the search range for irreducibility witnesses.
pub const SMALL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

type Fp = Vec<u64>;

fn trim(mut v: Fp) -> Fp {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn reduce_int(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap_or(0)
}

pub fn reduce(f: &IntPolynomial, p: u64) -> Vec<u64> {
    trim(f.coeffs().iter().map(|c| reduce_int(c, p)).collect())
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|k| {
                let x = a.get(k).copied().unwrap_or(0);
                let y = b.get(k).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let db = b.len() - 1;
    let li = inv_mod(b[db], p);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (db..r.len()).rev() {
        let c = r[k] * li % p;
        if c == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[k - db + j] = (r[k - db + j] + p - c * y % p) % p;
        }
        q[k - db] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = div_rem(&x, &y, p).1;
        x = y;
        y = r;
    }
    monic(x, p)
}

fn monic(a: Fp, p: u64) -> Fp {
    match a.last() {
        None => a,
        Some(&l) => {
            let li = inv_mod(l, p);
            a.into_iter().map(|c| c * li % p).collect()
        }
    }
}

fn derivative(a: &[u64], p: u64) -> Fp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| (k as u64 % p) * c % p)
            .collect(),
    )
}

fn pow_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Fp {
    let mut result = vec![1u64];
    let mut b = div_rem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = div_rem(&mul(&result, &b, p), m, p).1;
        }
        b = div_rem(&mul(&b, &b, p), m, p).1;
        e >>= 1;
    }
    result
}

/// Degrees of the irreducible factors of `f mod p`, or `None` when the
/// reduction drops degree or is not squarefree.
pub fn factor_degrees(f: &IntPolynomial, p: u64) -> Option<Vec<usize>> {
    let n = f.degree()?;
    let fp = reduce(f, p);
    if fp.len() != n + 1 {
        return None;
    }
    let mut g = monic(fp, p);
    if gcd(&g, &derivative(&g, p), p).len() != 1 {
        return None;
    }
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut degrees = Vec::new();
    let mut d = 0usize;
    while g.len() > 1 {
        d += 1;
        if 2 * d > g.len() - 1 {
            degrees.push(g.len() - 1);
            break;
        }
        h = pow_mod(&h, p, &g, p);
        let common = gcd(&sub(&h, &x, p), &g, p);
        let k = common.len() - 1;
        if k > 0 {
            degrees.extend(std::iter::repeat(d).take(k / d));
            g = div_rem(&g, &common, p).0;
            h = div_rem(&h, &g, p).1;
        }
    }
    degrees.sort_unstable();
    Some(degrees)
}

pub fn is_irreducible_mod(f: &IntPolynomial, p: u64) -> bool {
    match (factor_degrees(f, p), f.degree()) {
        (Some(d), Some(n)) => d == vec![n],
        _ => false,
    }
}

/// Subset sums of a factor-degree pattern.
pub fn possible_factor_degrees(pattern: &[usize]) -> Vec<bool> {
    let n: usize = pattern.iter().sum();
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in pattern {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}
