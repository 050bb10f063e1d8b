//! Helpers around [`BigRational`].

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The rational number type used throughout the crate.
pub type Rational = BigRational;

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `2^-bits` as a rational.
pub fn dyadic_unit(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits as usize)
}

/// Rounds `q` to the nearest multiple of `2^-bits`.
pub fn round_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let scaled = q.numer() << bits as usize;
    let den = q.denom();
    let two = BigInt::from(2);
    let n = (&scaled * &two + den).div_floor(&(den * &two));
    BigRational::new(n, BigInt::one() << bits as usize)
}

/// Exact dyadic conversion of a finite float, rounded to `bits` fractional bits.
pub fn from_f64(x: f64, bits: u32) -> BigRational {
    match BigRational::from_float(x) {
        Some(q) => round_dyadic(&q, bits),
        None => BigRational::zero(),
    }
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn ceil_int(q: &BigRational) -> BigInt {
    q.numer().div_ceil(q.denom())
}

fn floor_int(q: &BigRational) -> BigInt {
    q.numer().div_floor(q.denom())
}

/// An upper bound for `sqrt(q)` with absolute error at most `2^-bits` (q ≥ 0).
pub fn sqrt_upper(q: &BigRational, bits: u32) -> BigRational {
    assert!(!q.is_negative(), "sqrt of a negative rational");
    let scale = BigInt::one() << (2 * bits) as usize;
    let v = ceil_int(&(q * from_bigint(scale)));
    let mut s = v.sqrt();
    if &s * &s < v {
        s += 1;
    }
    BigRational::new(s, BigInt::one() << bits as usize)
}

/// A lower bound for `sqrt(q)` with absolute error at most `2^-bits` (q ≥ 0).
pub fn sqrt_lower(q: &BigRational, bits: u32) -> BigRational {
    assert!(!q.is_negative(), "sqrt of a negative rational");
    let scale = BigInt::one() << (2 * bits) as usize;
    let v = floor_int(&(q * from_bigint(scale)));
    BigRational::new(v.sqrt(), BigInt::one() << bits as usize)
}

pub fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

/// Lowest common multiple of the denominators.
pub fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Decimal rendering truncated toward negative infinity.
pub fn to_decimal_floor(q: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let v = floor_int(&(q * from_bigint(scale.clone())));
    let neg = v.sign() == Sign::Minus;
    let abs = v.abs();
    let (ip, fp) = abs.div_rem(&scale);
    let mut frac = fp.to_string();
    while frac.len() < digits as usize {
        frac.insert(0, '0');
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&ip.to_string());
    if digits > 0 {
        out.push('.');
        out.push_str(&frac);
    }
    out
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(from_bigint),
    }
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_bounds_bracket_the_root() {
        let two = int(2);
        let lo = sqrt_lower(&two, 64);
        let hi = sqrt_upper(&two, 64);
        assert!(&lo * &lo <= two);
        assert!(&hi * &hi >= two);
        assert!(&hi - &lo <= dyadic_unit(63));
    }

    #[test]
    fn decimal_floor_rounds_down() {
        assert_eq!(to_decimal_floor(&rat(1, 3), 4), "0.3333");
        assert_eq!(to_decimal_floor(&rat(-1, 3), 2), "-0.34");
        assert_eq!(to_decimal_floor(&int(2), 0), "2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "3/4", "-12/5"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4/6"), Some(rat(2, 3)));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn dyadic_rounding_is_nearest() {
        assert_eq!(round_dyadic(&rat(1, 3), 2), rat(1, 4));
        assert_eq!(round_dyadic(&rat(2, 3), 2), rat(3, 4));
    }
}
