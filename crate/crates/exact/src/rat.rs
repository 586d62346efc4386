//! Rational helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::ExactError;

pub type BigRat = num_rational::BigRational;

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// `a` or `a/b`.
pub fn render(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(s: &str) -> Result<BigRat, ExactError> {
    let bad = |reason: &str| ExactError::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| bad("bad denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRat::new(n, d))
}

/// Fixed-point decimal rendering, rounded to nearest at `digits` places.
pub fn to_decimal(r: &BigRat, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = r * BigRat::from_integer(scale.clone());
    let neg = scaled.is_negative();
    let a = scaled.abs();
    let rounded = (a + frac(1, 2)).floor().to_integer();
    let mut s = rounded.to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
        }
        s.insert(s.len() - digits, '.');
    }
    if neg && rounded != BigInt::zero() {
        s.insert(0, '-');
    }
    s
}

/// Nearest `f64`; display and heuristics only.
pub fn to_f64(r: &BigRat) -> f64 {
    let d = to_decimal(r, 20);
    d.parse().unwrap_or(f64::NAN)
}
