//! Infinite products `prod_{i>=1} (1 ± q^{-(a i + b)})` with certified error.

use std::fmt;

use atlas_exact::rat::{int, to_decimal};
use atlas_exact::{BigInt, BigRat};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::AsymError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorSign {
    OnePlus,
    OneMinus,
}

/// `prod_{i>=1} (1 ± q^{-(a i + b)})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pattern {
    pub sign: FactorSign,
    pub a: u32,
    pub b: i32,
}

impl Pattern {
    pub fn new(sign: FactorSign, a: u32, b: i32) -> Result<Self, AsymError> {
        if a == 0 {
            return Err(AsymError::NotIncreasing);
        }
        if a as i64 + b as i64 <= 0 {
            return Err(AsymError::Degenerate { a, b });
        }
        Ok(Pattern { sign, a, b })
    }

    /// `prod (1 + 1/q^{2i-1})`
    pub fn odd_plus() -> Self {
        Pattern { sign: FactorSign::OnePlus, a: 2, b: -1 }
    }

    /// `prod (1 - 1/q^{2i-1})`
    pub fn odd_minus() -> Self {
        Pattern { sign: FactorSign::OneMinus, a: 2, b: -1 }
    }

    /// `prod (1 + 1/q^{2i})`
    pub fn even_plus() -> Self {
        Pattern { sign: FactorSign::OnePlus, a: 2, b: 0 }
    }

    fn exponent(&self, i: u64) -> u64 {
        (self.a as i64 * i as i64 + self.b as i64) as u64
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == FactorSign::OnePlus { '+' } else { '-' };
        match self.b {
            0 => write!(f, "prod (1 {s} 1/q^({}i))", self.a),
            b if b < 0 => write!(f, "prod (1 {s} 1/q^({}i-{}))", self.a, -b),
            b => write!(f, "prod (1 {s} 1/q^({}i+{}))", self.a, b),
        }
    }
}

/// An exact rational together with a bound on its distance to the true value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounded {
    pub value: BigRat,
    pub err: BigRat,
}

impl Bounded {
    pub fn exact(value: BigRat) -> Self {
        Bounded { value, err: BigRat::zero() }
    }

    pub fn add(&self, o: &Bounded) -> Bounded {
        Bounded { value: &self.value + &o.value, err: &self.err + &o.err }
    }

    pub fn sub(&self, o: &Bounded) -> Bounded {
        Bounded { value: &self.value - &o.value, err: &self.err + &o.err }
    }

    pub fn mul(&self, o: &Bounded) -> Bounded {
        let err = self.value.abs() * &o.err + o.value.abs() * &self.err + &self.err * &o.err;
        Bounded { value: &self.value * &o.value, err }
    }

    pub fn scale(&self, c: &BigRat) -> Bounded {
        Bounded { value: &self.value * c, err: &self.err * c.abs() }
    }

    pub fn decimal(&self, digits: usize) -> String {
        to_decimal(&self.value, digits)
    }
}

impl fmt::Display for Bounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {}", to_decimal(&self.value, 12), to_decimal(&self.err, 12))
    }
}

/// Partial product over `i <= I`, with `I` chosen so the tail moves the value
/// by less than `eps`.
///
/// With `S = sum_{i>I} q^{-(a i + b)} <= q^{-(a(I+1)+b)} / (1 - q^{-a})` and
/// `S <= 1`, the tail product lies within `2S` of 1 for either sign.
pub fn infinite_product(pattern: &Pattern, q: &BigInt, eps: &BigRat) -> Result<Bounded, AsymError> {
    if !eps.is_positive() {
        return Err(AsymError::BadEps);
    }
    if *q < BigInt::from(2) {
        return Err(AsymError::BadBase(q.to_string()));
    }
    Pattern::new(pattern.sign, pattern.a, pattern.b)?;
    let qr = BigRat::from_integer(q.clone());
    let geometric = BigRat::one() / (BigRat::one() - qr.pow(-(pattern.a as i32)));
    let mut value = BigRat::one();
    let mut i = 0u64;
    loop {
        i += 1;
        let x = qr.pow(-(pattern.exponent(i) as i32));
        value = match pattern.sign {
            FactorSign::OnePlus => value * (BigRat::one() + x),
            FactorSign::OneMinus => value * (BigRat::one() - x),
        };
        let tail = qr.pow(-(pattern.exponent(i + 1) as i32)) * &geometric;
        if tail <= BigRat::one() {
            let err = &value * &tail * int(2);
            if &err < eps {
                return Ok(Bounded { value, err });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use atlas_exact::rat::{frac, to_f64};

    #[test]
    fn documented_products() {
        let p = infinite_product(&Pattern::odd_plus(), &BigInt::from(3), &frac(1, 100_000)).unwrap();
        assert!((to_f64(&p.value) - 1.38912).abs() < 1e-4, "{p}");
        let big = BigInt::from(1_000_000);
        let m = infinite_product(&Pattern::odd_minus(), &big, &frac(1, 10_000_000)).unwrap();
        let first = BigRat::one() - BigRat::new(BigInt::one(), big);
        assert!((&m.value - first).abs() < frac(1, 100_000));
    }

    #[test]
    fn degenerate_patterns_rejected() {
        assert_eq!(Pattern::new(FactorSign::OneMinus, 2, -2), Err(AsymError::Degenerate { a: 2, b: -2 }));
        assert_eq!(Pattern::new(FactorSign::OnePlus, 0, 1), Err(AsymError::NotIncreasing));
        assert!(infinite_product(&Pattern::odd_plus(), &BigInt::from(3), &int(0)).is_err());
    }

    #[test]
    fn error_bound_is_honest() {
        // Compare a coarse product with a much finer one.
        for q in [2u64, 3, 5] {
            let q = BigInt::from(q);
            for pat in [Pattern::odd_plus(), Pattern::odd_minus(), Pattern::even_plus()] {
                let coarse = infinite_product(&pat, &q, &frac(1, 100)).unwrap();
                let fine = infinite_product(&pat, &q, &frac(1, 1_000_000_000_000)).unwrap();
                assert!((&coarse.value - &fine.value).abs() <= &coarse.err + &fine.err, "{pat} q={q}");
            }
        }
    }
}
