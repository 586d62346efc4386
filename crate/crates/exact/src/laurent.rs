use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rat::BigRat;
use crate::{ExactError, RatFuncQ};

/// Truncated expansion `sum c_e (1/q)^e` for `min_exp <= e <= max_exp`.
///
/// Coefficients beyond `max_exp` are unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentQ {
    coeffs: BTreeMap<i64, BigRat>,
    min_exp: i64,
    max_exp: i64,
}

impl LaurentQ {
    pub fn new(min_exp: i64, max_exp: i64) -> Self {
        assert!(min_exp <= max_exp, "empty window");
        LaurentQ { coeffs: BTreeMap::new(), min_exp, max_exp }
    }

    /// `c (1/q)^e` known exactly up to `(1/q)^max_exp`.
    pub fn monomial(c: BigRat, e: i64, max_exp: i64) -> Self {
        let mut l = Self::new(e.min(max_exp), max_exp);
        l.set(e, c);
        l
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        self.max_exp
    }

    pub fn coeff(&self, e: i64) -> BigRat {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRat)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    fn set(&mut self, e: i64, c: BigRat) {
        if e > self.max_exp {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, c);
        }
    }

    pub fn add(&self, other: &LaurentQ) -> LaurentQ {
        let mut out = LaurentQ::new(self.min_exp.min(other.min_exp), self.max_exp.min(other.max_exp));
        for (e, c) in self.terms().chain(other.terms()) {
            let v = out.coeff(e) + c;
            out.set(e, v);
        }
        out
    }

    /// Product, truncated to the exponents both factors determine.
    pub fn mul(&self, other: &LaurentQ) -> LaurentQ {
        let max = (self.max_exp + other.min_exp).min(other.max_exp + self.min_exp);
        let min = (self.min_exp + other.min_exp).min(max);
        let mut out = LaurentQ::new(min, max);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let e = ea + eb;
                if e <= max {
                    let v = out.coeff(e) + ca * cb;
                    out.set(e, v);
                }
            }
        }
        out
    }

    /// Finite partial sum at `q = q0`.
    pub fn resum(&self, q0: &BigRat) -> BigRat {
        let inv = q0.recip();
        self.terms().fold(BigRat::zero(), |acc, (e, c)| {
            let pw = if e >= 0 { inv.pow(e as i32) } else { q0.pow((-e) as i32) };
            acc + c * pw
        })
    }
}

/// Expand `f` in powers of `1/q` down to `(1/q)^max_neg_power`.
pub fn laurent_expand(f: &RatFuncQ, max_neg_power: i64) -> Result<LaurentQ, ExactError> {
    let Some(gap) = f.degree_gap() else {
        return Ok(LaurentQ::new(max_neg_power, max_neg_power));
    };
    let leading = -gap;
    if max_neg_power < leading {
        return Err(ExactError::WindowTooSmall { leading, requested: max_neg_power });
    }
    let (scale, top, bottom) = f.int_view();
    // In t = 1/q: f = scale * t^leading * rev(top)(t) / rev(bottom)(t).
    let rev = |p: &[BigInt]| p.iter().rev().map(|c| BigRat::from_integer(c.clone())).collect::<Vec<_>>();
    let num = rev(top);
    let den = rev(bottom);
    let len = (max_neg_power - leading + 1) as usize;
    let mut series: Vec<BigRat> = Vec::with_capacity(len);
    let d0 = den[0].clone();
    for k in 0..len {
        let mut v = num.get(k).cloned().unwrap_or_else(BigRat::zero);
        for j in 1..=k.min(den.len() - 1) {
            v -= &den[j] * &series[k - j];
        }
        series.push(if d0.is_one() { v } else { v / &d0 });
    }
    let mut out = LaurentQ::new(leading, max_neg_power);
    for (k, c) in series.into_iter().enumerate() {
        out.set(leading + k as i64, scale * c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};
    use crate::PolyQ;
    use num_traits::Signed;

    fn rf(n: &str, d: &str) -> RatFuncQ {
        RatFuncQ::new(&n.parse::<PolyQ>().unwrap(), &d.parse::<PolyQ>().unwrap()).unwrap()
    }

    /// Independent check: long division of q^a by d, coefficients of q^{-k}.
    fn long_division(num_deg: usize, den: &[i64], upto: i64) -> BTreeMap<i64, BigRat> {
        // remainder r(q) as map exponent -> coeff, starting with q^num_deg
        let mut rem: BTreeMap<i64, BigRat> = BTreeMap::new();
        rem.insert(num_deg as i64, int(1));
        let dd = den.len() as i64 - 1;
        let lead = int(*den.last().unwrap());
        let mut out = BTreeMap::new();
        loop {
            let Some((&top, c)) = rem.iter().next_back() else { break };
            let e = top - dd;
            if -e > upto {
                break;
            }
            let qc = c / &lead;
            for (j, dj) in den.iter().enumerate() {
                let k = e + j as i64;
                let v = rem.get(&k).cloned().unwrap_or_else(BigRat::zero) - &qc * int(*dj);
                if v.is_zero() {
                    rem.remove(&k);
                } else {
                    rem.insert(k, v);
                }
            }
            out.insert(-e, qc);
        }
        out
    }

    #[test]
    fn q2_over_q2_minus_1() {
        let l = laurent_expand(&rf("q^2", "q^2 - 1"), 10).unwrap();
        let oracle = long_division(2, &[-1, 0, 1], 10);
        for e in 0..=10 {
            let want = oracle.get(&e).cloned().unwrap_or_else(BigRat::zero);
            assert_eq!(l.coeff(e), want, "exponent {e}");
            assert_eq!(l.coeff(e), if e % 2 == 0 { int(1) } else { int(0) });
        }
    }

    #[test]
    fn geometric_tail() {
        let l = laurent_expand(&rf("1", "q - 1"), 8).unwrap();
        assert_eq!(l.min_exp(), 1);
        for e in 1..=8 {
            assert_eq!(l.coeff(e), int(1));
        }
        assert_eq!(l.coeff(0), int(0));
    }

    #[test]
    fn constant_and_polynomial() {
        let l = laurent_expand(&RatFuncQ::from_int(5), 3).unwrap();
        assert_eq!(l.terms().count(), 1);
        assert_eq!(l.coeff(0), int(5));
        let l = laurent_expand(&rf("3q^2 + 1", "1"), 0).unwrap();
        assert_eq!(l.coeff(-2), int(3));
        assert_eq!(l.coeff(0), int(1));
    }

    #[test]
    fn window_too_small() {
        let e = laurent_expand(&rf("q^3", "1"), -4).unwrap_err();
        assert_eq!(e, ExactError::WindowTooSmall { leading: -3, requested: -4 });
    }

    #[test]
    fn non_monic_leading_and_resum() {
        let f = rf("1", "2q + 1");
        let l = laurent_expand(&f, 30).unwrap();
        assert_eq!(l.coeff(1), frac(1, 2));
        assert_eq!(l.coeff(2), frac(-1, 4));
        let approx = l.resum(&int(5));
        let exact = f.eval(&int(5)).unwrap();
        let diff = (approx - exact).abs();
        assert!(diff < frac(1, 1_000_000_000));
    }

    #[test]
    fn windowed_product() {
        let a = laurent_expand(&rf("q", "q - 1"), 6).unwrap();
        let b = laurent_expand(&rf("q", "q + 1"), 6).unwrap();
        let prod = a.mul(&b);
        let direct = laurent_expand(&rf("q^2", "q^2 - 1"), 6).unwrap();
        assert_eq!(prod.max_exp(), 6);
        for e in 0..=6 {
            assert_eq!(prod.coeff(e), direct.coeff(e));
        }
    }
}
