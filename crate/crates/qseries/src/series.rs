use std::fmt;

use atlas_exact::exec::{self, Strategy};
use atlas_exact::{BigRat, RatFuncQ};

use crate::SeriesError;

/// Power series in `u` with rational-function coefficients, known through
/// `u^trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries {
    coeffs: Vec<RatFuncQ>,
}

impl USeries {
    pub fn zero(trunc: usize) -> Self {
        USeries { coeffs: vec![RatFuncQ::zero(); trunc + 1] }
    }

    pub fn one(trunc: usize) -> Self {
        Self::constant(RatFuncQ::one(), trunc)
    }

    pub fn constant(c: RatFuncQ, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = c;
        s
    }

    /// `c u^k`; vanishes when `k > trunc`.
    pub fn monomial(c: RatFuncQ, k: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    /// From the first `trunc + 1` coefficients, padding with zeros.
    pub fn from_coeffs(mut coeffs: Vec<RatFuncQ>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, RatFuncQ::zero());
        USeries { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &RatFuncQ {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[RatFuncQ] {
        &self.coeffs
    }

    fn same_trunc(&self, other: &Self) -> Result<(), SeriesError> {
        if self.trunc() != other.trunc() {
            return Err(SeriesError::TruncMismatch(self.trunc(), other.trunc()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_trunc(other)?;
        Ok(USeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_trunc(other)?;
        Ok(USeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.mul_with(other, Strategy::Sequential)
    }

    /// Cauchy product; output coefficients are independent, so they may be
    /// computed in parallel.
    pub fn mul_with(&self, other: &Self, strategy: Strategy) -> Result<Self, SeriesError> {
        self.same_trunc(other)?;
        let idx: Vec<usize> = (0..=self.trunc()).collect();
        let coeffs = exec::map(strategy, &idx, |&n| {
            (0..=n)
                .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[n - i].is_zero())
                .map(|i| &self.coeffs[i] * &other.coeffs[n - i])
                .sum()
        });
        Ok(USeries { coeffs })
    }

    pub fn scale(&self, c: &RatFuncQ) -> Self {
        USeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn scale_rat(&self, c: &BigRat) -> Self {
        USeries { coeffs: self.coeffs.iter().map(|a| a.scale_by(c)).collect() }
    }

    /// Multiplicative inverse through the truncation order.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = a0.inverse().expect("nonzero");
        let mut out: Vec<RatFuncQ> = vec![inv0.clone()];
        for n in 1..=self.trunc() {
            let acc: RatFuncQ = (1..=n)
                .filter(|&i| !self.coeffs[i].is_zero())
                .map(|i| &self.coeffs[i] * &out[n - i])
                .sum();
            out.push(-(&acc * &inv0));
        }
        Ok(USeries { coeffs: out })
    }

    /// `self(s u)` for a scalar `s`, e.g. `s = -1`.
    pub fn subs_scaled(&self, s: &RatFuncQ) -> Self {
        let mut pw = RatFuncQ::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &pw);
            pw = &pw * s;
        }
        USeries { coeffs }
    }
}

impl fmt::Display for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "[{c}]u^{n}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(u^{})", self.trunc() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use atlas_exact::PolyQ;

    fn rf(s: &str) -> RatFuncQ {
        RatFuncQ::from_poly(&s.parse::<PolyQ>().unwrap())
    }

    fn poly_u(cs: &[&str], trunc: usize) -> USeries {
        USeries::from_coeffs(cs.iter().map(|s| rf(s)).collect(), trunc)
    }

    #[test]
    fn documented_products() {
        let a = poly_u(&["1", "1"], 2);
        let b = poly_u(&["1", "-1"], 2);
        assert_eq!(a.mul(&b).unwrap(), poly_u(&["1", "0", "-1"], 2));
        assert_eq!(a.mul(&USeries::one(2)).unwrap(), a);
        let c = poly_u(&["1", "1"], 1);
        assert_eq!(c.mul(&c).unwrap(), poly_u(&["1", "2"], 1));
    }

    #[test]
    fn documented_inverses() {
        let g = poly_u(&["1", "-1"], 3).inverse().unwrap();
        assert_eq!(g, poly_u(&["1", "1", "1", "1"], 3));
        assert_eq!(USeries::one(4).inverse().unwrap(), USeries::one(4));
        let h = poly_u(&["1", "0", "-q^2"], 4).inverse().unwrap();
        assert_eq!(h, poly_u(&["1", "0", "q^2", "0", "q^4"], 4));
    }

    #[test]
    fn errors() {
        assert_eq!(USeries::zero(2).inverse(), Err(SeriesError::ZeroConstantTerm));
        assert_eq!(USeries::one(2).add(&USeries::one(3)), Err(SeriesError::TruncMismatch(2, 3)));
    }

    #[test]
    fn substitution() {
        let a = poly_u(&["1", "q", "q^2"], 2);
        let neg = a.subs_scaled(&RatFuncQ::from_int(-1));
        assert_eq!(neg, poly_u(&["1", "-q", "q^2"], 2));
    }

    #[test]
    fn parallel_product_matches() {
        let a = poly_u(&["1", "q", "q^2 - 1", "3"], 3);
        let b = poly_u(&["2", "-q", "1", "q^5"], 3);
        assert_eq!(a.mul_with(&b, Strategy::Parallel).unwrap(), a.mul(&b).unwrap());
    }
}
