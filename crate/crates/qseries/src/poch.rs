//! Infinite q-Pochhammer products in `u`, expanded through Euler's identities.

use std::fmt;

use atlas_exact::{PolyQ, RatFuncQ};
use serde::Serialize;

use crate::series::USeries;
use crate::SeriesError;

/// Which of `(x; y)_inf` or `(-x; y)_inf` is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum XSign {
    /// `prod (1 - x y^{i-1})`
    PlusX,
    /// `prod (1 + x y^{i-1})`
    MinusX,
}

/// `prod_{i>=1} (1 -+ u^{x_upow} q^{x_qpow} y^{i-1})` with `y = q^{y_qpow}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PochSpec {
    pub x_upow: usize,
    pub x_qpow: i64,
    pub sign: XSign,
    pub y_qpow: i64,
}

impl PochSpec {
    /// Base `y = 1/q^2`.
    pub fn new(x_upow: usize, x_qpow: i64, sign: XSign) -> Result<Self, SeriesError> {
        Self::with_base(x_upow, x_qpow, sign, -2)
    }

    pub fn with_base(x_upow: usize, x_qpow: i64, sign: XSign, y_qpow: i64) -> Result<Self, SeriesError> {
        if x_upow == 0 {
            return Err(SeriesError::ConstantArgument);
        }
        if y_qpow >= 0 || y_qpow % 2 != 0 {
            return Err(SeriesError::BadBase(y_qpow));
        }
        Ok(PochSpec { x_upow, x_qpow, sign, y_qpow })
    }

    /// `+1` for `(-x; y)`, `-1` for `(x; y)`: the sign in front of `x` inside each factor.
    fn factor_sign(&self) -> i64 {
        match self.sign {
            XSign::PlusX => -1,
            XSign::MinusX => 1,
        }
    }

    /// The same product with its first factor removed.
    pub fn tail(&self) -> Self {
        PochSpec { x_qpow: self.x_qpow + self.y_qpow, ..*self }
    }

    /// The first factor `1 -+ u^a q^b` as a series.
    pub fn first_factor(&self, trunc: usize) -> USeries {
        let mut s = USeries::one(trunc);
        let c = RatFuncQ::q_pow(self.x_qpow).scale_by(&atlas_exact::rat::int(self.factor_sign()));
        s = s.add(&USeries::monomial(c, self.x_upow, trunc)).expect("same truncation");
        s
    }
}

impl fmt::Display for PochSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == XSign::PlusX { "" } else { "-" };
        write!(f, "({s}u^{} q^{}; q^{})_inf", self.x_upow, self.x_qpow, self.y_qpow)
    }
}

/// `prod_{j=1}^n (q^{2cj} - 1)` for `n = 0..=len`, as polynomials.
fn pochhammer_dens(c: usize, len: usize) -> Vec<PolyQ> {
    let mut out = vec![PolyQ::one()];
    for j in 1..=len {
        let f = &PolyQ::q_pow(2 * c * j) - &PolyQ::one();
        let next = &out[j - 1] * &f;
        out.push(next);
    }
    out
}

/// Euler expansion of the whole product.
///
/// With `y = q^{-2c}`, the coefficient of `u^{an}` is
/// `s^n q^{bn + 2cn} / prod_{j<=n} (q^{2cj} - 1)`, `s` the factor sign.
pub fn poch_expand(spec: &PochSpec, trunc: usize) -> USeries {
    let c = (-spec.y_qpow / 2) as usize;
    let terms = trunc / spec.x_upow;
    let dens = pochhammer_dens(c, terms);
    let s = spec.factor_sign();
    let mut coeffs = vec![RatFuncQ::zero(); trunc + 1];
    for (n, den) in dens.iter().enumerate() {
        let e = (spec.x_qpow + 2 * c as i64) * n as i64;
        let sign = if s < 0 && n % 2 == 1 { -1 } else { 1 };
        let num = RatFuncQ::q_pow(e).scale_by(&atlas_exact::rat::int(sign));
        let den = RatFuncQ::from_poly(den);
        coeffs[n * spec.x_upow] = num.checked_div(&den).expect("nonzero denominator");
    }
    USeries::from_coeffs(coeffs, trunc)
}

/// Same product, with every factor carrying a nonnegative power of `q`
/// multiplied in explicitly and only the decaying tail Euler-expanded.
pub fn poch_product(spec: &PochSpec, trunc: usize) -> USeries {
    let mut head = USeries::one(trunc);
    let mut rest = *spec;
    while rest.x_qpow >= 0 {
        head = head.mul(&rest.first_factor(trunc)).expect("same truncation");
        rest = rest.tail();
    }
    head.mul(&poch_expand(&rest, trunc)).expect("same truncation")
}

/// `(A; y)_n / (y; y)_n` with `A = q^{a_qpow}` (`None` for `A = 0`) and `y = 1/q^2`.
fn qbinom_coeff(a_qpow: Option<i64>, n: usize) -> RatFuncQ {
    let y = RatFuncQ::q_pow(-2);
    let mut num = RatFuncQ::one();
    let mut den = RatFuncQ::one();
    let mut a_yk = a_qpow.map_or_else(RatFuncQ::zero, RatFuncQ::q_pow);
    let mut y_k = y.clone();
    for _ in 0..n {
        num = &num * &(&RatFuncQ::one() - &a_yk);
        den = &den * &(&RatFuncQ::one() - &y_k);
        a_yk = &a_yk * &y;
        y_k = &y_k * &y;
    }
    if num.is_zero() {
        return num;
    }
    num.checked_div(&den).expect("nonzero denominator")
}

/// Which form of the q-binomial theorem to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QBinomCase {
    /// `sum (A;y)_n/(y;y)_n x^n = (Ax;y)_inf / (x;y)_inf` with `A = q^{a_qpow}`.
    General { a_qpow: i64 },
    /// `sum y^{n(n-1)/2} x^n/(y;y)_n = prod (1 + x y^{i-1})`.
    Euler,
    /// `sum y^{n(n-1)/2} x^n/(y;y)_n = 1/(-x;y)_inf`, which does not hold.
    EulerReciprocal,
}

/// Check a q-binomial identity through `u^trunc` for `x = u^a q^b`, `y = 1/q^2`.
pub fn qbinom_check(case: QBinomCase, x_upow: usize, x_qpow: i64, trunc: usize) -> Result<bool, SeriesError> {
    let x = PochSpec::new(x_upow, x_qpow, XSign::PlusX)?;
    let mut lhs = vec![RatFuncQ::zero(); trunc + 1];
    for n in 0..=trunc / x_upow {
        let xn = RatFuncQ::q_pow(x_qpow * n as i64);
        let c = match case {
            QBinomCase::General { a_qpow } => qbinom_coeff(Some(a_qpow), n),
            QBinomCase::Euler | QBinomCase::EulerReciprocal => {
                let yy = RatFuncQ::q_pow(-((n * n.saturating_sub(1)) as i64));
                &yy * &qbinom_coeff(None, n)
            }
        };
        lhs[n * x_upow] = &c * &xn;
    }
    let lhs = USeries::from_coeffs(lhs, trunc);
    let rhs = match case {
        QBinomCase::General { a_qpow } => {
            let ax = PochSpec::new(x_upow, x_qpow + a_qpow, XSign::PlusX)?;
            poch_product(&ax, trunc).mul(&poch_product(&x, trunc).inverse()?)?
        }
        QBinomCase::Euler => poch_product(&PochSpec { sign: XSign::MinusX, ..x }, trunc),
        QBinomCase::EulerReciprocal => poch_product(&PochSpec { sign: XSign::MinusX, ..x }, trunc).inverse()?,
    };
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_term_is_one() {
        for b in -3..=3 {
            for sign in [XSign::PlusX, XSign::MinusX] {
                let s = PochSpec::new(2, b, sign).unwrap();
                assert!(poch_expand(&s, 5).coeff(0).to_rat().is_some_and(|r| r == atlas_exact::rat::int(1)));
                assert!(poch_expand(&s, 5).coeff(1).is_zero());
            }
        }
    }

    #[test]
    fn peeling_a_factor() {
        let s = PochSpec::new(1, 1, XSign::MinusX).unwrap();
        let whole = poch_expand(&s, 4);
        let peeled = s.first_factor(4).mul(&poch_expand(&s.tail(), 4)).unwrap();
        assert_eq!(whole, peeled);
    }
}
