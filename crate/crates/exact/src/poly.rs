use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::BigRat;
use crate::zpoly::{self, ZPoly};
use crate::ExactError;

/// Polynomial in `q` with rational coefficients.
///
/// Stored as integer numerators over one positive common denominator in
/// lowest terms, so derived equality is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyQ {
    num: ZPoly,
    den: BigInt,
}

impl PolyQ {
    pub(crate) fn from_parts(mut num: ZPoly, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        zpoly::trim(&mut num);
        if num.is_empty() {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            num = zpoly::neg(&num);
        }
        let g = zpoly::content(&num).gcd(&den);
        if !g.is_one() {
            num = num.iter().map(|c| c / &g).collect();
            den /= &g;
        }
        PolyQ { num, den }
    }

    pub(crate) fn int_parts(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    pub fn zero() -> Self {
        PolyQ { num: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_parts(vec![BigInt::from(c)], BigInt::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: BigRat, k: usize) -> Self {
        let mut num = vec![BigInt::zero(); k + 1];
        num[k] = c.numer().clone();
        Self::from_parts(num, c.denom().clone())
    }

    pub fn q_pow(k: usize) -> Self {
        Self::monomial(BigRat::one(), k)
    }

    /// Ascending integer coefficients.
    pub fn from_int_coeffs<I: Into<BigInt>>(cs: impl IntoIterator<Item = I>) -> Self {
        Self::from_parts(cs.into_iter().map(Into::into).collect(), BigInt::one())
    }

    /// Ascending rational coefficients.
    pub fn from_coeffs(cs: &[BigRat]) -> Self {
        let den = cs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let num = cs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::from_parts(num, den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num.len() == 1 && self.num[0].is_one() && self.den.is_one()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        zpoly::degree(&self.num)
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        match self.num.get(i) {
            Some(c) => BigRat::new(c.clone(), self.den.clone()),
            None => BigRat::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<BigRat> {
        (0..self.num.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading_coeff(&self) -> BigRat {
        self.degree().map_or_else(BigRat::zero, |d| self.coeff(d))
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.den.is_one()
    }

    /// Integer coefficients, if all are integers.
    pub fn to_int_coeffs(&self) -> Option<Vec<BigInt>> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn is_monic(&self) -> bool {
        self.num.last().is_some_and(|c| *c == self.den)
    }

    /// Divide by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.num.last() {
            None => Self::zero(),
            Some(l) => Self::from_parts(self.num.clone(), l.clone()),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::from_parts(zpoly::scale(&self.num, c.numer()), &self.den * c.denom())
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.num.iter().rev() {
            acc = acc * x + BigRat::from_integer(c.clone());
        }
        acc / BigRat::from_integer(self.den.clone())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigRat {
        let mut acc = BigInt::zero();
        for c in self.num.iter().rev() {
            acc = acc * x + c;
        }
        BigRat::new(acc, self.den.clone())
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &PolyQ) -> Result<(PolyQ, PolyQ), ExactError> {
        let dd = d.degree().ok_or(ExactError::DivisionByZero)?;
        let lead = d.leading_coeff();
        let mut r = self.coeffs();
        let mut quot = vec![BigRat::zero(); r.len().saturating_sub(dd)];
        let dc = d.coeffs();
        for i in (0..quot.len()).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let c = top / &lead;
            for (j, y) in dc.iter().enumerate() {
                r[i + j] -= &c * y;
            }
            quot[i] = c;
        }
        Ok((PolyQ::from_coeffs(&quot), PolyQ::from_coeffs(&r)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &PolyQ) -> Result<PolyQ, ExactError> {
        if self.is_zero() && other.is_zero() {
            return Err(ExactError::BothZero);
        }
        let g = zpoly::gcd(&self.num, &other.num);
        Ok(PolyQ::from_parts(g, BigInt::one()).monic())
    }

    pub fn pow(&self, e: u32) -> PolyQ {
        let mut acc = PolyQ::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for PolyQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        if self.den == rhs.den {
            return PolyQ::from_parts(zpoly::add(&self.num, &rhs.num), self.den.clone());
        }
        let a = zpoly::scale(&self.num, &rhs.den);
        let b = zpoly::scale(&rhs.num, &self.den);
        PolyQ::from_parts(zpoly::add(&a, &b), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        PolyQ::from_parts(zpoly::mul(&self.num, &rhs.num), &self.den * &rhs.den)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ { num: zpoly::neg(&self.num), den: self.den.clone() }
    }
}

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t { (&self).$m(rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(PolyQ, Add add, Sub sub, Mul mul);

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::render_poly(self))
    }
}

impl FromStr for PolyQ {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::render::parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn p(s: &str) -> PolyQ {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("q + 1") * p("q - 1"), p("q^2 - 1"));
        assert_eq!(p("q^3 - 2") + PolyQ::zero(), p("q^3 - 2"));
        assert!((p("q^2 - 1") - p("q^2 - 1")).is_zero());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("q^2 - 1").gcd(&p("q - 1")).unwrap(), p("q - 1"));
        assert_eq!(p("q^3").gcd(&p("q^2")).unwrap(), p("q^2"));
        assert_eq!(p("q^2 + 1").gcd(&p("q")).unwrap(), PolyQ::one());
        assert_eq!(PolyQ::zero().gcd(&PolyQ::zero()), Err(ExactError::BothZero));
        assert_eq!(PolyQ::zero().gcd(&p("2q - 4")).unwrap(), p("q - 2"));
    }

    #[test]
    fn rational_coefficients() {
        let a = PolyQ::from_coeffs(&[frac(1, 2), frac(-1, 3)]);
        assert_eq!(a.coeff(0), frac(1, 2));
        assert_eq!(a.coeff(1), frac(-1, 3));
        assert_eq!(a.coeff(7), int(0));
        assert_eq!(a.leading_coeff(), frac(-1, 3));
        assert!(a.monic().is_monic());
        assert_eq!(a.scale(&int(6)), p("-2q + 3"));
        assert_eq!(a.eval(&int(3)), frac(-1, 2));
    }

    #[test]
    fn division_with_remainder() {
        let (quo, rem) = p("q^3 + 2q + 5").div_rem(&p("2q^2 + 1")).unwrap();
        assert_eq!(quo, PolyQ::from_coeffs(&[int(0), frac(1, 2)]));
        assert_eq!(rem, PolyQ::from_coeffs(&[int(5), frac(3, 2)]));
        assert!(p("q").div_rem(&PolyQ::zero()).is_err());
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(PolyQ::zero().degree(), None);
        assert_eq!(PolyQ::one().degree(), Some(0));
        assert_eq!(p("q^9 - q^6").degree(), Some(9));
    }
}
