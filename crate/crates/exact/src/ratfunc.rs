use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::forward_owned;
use crate::rat::BigRat;
use crate::zpoly::{self, ZPoly};
use crate::{ExactError, PolyQ};

/// Reduced rational function in `q`.
///
/// Kept as `scale * top / bottom` with `top`, `bottom` primitive integer
/// polynomials, positive leading coefficients and no common factor. That
/// form is unique, so equality is structural. [`RatFuncQ::num`] and
/// [`RatFuncQ::den`] give the monic-denominator view.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFuncQ {
    scale: BigRat,
    top: ZPoly,
    bottom: ZPoly,
}

fn one_poly() -> ZPoly {
    vec![BigInt::one()]
}

impl RatFuncQ {
    pub fn zero() -> Self {
        RatFuncQ { scale: BigRat::zero(), top: one_poly(), bottom: one_poly() }
    }

    pub fn one() -> Self {
        Self::from_rat(BigRat::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rat(BigRat::from_integer(c.into()))
    }

    pub fn from_rat(c: BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFuncQ { scale: c, top: one_poly(), bottom: one_poly() }
    }

    pub fn from_poly(p: &PolyQ) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let (num, den) = p.int_parts();
        let (c, prim) = zpoly::primitive(num);
        RatFuncQ { scale: BigRat::new(c, den.clone()), top: prim, bottom: one_poly() }
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        let mono = |k: usize| {
            let mut v = vec![BigInt::zero(); k + 1];
            v[k] = BigInt::one();
            v
        };
        let (top, bottom) = if e >= 0 {
            (mono(e as usize), one_poly())
        } else {
            (one_poly(), mono(e.unsigned_abs() as usize))
        };
        RatFuncQ { scale: BigRat::one(), top, bottom }
    }

    /// `num / den`, reduced.
    pub fn new(num: &PolyQ, den: &PolyQ) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(&Self::from_poly(num) / &Self::from_poly(den))
    }

    /// Build from integer polynomials `c * n / d`, reducing.
    fn from_int_fraction(c: BigRat, n: &[BigInt], d: &[BigInt]) -> Self {
        assert!(!d.is_empty());
        if c.is_zero() || n.is_empty() {
            return Self::zero();
        }
        let (cn, pn) = zpoly::primitive(n);
        let (cd, pd) = zpoly::primitive(d);
        let g = zpoly::gcd(&pn, &pd);
        let (top, bottom) = if g.len() == 1 {
            (pn, pd)
        } else {
            (zpoly::exact_div(&pn, &g).unwrap(), zpoly::exact_div(&pd, &g).unwrap())
        };
        RatFuncQ { scale: c * BigRat::new(cn, cd), top, bottom }
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.bottom.len() == 1
    }

    /// Numerator over the monic denominator.
    pub fn num(&self) -> PolyQ {
        let lead = self.bottom.last().unwrap();
        PolyQ::from_parts(self.top.clone(), BigInt::one())
            .scale(&(&self.scale / BigRat::from_integer(lead.clone())))
    }

    /// Monic denominator.
    pub fn den(&self) -> PolyQ {
        PolyQ::from_parts(self.bottom.clone(), BigInt::one()).monic()
    }

    pub fn to_poly(&self) -> Option<PolyQ> {
        self.is_polynomial().then(|| self.num())
    }

    pub fn to_rat(&self) -> Option<BigRat> {
        (self.is_polynomial() && self.top.len() == 1).then(|| self.scale.clone())
    }

    pub fn eval(&self, x: &BigRat) -> Result<BigRat, ExactError> {
        let ev = |p: &ZPoly| PolyQ::from_parts(p.clone(), BigInt::one()).eval(x);
        let d = ev(&self.bottom);
        if d.is_zero() {
            return Err(ExactError::Pole(crate::rat::render(x)));
        }
        Ok(&self.scale * ev(&self.top) / d)
    }

    pub fn eval_int(&self, x: &BigInt) -> Result<BigRat, ExactError> {
        self.eval(&BigRat::from_integer(x.clone()))
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatFuncQ {
            scale: self.scale.recip(),
            top: self.bottom.clone(),
            bottom: self.top.clone(),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale_by(&self, c: &BigRat) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        RatFuncQ { scale: &self.scale * c, ..self.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Degree of the numerator minus degree of the denominator.
    pub fn degree_gap(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.top.len() as i64 - self.bottom.len() as i64)
    }

    pub(crate) fn int_view(&self) -> (&BigRat, &[BigInt], &[BigInt]) {
        (&self.scale, &self.top, &self.bottom)
    }
}

impl Default for RatFuncQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<PolyQ> for RatFuncQ {
    fn from(p: PolyQ) -> Self {
        Self::from_poly(&p)
    }
}

impl<'a> Mul<&'a RatFuncQ> for &'a RatFuncQ {
    type Output = RatFuncQ;
    fn mul(self, rhs: &RatFuncQ) -> RatFuncQ {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncQ::zero();
        }
        let g1 = zpoly::gcd(&self.top, &rhs.bottom);
        let g2 = zpoly::gcd(&rhs.top, &self.bottom);
        let cut = |p: &ZPoly, g: &ZPoly| {
            if g.len() == 1 {
                p.clone()
            } else {
                zpoly::exact_div(p, g).unwrap()
            }
        };
        let top = zpoly::mul(&cut(&self.top, &g1), &cut(&rhs.top, &g2));
        let bottom = zpoly::mul(&cut(&self.bottom, &g2), &cut(&rhs.bottom, &g1));
        RatFuncQ { scale: &self.scale * &rhs.scale, top, bottom }
    }
}

impl<'a> Add<&'a RatFuncQ> for &'a RatFuncQ {
    type Output = RatFuncQ;
    fn add(self, rhs: &RatFuncQ) -> RatFuncQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let l = self.scale.denom().lcm(rhs.scale.denom());
        let ca = self.scale.numer() * (&l / self.scale.denom());
        let cb = rhs.scale.numer() * (&l / rhs.scale.denom());
        if self.bottom == rhs.bottom {
            let n = zpoly::add(&zpoly::scale(&self.top, &ca), &zpoly::scale(&rhs.top, &cb));
            return RatFuncQ::from_int_fraction(BigRat::new(BigInt::one(), l), &n, &self.bottom);
        }
        let g = zpoly::gcd(&self.bottom, &rhs.bottom);
        let b_over = zpoly::exact_div(&rhs.bottom, &g).unwrap();
        let a_over = zpoly::exact_div(&self.bottom, &g).unwrap();
        let n = zpoly::add(
            &zpoly::scale(&zpoly::mul(&self.top, &b_over), &ca),
            &zpoly::scale(&zpoly::mul(&rhs.top, &a_over), &cb),
        );
        if n.is_empty() {
            return RatFuncQ::zero();
        }
        let (cn, pn) = zpoly::primitive(&n);
        let h = zpoly::gcd(&pn, &g);
        let (top, bottom) = if h.len() == 1 {
            (pn, zpoly::mul(&self.bottom, &b_over))
        } else {
            let a_cut = zpoly::exact_div(&self.bottom, &h).unwrap();
            (zpoly::exact_div(&pn, &h).unwrap(), zpoly::mul(&a_cut, &b_over))
        };
        debug_assert!(zpoly::is_positive_lead(&bottom) && zpoly::is_positive_lead(&top));
        RatFuncQ { scale: BigRat::new(cn, l), top, bottom }
    }
}

impl Neg for &RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        RatFuncQ { scale: -&self.scale, ..self.clone() }
    }
}

impl Neg for RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        -&self
    }
}

impl<'a> Sub<&'a RatFuncQ> for &'a RatFuncQ {
    type Output = RatFuncQ;
    fn sub(self, rhs: &RatFuncQ) -> RatFuncQ {
        self + &(-rhs)
    }
}

/// Panics on division by zero; use [`RatFuncQ::checked_div`] to get an error.
impl<'a> Div<&'a RatFuncQ> for &'a RatFuncQ {
    type Output = RatFuncQ;
    fn div(self, rhs: &RatFuncQ) -> RatFuncQ {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

forward_owned!(RatFuncQ, Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({})/({})", self.num(), self.den())
        }
    }
}

impl std::iter::Sum for RatFuncQ {
    fn sum<I: Iterator<Item = RatFuncQ>>(iter: I) -> Self {
        iter.fold(RatFuncQ::zero(), |a, b| &a + &b)
    }
}

// Sign sanity for the canonical form; used by tests.
#[cfg(test)]
impl RatFuncQ {
    fn well_formed(&self) -> bool {
        use num_traits::Signed;
        let coprime = zpoly::gcd(&self.top, &self.bottom).len() == 1;
        let prim = |p: &ZPoly| zpoly::content(p).is_one() && p.last().unwrap().is_positive();
        if self.is_zero() {
            return self.top == one_poly() && self.bottom == one_poly();
        }
        coprime && prim(&self.top) && prim(&self.bottom) && self.den().is_monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn p(s: &str) -> PolyQ {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RatFuncQ {
        RatFuncQ::new(&p(n), &p(d)).unwrap()
    }

    #[test]
    fn sum_of_unit_fractions() {
        let s = rf("1", "q - 1") + rf("1", "q + 1");
        assert_eq!(s, rf("2q", "q^2 - 1"));
        assert_eq!(s.num(), p("2q"));
        assert_eq!(s.den(), p("q^2 - 1"));
        assert!(s.well_formed());
    }

    #[test]
    fn division_and_cancellation() {
        let a = rf("q^2 + 3", "2q - 5");
        assert_eq!(&a / &a, RatFuncQ::one());
        let prod = rf("q^2", "q^2 - 1") * rf("q^2 - 1", "q");
        assert_eq!(prod, RatFuncQ::from_poly(&p("q")));
        assert!(prod.is_polynomial());
        assert_eq!(a.checked_div(&RatFuncQ::zero()), Err(ExactError::DivisionByZero));
        assert!(RatFuncQ::new(&p("q"), &PolyQ::zero()).is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(rf("q^2", "q^2 - 1").eval(&int(3)).unwrap(), frac(9, 8));
        assert_eq!(RatFuncQ::zero().eval(&int(7)).unwrap(), int(0));
        assert_eq!(rf("q - 1", "q - 1"), RatFuncQ::one());
        assert_eq!(rf("q - 1", "q - 1").eval(&int(2)).unwrap(), int(1));
        assert!(rf("1", "q - 2").eval(&int(2)).is_err());
    }

    #[test]
    fn monic_denominator_with_rational_scale() {
        let f = rf("3", "2q + 4");
        assert_eq!(f.den(), p("q + 2"));
        assert_eq!(f.num(), PolyQ::constant(frac(3, 2)));
        assert!(f.well_formed());
        assert_eq!(f.to_string(), "(3/2)/(q + 2)");
    }

    #[test]
    fn negative_powers() {
        let f = RatFuncQ::q_pow(-3) * RatFuncQ::q_pow(5);
        assert_eq!(f, RatFuncQ::from_poly(&p("q^2")));
        let g = RatFuncQ::q_pow(-2) + RatFuncQ::one();
        assert_eq!(g, rf("q^2 + 1", "q^2"));
    }

    #[test]
    fn cancelling_sum_is_zero() {
        let a = rf("q", "q^2 - 4");
        let z = &a - &a;
        assert!(z.is_zero());
        assert!(z.well_formed());
        let s = rf("1", "q - 2") - rf("1", "q + 2");
        assert_eq!(s, rf("4", "q^2 - 4"));
        // partial cancellation against the shared factor
        let t = rf("q + 1", "q - 1") + rf("-2", "q^2 - 1");
        assert_eq!(t, rf("q^2 + 2q - 1", "q^2 - 1"));
    }
}
