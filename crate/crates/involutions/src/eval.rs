//! Evaluating a [`Formula`] numerically (at a concrete `q`) or symbolically.

use atlas_exact::exec::{self, Strategy};
use atlas_exact::{BigInt, BigRat, RatFuncQ};
use atlas_orders::{orthogonal, symplectic, CharParity, Sign};
use num_traits::{One, Zero};

use crate::formula::{Factor, Formula, Term};

pub(crate) trait Values: Sync {
    type V: Clone + Send + Sync;
    fn factor(&self, f: &Factor) -> Option<Self::V>;
    fn int(&self, c: i64) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn div(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
}

fn term_value<C: Values>(ctx: &C, ambient: &C::V, t: &Term) -> Option<C::V> {
    let mut den = ctx.int(1);
    for f in &t.den {
        den = ctx.mul(&den, &ctx.factor(f)?);
    }
    let top = ctx.mul(ambient, &ctx.int(t.mult));
    Some(ctx.div(&top, &den))
}

/// Sum of the formula's terms; terms touching `O^-(0)` contribute nothing.
pub(crate) fn sum<C: Values>(ctx: &C, f: &Formula, strategy: Strategy) -> C::V {
    let ambient = ctx.factor(&f.ambient).expect("ambient group is always defined");
    exec::map(strategy, &f.terms, |t| term_value(ctx, &ambient, t))
        .into_iter()
        .flatten()
        .fold(ctx.int(0), |acc, v| ctx.add(&acc, &v))
}

/// Orders at a fixed `q`, tabulated up to a dimension.
pub(crate) struct Numeric {
    q: BigInt,
    /// `|O^+(2m)|`, `|O^-(2m)|` (None at m = 0), `|O(2m+1)|`, `|Sp(2m)|`.
    plus: Vec<BigInt>,
    minus: Vec<Option<BigInt>>,
    odd: Vec<BigInt>,
    symp: Vec<BigInt>,
}

impl Numeric {
    pub(crate) fn new(q: u64, parity: CharParity, max_dim: usize) -> Self {
        let q = BigInt::from(q);
        let m_max = max_dim / 2 + 1;
        let mut symp = vec![BigInt::one()];
        // running prod_{i<m} (q^{2i} - 1)
        let mut partial = vec![BigInt::one()];
        for m in 1..=m_max {
            let q2m = num_traits::pow(q.clone(), 2 * m);
            let qlift = num_traits::pow(q.clone(), 2 * m - 1);
            symp.push(&symp[m - 1] * qlift * (&q2m - 1u32));
            partial.push(&partial[m - 1] * (q2m - 1u32));
        }
        let mut plus = vec![BigInt::one()];
        let mut minus = vec![None];
        for m in 1..=m_max {
            let lead = BigInt::from(2) * num_traits::pow(q.clone(), m * (m - 1)) * &partial[m - 1];
            let qm = num_traits::pow(q.clone(), m);
            plus.push(&lead * (&qm - 1u32));
            minus.push(Some(lead * (qm + 1u32)));
        }
        let odd = symp
            .iter()
            .map(|s| if parity == CharParity::Odd { s * 2u32 } else { s.clone() })
            .collect();
        Numeric { q, plus, minus, odd, symp }
    }
}

impl Values for Numeric {
    type V = BigRat;

    fn factor(&self, f: &Factor) -> Option<BigRat> {
        let v = match *f {
            Factor::Orth(k, _) if k % 2 == 1 => self.odd[k / 2].clone(),
            Factor::Orth(k, Sign::Plus) => self.plus[k / 2].clone(),
            Factor::Orth(k, Sign::Minus) => self.minus[k / 2].clone()?,
            Factor::Symp(k) => self.symp[k / 2].clone(),
            Factor::Int(c) => BigInt::from(c),
            Factor::QPow(e) if e < 0 => return Some(BigRat::new(BigInt::one(), num_traits::pow(self.q.clone(), (-e) as usize))),
            Factor::QPow(e) => num_traits::pow(self.q.clone(), e as usize),
        };
        Some(BigRat::from_integer(v))
    }

    fn int(&self, c: i64) -> BigRat {
        BigRat::from_integer(c.into())
    }

    fn mul(&self, a: &BigRat, b: &BigRat) -> BigRat {
        a * b
    }

    fn div(&self, a: &BigRat, b: &BigRat) -> BigRat {
        assert!(!b.is_zero(), "centralizer order vanished");
        a / b
    }

    fn add(&self, a: &BigRat, b: &BigRat) -> BigRat {
        a + b
    }
}

/// Orders as rational functions of a formal `q`.
pub(crate) struct Symbolic {
    pub(crate) parity: CharParity,
}

impl Values for Symbolic {
    type V = RatFuncQ;

    fn factor(&self, f: &Factor) -> Option<RatFuncQ> {
        Some(match *f {
            Factor::Orth(k, s) => RatFuncQ::from_poly(&orthogonal(k, s, self.parity)?),
            Factor::Symp(k) => RatFuncQ::from_poly(&symplectic(k / 2)),
            Factor::Int(c) => RatFuncQ::from_int(c),
            Factor::QPow(e) => RatFuncQ::q_pow(e),
        })
    }

    fn int(&self, c: i64) -> RatFuncQ {
        RatFuncQ::from_int(c)
    }

    fn mul(&self, a: &RatFuncQ, b: &RatFuncQ) -> RatFuncQ {
        a * b
    }

    fn div(&self, a: &RatFuncQ, b: &RatFuncQ) -> RatFuncQ {
        a.checked_div(b).expect("centralizer order is a nonzero polynomial")
    }

    fn add(&self, a: &RatFuncQ, b: &RatFuncQ) -> RatFuncQ {
        a + b
    }
}
