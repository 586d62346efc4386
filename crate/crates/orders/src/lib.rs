//! Group specifications and exact orders of finite orthogonal, special
//! orthogonal, Omega and symplectic groups.
//!
//! Orders are polynomials in a formal `q` ([`order_poly`]) or integers for a
//! concrete prime power ([`order_int`]).

mod spec;

pub use spec::{CharParity, Family, GroupSpec, SpecError, Sign, WittType};

use atlas_exact::{BigInt, PolyQ};
use num_traits::Zero;

/// A prime power `q = p^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct PrimePower(u64);

impl PrimePower {
    pub fn new(q: u64) -> Result<Self, SpecError> {
        match prime_power_parts(q) {
            Some(_) => Ok(PrimePower(q)),
            None => Err(SpecError::NotPrimePower(q)),
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn prime(self) -> u64 {
        prime_power_parts(self.0).unwrap().0
    }

    pub fn exponent(self) -> u32 {
        prime_power_parts(self.0).unwrap().1
    }

    pub fn parity(self) -> CharParity {
        if self.0 % 2 == 0 {
            CharParity::Even
        } else {
            CharParity::Odd
        }
    }

    pub fn as_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }
}

impl std::fmt::Display for PrimePower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `(p, k)` with `q = p^k`, by trial division.
pub fn prime_power_parts(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if q % p != 0 || p.saturating_mul(p) > q {
        p = q;
    }
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// `prod_{i=1}^{n} (q^{2i} - 1)`.
fn even_power_product(n: usize) -> PolyQ {
    (1..=n).fold(PolyQ::one(), |acc, i| &acc * &(PolyQ::q_pow(2 * i) - PolyQ::one()))
}

/// `|O^±(2n, q)|`; `None` for the undefined `O^-(0, q)`.
pub fn orthogonal_even(n: usize, sign: Sign) -> Option<PolyQ> {
    if n == 0 {
        return match sign {
            Sign::Plus => Some(PolyQ::one()),
            Sign::Minus => None,
        };
    }
    let twist = match sign {
        Sign::Plus => PolyQ::q_pow(n) - PolyQ::one(),
        Sign::Minus => PolyQ::q_pow(n) + PolyQ::one(),
    };
    let lead = PolyQ::monomial(atlas_exact::rat::int(2), n * (n - 1));
    Some(&(&lead * &twist) * &even_power_product(n - 1))
}

/// `|Sp(2n, q)|`.
pub fn symplectic(n: usize) -> PolyQ {
    &PolyQ::q_pow(n * n) * &even_power_product(n)
}

/// `|O(2n+1, q)|`: twice `|Sp(2n, q)|` for odd `q`, equal to it for even `q`.
pub fn orthogonal_odd(n: usize, parity: CharParity) -> PolyQ {
    match parity {
        CharParity::Odd => symplectic(n).scale(&atlas_exact::rat::int(2)),
        CharParity::Even => symplectic(n),
    }
}

/// `|O^±(k, q)|` for any `k`; odd `k` ignores the sign.
pub fn orthogonal(k: usize, sign: Sign, parity: CharParity) -> Option<PolyQ> {
    if k % 2 == 0 {
        orthogonal_even(k / 2, sign)
    } else {
        Some(orthogonal_odd(k / 2, parity))
    }
}

/// Order of the group (or cardinality of the coset) as a polynomial in `q`.
pub fn order_poly(spec: &GroupSpec) -> Result<PolyQ, SpecError> {
    let n = spec.dim() / 2;
    let parity = spec.parity();
    let half = |p: PolyQ| p.scale(&atlas_exact::rat::frac(1, 2));
    let full = |sign: Sign| orthogonal_even(n, sign).ok_or(SpecError::MinusZero);
    Ok(match spec.family() {
        Family::OPlus => full(Sign::Plus)?,
        Family::OMinus => full(Sign::Minus)?,
        Family::OOdd => orthogonal_odd(n, parity),
        Family::Sp => symplectic(n),
        Family::SoPlus | Family::SoMinus | Family::OmegaPlus | Family::OmegaMinus if n == 0 => PolyQ::one(),
        Family::SoOdd | Family::OmegaOdd if n == 0 => PolyQ::one(),
        Family::SoPlus => half(full(Sign::Plus)?),
        Family::SoMinus => half(full(Sign::Minus)?),
        Family::SoOdd => half(orthogonal_odd(n, parity)),
        Family::OmegaPlus | Family::OmegaMinus => {
            let sign = spec.family().sign().unwrap();
            match parity {
                CharParity::Odd => full(sign)?.scale(&atlas_exact::rat::frac(1, 4)),
                CharParity::Even => half(full(sign)?),
            }
        }
        Family::OmegaOdd => orthogonal_odd(n, parity).scale(&atlas_exact::rat::frac(1, 4)),
        Family::CosetSo(sign) | Family::CosetOmega(sign) => {
            if n == 0 {
                PolyQ::zero()
            } else {
                half(full(sign)?)
            }
        }
    })
}

/// Order evaluated at a concrete prime power of matching parity.
pub fn order_int(spec: &GroupSpec, q: PrimePower) -> Result<BigInt, SpecError> {
    spec.check_q(q)?;
    let v = order_poly(spec)?.eval_int(&q.as_bigint());
    debug_assert!(v.is_integer());
    let v = v.to_integer();
    debug_assert!(!v.is_zero() || spec.family().is_coset());
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family, dim: usize, parity: CharParity) -> GroupSpec {
        GroupSpec::new(f, dim, parity).unwrap()
    }

    fn pp(q: u64) -> PrimePower {
        PrimePower::new(q).unwrap()
    }

    #[test]
    fn documented_examples() {
        let o4 = spec(Family::OPlus, 4, CharParity::Odd);
        assert_eq!(order_poly(&o4).unwrap().to_string(), "2q^6 - 4q^4 + 2q^2");
        assert_eq!(order_int(&o4, pp(3)).unwrap(), BigInt::from(1152));
        let sp4 = spec(Family::Sp, 4, CharParity::Even);
        assert_eq!(order_poly(&sp4).unwrap().to_string(), "q^10 - q^8 - q^6 + q^4");
        assert_eq!(order_int(&sp4, pp(2)).unwrap(), BigInt::from(720));
        let o0 = spec(Family::OPlus, 0, CharParity::Even);
        assert_eq!(order_poly(&o0).unwrap(), PolyQ::one());
        let so2 = spec(Family::SoMinus, 2, CharParity::Odd);
        assert_eq!(order_int(&so2, pp(3)).unwrap(), BigInt::from(4));
    }

    #[test]
    fn degenerate_conventions() {
        assert_eq!(order_int(&spec(Family::OOdd, 1, CharParity::Odd), pp(5)).unwrap(), BigInt::from(2));
        assert_eq!(order_int(&spec(Family::OOdd, 1, CharParity::Even), pp(4)).unwrap(), BigInt::from(1));
        assert_eq!(order_int(&spec(Family::Sp, 0, CharParity::Even), pp(2)).unwrap(), BigInt::from(1));
        assert_eq!(order_int(&spec(Family::SoOdd, 1, CharParity::Odd), pp(3)).unwrap(), BigInt::from(1));
        assert_eq!(order_int(&spec(Family::OmegaOdd, 1, CharParity::Odd), pp(3)).unwrap(), BigInt::from(1));
        assert_eq!(GroupSpec::new(Family::OMinus, 0, CharParity::Odd), Err(SpecError::MinusZero));
        assert!(orthogonal_even(0, Sign::Minus).is_none());
    }

    #[test]
    fn small_known_orders() {
        // O^-(4,2) = S5 and Omega^-(4,2) = A5
        assert_eq!(order_int(&spec(Family::OMinus, 4, CharParity::Even), pp(2)).unwrap(), BigInt::from(120));
        assert_eq!(order_int(&spec(Family::OmegaMinus, 4, CharParity::Even), pp(2)).unwrap(), BigInt::from(60));
        // O(3,3) = 2 x S4, Omega(3,3) = A4
        assert_eq!(order_int(&spec(Family::OOdd, 3, CharParity::Odd), pp(3)).unwrap(), BigInt::from(48));
        assert_eq!(order_int(&spec(Family::OmegaOdd, 3, CharParity::Odd), pp(3)).unwrap(), BigInt::from(12));
        assert_eq!(order_int(&spec(Family::OOdd, 5, CharParity::Odd), pp(3)).unwrap(), BigInt::from(103680));
    }

    #[test]
    fn prime_powers() {
        let good: Vec<u64> = (0..=32).filter(|q| prime_power_parts(*q).is_some()).collect();
        assert_eq!(good, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]);
        assert_eq!(prime_power_parts(81), Some((3, 4)));
        assert_eq!(prime_power_parts(2147483647), Some((2147483647, 1)));
        assert!(PrimePower::new(6).is_err());
        assert_eq!(pp(9).prime(), 3);
        assert_eq!(pp(16).exponent(), 4);
    }

    #[test]
    fn parity_checks() {
        let o4 = spec(Family::OPlus, 4, CharParity::Odd);
        assert!(matches!(order_int(&o4, pp(4)), Err(SpecError::ParityMismatch { .. })));
    }
}
