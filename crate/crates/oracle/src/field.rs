//! `GF(q)` for prime powers `q <= 16`, as full addition and multiplication
//! tables.
//!
//! An element of `GF(p^k)` is the integer `sum a_i p^i` for the polynomial
//! `sum a_i t^i` reduced modulo a fixed irreducible of degree `k`.

use atlas_orders::{prime_power_parts, CharParity};

use crate::OracleError;

pub type Elt = u8;

/// Conway polynomials, low coefficient first, monic leading term omitted.
fn modulus(p: u64, k: u32) -> Option<&'static [u8]> {
    match (p, k) {
        (_, 1) => Some(&[]),
        (2, 2) => Some(&[1, 1]),       // t^2 + t + 1
        (2, 3) => Some(&[1, 1, 0]),    // t^3 + t + 1
        (2, 4) => Some(&[1, 1, 0, 0]), // t^4 + t + 1
        (3, 2) => Some(&[2, 2]),       // t^2 + 2t + 2
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct FieldTable {
    q: usize,
    p: usize,
    add: Vec<Elt>,
    mul: Vec<Elt>,
    neg: Vec<Elt>,
    inv: Vec<Elt>,
    is_square: Vec<bool>,
}

fn digits(x: usize, p: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    let mut x = x;
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl FieldTable {
    pub fn new(q: u64) -> Result<Self, OracleError> {
        if q > 16 {
            return Err(OracleError::FieldTooLarge(q));
        }
        let (p, k) = prime_power_parts(q).ok_or(OracleError::NotPrimePower(q))?;
        let red = modulus(p, k).ok_or(OracleError::FieldTooLarge(q))?;
        let (q, p, k) = (q as usize, p as usize, k as usize);
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let db = digits(b, p, k);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum, p) as Elt;
                // schoolbook product, then reduce t^j for j >= k
                let mut prod = vec![0usize; 2 * k];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for j in (k..2 * k).rev() {
                    let c = prod[j];
                    if c == 0 {
                        continue;
                    }
                    prod[j] = 0;
                    // t^k = -sum red_i t^i
                    for (i, r) in red.iter().enumerate() {
                        prod[j - k + i] = (prod[j - k + i] + (p - c) * *r as usize) % p;
                    }
                }
                mul[a * q + b] = undigits(&prod[..k], p) as Elt;
            }
        }
        let mut f = FieldTable { q, p, add, mul, neg: vec![0; q], inv: vec![0; q], is_square: vec![false; q] };
        for a in 0..q {
            f.neg[a] = (0..q).find(|&b| f.add(a as Elt, b as Elt) == 0).expect("additive inverse") as Elt;
            if a != 0 {
                f.inv[a] = (0..q).find(|&b| f.mul(a as Elt, b as Elt) == 1).ok_or(OracleError::FieldAxiom("inverse"))? as Elt;
            }
            let sq = f.mul(a as Elt, a as Elt);
            f.is_square[sq as usize] = true;
        }
        f.check_axioms()?;
        Ok(f)
    }

    fn check_axioms(&self) -> Result<(), OracleError> {
        let q = self.q as Elt;
        for a in 0..q {
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(OracleError::FieldAxiom("commutativity"));
                }
                for c in 0..q {
                    if self.mul(a, self.mul(b, c)) != self.mul(self.mul(a, b), c) {
                        return Err(OracleError::FieldAxiom("associativity"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(OracleError::FieldAxiom("distributivity"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn parity(&self) -> CharParity {
        if self.p == 2 {
            CharParity::Even
        } else {
            CharParity::Odd
        }
    }

    #[inline]
    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elt) -> Elt {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    /// Panics on zero.
    #[inline]
    pub fn inv(&self, a: Elt) -> Elt {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    pub fn is_square(&self, a: Elt) -> bool {
        self.is_square[a as usize]
    }

    /// The image of an integer.
    pub fn from_int(&self, n: i64) -> Elt {
        n.rem_euclid(self.p as i64) as Elt
    }

    /// Smallest non-square; `None` in characteristic 2.
    pub fn non_square(&self) -> Option<Elt> {
        (1..self.q as Elt).find(|&a| !self.is_square(a))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        0..self.q as Elt
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_small_fields_build() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldTable::new(q).unwrap();
            let squares = f.elements().filter(|&a| a != 0 && f.is_square(a)).count();
            let expect = if q % 2 == 0 { q - 1 } else { (q - 1) / 2 };
            assert_eq!(squares as u64, expect, "q={q}");
        }
    }

    #[test]
    fn rejects_unsupported() {
        assert_eq!(FieldTable::new(6).unwrap_err(), OracleError::NotPrimePower(6));
        assert_eq!(FieldTable::new(25).unwrap_err(), OracleError::FieldTooLarge(25));
    }

    #[test]
    fn gf4_structure() {
        let f = FieldTable::new(4).unwrap();
        // t * t = t + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 3), 1);
        assert!(f.non_square().is_none());
        let f9 = FieldTable::new(9).unwrap();
        assert!(f9.is_square(f9.from_int(-1)));
        let f3 = FieldTable::new(3).unwrap();
        assert!(!f3.is_square(f3.from_int(-1)));
    }
}
