//! Integer polynomials (ascending coefficients, no trailing zeros) and a
//! modular gcd certified by exact division.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[BigInt]) -> ZPoly {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> ZPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Nonnegative gcd of the coefficients; zero for the zero polynomial.
pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Split `a` into a signed content and a primitive part with positive
/// leading coefficient. Zero maps to `(0, [])`.
pub(crate) fn primitive(a: &[BigInt]) -> (BigInt, ZPoly) {
    if a.is_empty() {
        return (BigInt::zero(), Vec::new());
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    if c.is_one() {
        return (c, a.to_vec());
    }
    let p = a.iter().map(|x| x / &c).collect();
    (c, p)
}

/// `a / b` when `b` divides `a` in `Z[q]`, otherwise `None`.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    assert!(!b.is_empty(), "exact_div by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let unit = lb.abs().is_one();
    let mut r = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let top = &r[i + db];
        if top.is_zero() {
            continue;
        }
        let c = if unit {
            top * lb
        } else {
            let (c, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            c
        };
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                r[i + j] -= &c * y;
            }
        }
        quot[i] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

// ---------------------------------------------------------------------------
// arithmetic mod a word-sized prime

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, descending.
fn primes() -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime_u64(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(p)
    })
}

fn reduce(a: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(&pb);
            let (_, digits) = r.to_u64_digits();
            digits.first().copied().unwrap_or(0)
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn rem_mod(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = invmod(*b.last().unwrap(), p);
    while a.len() > db {
        let top = *a.last().unwrap();
        if top != 0 {
            let c = mulmod(top, inv, p);
            let shift = a.len() - 1 - db;
            for (j, y) in b.iter().enumerate() {
                let t = mulmod(c, *y, p);
                let slot = &mut a[shift + j];
                *slot = if *slot >= t { *slot - t } else { *slot + p - t };
            }
        }
        a.pop();
        while a.last() == Some(&0) {
            a.pop();
        }
    }
}

/// Monic gcd over F_p of two nonzero polynomials.
fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        rem_mod(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    let inv = invmod(*x.last().unwrap(), p);
    x.iter().map(|c| mulmod(*c, inv, p)).collect()
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Primitive gcd with positive leading coefficient. Zero only when both
/// inputs are zero.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return primitive(b).1;
    }
    if b.is_empty() {
        return primitive(a).1;
    }
    let (_, pa) = primitive(a);
    let (_, pb) = primitive(b);
    if pa.len() == 1 || pb.len() == 1 {
        return vec![BigInt::one()];
    }
    if pa == pb {
        return pa;
    }
    let gamma = pa.last().unwrap().gcd(pb.last().unwrap());
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = Vec::new();
    let mut best: Option<usize> = None;
    for p in primes() {
        let ap = reduce(&pa, p);
        let bp = reduce(&pb, p);
        if ap.len() != pa.len() || bp.len() != pb.len() {
            continue;
        }
        let g = gcd_mod(&ap, &bp, p);
        let d = g.len() - 1;
        if d == 0 {
            return vec![BigInt::one()];
        }
        let gm = reduce(&[gamma.clone()], p)[0];
        let scaled: Vec<u64> = g.iter().map(|c| mulmod(*c, gm, p)).collect();
        match best {
            Some(b) if d > b => continue,
            Some(b) if d == b => {
                let mp = reduce(&[modulus.clone()], p)[0];
                let inv = invmod(mp, p);
                let pbig = BigInt::from(p);
                for (slot, r) in acc.iter_mut().zip(&scaled) {
                    let cur = reduce(&[slot.clone()], p).first().copied().unwrap_or(0);
                    let diff = if *r >= cur { r - cur } else { r + p - cur };
                    let t = mulmod(diff, inv, p);
                    *slot += &modulus * BigInt::from(t);
                }
                modulus *= pbig;
            }
            _ => {
                best = Some(d);
                modulus = BigInt::from(p);
                acc = scaled.iter().map(|c| BigInt::from(*c)).collect();
            }
        }
        let cand: ZPoly = acc.iter().map(|c| symmetric(c, &modulus)).collect();
        let (_, prim) = primitive(&cand);
        if prim.len() == d + 1 && exact_div(&pa, &prim).is_some() && exact_div(&pb, &prim).is_some() {
            return prim;
        }
    }
    unreachable!("prime iterator is unbounded")
}

#[cfg(test)]
pub(crate) fn from_i64(cs: &[i64]) -> ZPoly {
    let mut v: ZPoly = cs.iter().map(|c| BigInt::from(*c)).collect();
    trim(&mut v);
    v
}

pub(crate) fn is_positive_lead(p: &[BigInt]) -> bool {
    p.last().is_some_and(|c| c.sign() == Sign::Plus)
}
