//! The generating-function identities: which counts fill the left side and
//! which Pochhammer products make up the right side.

use std::fmt;
use std::str::FromStr;

use atlas_exact::exec::{self, Strategy};
use atlas_exact::rat::{frac, int};
use atlas_exact::{BigRat, RatFuncQ};
use atlas_involutions::{count_involutions_poly, Branch, InvolutionError};
use atlas_orders::{orthogonal, CharParity, Family, GroupSpec, Sign, SpecError};
use serde::Serialize;

use crate::poch::{poch_product, PochSpec, XSign};
use crate::series::USeries;
use crate::SeriesError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    /// `SO^±(2n)`, q odd.
    SoEven,
    /// `SO(2n+1)`, q odd.
    SoOdd,
    /// `O^±(2n) \ SO^±(2n)`, q odd.
    CosetSo,
    /// `Omega^+(2n)`, q = 1 mod 4.
    Omega1Plus,
    /// `Omega^-(2n)`, q = 1 mod 4.
    Omega1Minus,
    /// `Omega(2n+1)`, q = 1 mod 4.
    Omega1Odd,
    /// `Omega^±(2n)`, q = 3 mod 4.
    Omega3Even,
    /// `Omega(2n+1)`, q = 3 mod 4.
    Omega3Odd,
    /// `Omega^±(2n)`, q even.
    OmegaEven,
    /// `O^±(2n) \ Omega^±(2n)`, q even.
    CosetOmega,
}

/// One line of the theorem manifest.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ManifestEntry {
    pub id: TheoremId,
    pub label: &'static str,
    /// Leading words of the statement, to tie the label to the text.
    pub opening: &'static str,
    pub subject: &'static str,
    pub signed: bool,
}

pub const MANIFEST: [ManifestEntry; 10] = [
    ManifestEntry { id: TheoremId::SoEven, label: "6.1a", opening: "For q odd and |u| < 1/q", subject: "i(SO^±(2n,q)) / |O^±(2n,q)|", signed: true },
    ManifestEntry { id: TheoremId::SoOdd, label: "6.1b", opening: "For q odd and |u| < 1/q", subject: "i(SO(2n+1,q)) / |O(2n+1,q)|", signed: false },
    ManifestEntry { id: TheoremId::CosetSo, label: "6.2", opening: "For q odd", subject: "i(O^±(2n,q) \\ SO^±(2n,q)) / |O^±(2n,q)|", signed: true },
    ManifestEntry { id: TheoremId::Omega1Plus, label: "6.3a", opening: "For q = 1 (mod 4)", subject: "i(Omega^+(2n,q)) / |O^+(2n,q)|", signed: false },
    ManifestEntry { id: TheoremId::Omega1Minus, label: "6.3b", opening: "For q = 1 (mod 4)", subject: "i(Omega^-(2n,q)) / |O^-(2n,q)|", signed: false },
    ManifestEntry { id: TheoremId::Omega1Odd, label: "6.3c", opening: "For q = 1 (mod 4)", subject: "i(Omega(2n+1,q)) / |O(2n+1,q)|", signed: false },
    ManifestEntry { id: TheoremId::Omega3Even, label: "6.4a", opening: "Let q = 3 (mod 4)", subject: "i(Omega^±(2n,q)) / |O^±(2n,q)|", signed: true },
    ManifestEntry { id: TheoremId::Omega3Odd, label: "6.4b", opening: "Let q = 3 (mod 4)", subject: "i(Omega(2n+1,q)) / |O(2n+1,q)|", signed: false },
    ManifestEntry { id: TheoremId::OmegaEven, label: "6.6", opening: "For q even and |u| < 1/q", subject: "i(Omega^±(2n,q)) / |O^±(2n,q)|", signed: true },
    ManifestEntry { id: TheoremId::CosetOmega, label: "6.7", opening: "For q even", subject: "i(O^±(2n,q) \\ Omega^±(2n,q)) / |O^±(2n,q)|", signed: true },
];

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::SoEven,
        TheoremId::SoOdd,
        TheoremId::CosetSo,
        TheoremId::Omega1Plus,
        TheoremId::Omega1Minus,
        TheoremId::Omega1Odd,
        TheoremId::Omega3Even,
        TheoremId::Omega3Odd,
        TheoremId::OmegaEven,
        TheoremId::CosetOmega,
    ];

    pub fn entry(self) -> &'static ManifestEntry {
        MANIFEST.iter().find(|e| e.id == self).expect("every id has an entry")
    }

    pub fn label(self) -> &'static str {
        self.entry().label
    }

    pub fn signed(self) -> bool {
        self.entry().signed
    }

    pub fn parity(self) -> CharParity {
        match self {
            TheoremId::OmegaEven | TheoremId::CosetOmega => CharParity::Even,
            _ => CharParity::Odd,
        }
    }

    pub fn branch(self) -> Option<Branch> {
        match self {
            TheoremId::Omega1Plus | TheoremId::Omega1Minus | TheoremId::Omega1Odd => Some(Branch::OneMod4),
            TheoremId::Omega3Even | TheoremId::Omega3Odd => Some(Branch::ThreeMod4),
            _ => None,
        }
    }

    /// Sign choices the statement carries.
    pub fn signs(self) -> &'static [Sign] {
        if self.signed() {
            &[Sign::Plus, Sign::Minus]
        } else {
            &[Sign::Plus]
        }
    }

    fn odd_dimensional(self) -> bool {
        matches!(self, TheoremId::SoOdd | TheoremId::Omega1Odd | TheoremId::Omega3Odd)
    }

    /// Group family and dimension counted at coefficient `n`.
    fn group(self, sign: Sign, n: usize) -> (Family, usize, Sign) {
        let dim = if self.odd_dimensional() { 2 * n + 1 } else { 2 * n };
        let (fam, sign) = match self {
            TheoremId::SoEven => (if sign == Sign::Plus { Family::SoPlus } else { Family::SoMinus }, sign),
            TheoremId::SoOdd => (Family::SoOdd, Sign::Plus),
            TheoremId::CosetSo => (Family::CosetSo(sign), sign),
            TheoremId::Omega1Plus => (Family::OmegaPlus, Sign::Plus),
            TheoremId::Omega1Minus => (Family::OmegaMinus, Sign::Minus),
            TheoremId::Omega1Odd | TheoremId::Omega3Odd => (Family::OmegaOdd, Sign::Plus),
            TheoremId::Omega3Even | TheoremId::OmegaEven => {
                (if sign == Sign::Plus { Family::OmegaPlus } else { Family::OmegaMinus }, sign)
            }
            TheoremId::CosetOmega => (Family::CosetOmega(sign), sign),
        };
        (fam, dim, sign)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TheoremId {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, SeriesError> {
        MANIFEST
            .iter()
            .find(|e| e.label == s.trim())
            .map(|e| e.id)
            .ok_or_else(|| SeriesError::UnknownTheorem(s.to_string()))
    }
}

/// Coefficient `n` of the left side: `i(G) q^{n^2} / |O|`, zero when `G`
/// does not exist.
pub fn lhs_coeff(theorem: TheoremId, sign: Sign, n: usize) -> Result<RatFuncQ, SeriesError> {
    let (fam, dim, osign) = theorem.group(sign, n);
    let parity = theorem.parity();
    let spec = match GroupSpec::new(fam, dim, parity) {
        Ok(s) => s,
        Err(SpecError::MinusZero) => return Ok(RatFuncQ::zero()),
        Err(e) => return Err(InvolutionError::from(e).into()),
    };
    let count = count_involutions_poly(&spec, theorem.branch())?;
    let count = count.value.as_poly().expect("symbolic count").clone();
    let order = orthogonal(dim, osign, parity).expect("ambient group exists");
    let scaled = &RatFuncQ::from_poly(&count) * &RatFuncQ::q_pow((n * n) as i64);
    Ok(scaled.checked_div(&RatFuncQ::from_poly(&order)).expect("nonzero order"))
}

pub fn gf_lhs(theorem: TheoremId, sign: Sign, trunc: usize, strategy: Strategy) -> Result<USeries, SeriesError> {
    let idx: Vec<usize> = (0..=trunc).collect();
    let coeffs = exec::map(strategy, &idx, |&n| lhs_coeff(theorem, sign, n)).into_iter().collect::<Result<_, _>>()?;
    Ok(USeries::from_coeffs(coeffs, trunc))
}

/// Polynomial prefactors appearing on the right sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prefactor {
    One,
    /// `1 + u`
    OnePlusU,
    /// `1 / (1 - u)`
    GeometricU,
    /// `u q`
    UQ,
}

impl Prefactor {
    fn series(self, trunc: usize) -> USeries {
        match self {
            Prefactor::One => USeries::one(trunc),
            Prefactor::OnePlusU => USeries::from_coeffs(vec![RatFuncQ::one(), RatFuncQ::one()], trunc),
            Prefactor::GeometricU => USeries::from_coeffs(vec![RatFuncQ::one(); trunc + 1], trunc),
            Prefactor::UQ => USeries::monomial(RatFuncQ::q_pow(1), 1, trunc),
        }
    }
}

/// `weight * prefactor * prod(num) / prod(den)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhsTerm {
    pub weight: BigRat,
    pub prefactor: Prefactor,
    pub num: Vec<PochSpec>,
    pub den: Vec<PochSpec>,
}

/// `prod_{i>=1} (1 + s u^a q^{b - 2(i-1)})`.
fn p(a: usize, b: i64, plus: bool) -> PochSpec {
    let sign = if plus { XSign::MinusX } else { XSign::PlusX };
    PochSpec::new(a, b, sign).expect("valid product")
}

fn term(weight: BigRat, prefactor: Prefactor, num: Vec<PochSpec>, den: Vec<PochSpec>) -> RhsTerm {
    RhsTerm { weight, prefactor, num, den }
}

/// Right side as a sum of product terms.
pub fn rhs_terms(theorem: TheoremId, sign: Sign) -> Vec<RhsTerm> {
    use Prefactor::*;
    let pm = sign.as_i64();
    let half = frac(1, 2);
    let quarter = frac(1, 4);
    match theorem {
        TheoremId::SoEven => vec![
            term(half.clone(), One, vec![p(1, 0, true), p(1, 0, true)], vec![p(2, 2, false)]),
            term(&half * int(pm), One, vec![p(1, -1, true), p(1, -1, true)], vec![p(2, 0, false)]),
        ],
        TheoremId::SoOdd => vec![term(half, GeometricU, vec![p(1, -2, true), p(1, -2, true)], vec![p(2, -2, false)])],
        TheoremId::CosetSo => vec![term(half, UQ, vec![p(1, 0, true), p(1, 0, true)], vec![p(2, 2, false)])],
        TheoremId::Omega1Plus => vec![
            term(quarter.clone(), One, vec![p(1, 0, true), p(1, 0, true)], vec![p(2, 2, false)]),
            term(frac(1, 2), One, vec![p(1, 0, true), p(1, -1, true)], vec![p(2, 1, false)]),
            term(quarter, One, vec![p(1, -1, true), p(1, -1, true)], vec![p(2, 0, false)]),
        ],
        TheoremId::Omega1Minus => vec![
            term(quarter.clone(), One, vec![p(1, 0, true), p(1, 0, true)], vec![p(2, 2, false)]),
            term(-quarter, One, vec![p(1, -1, true), p(1, -1, true)], vec![p(2, 0, false)]),
        ],
        TheoremId::Omega1Odd => vec![
            term(quarter.clone(), OnePlusU, vec![p(1, -2, true), p(1, -2, true)], vec![p(2, 0, false)]),
            term(quarter, One, vec![p(1, -1, true), p(1, -2, true)], vec![p(2, -1, false)]),
        ],
        TheoremId::Omega3Even => vec![
            term(quarter.clone(), One, vec![p(1, 0, true), p(1, 0, true)], vec![p(2, 2, false)]),
            term(quarter.clone(), One, vec![p(1, 0, true), p(1, -1, false)], vec![p(2, 1, true)]),
            term(&quarter * int(pm), One, vec![p(1, 0, false), p(1, -1, true)], vec![p(2, 1, true)]),
            term(&quarter * int(pm), One, vec![p(1, -1, true), p(1, -1, true)], vec![p(2, 0, false)]),
        ],
        TheoremId::Omega3Odd => vec![
            term(quarter.clone(), OnePlusU, vec![p(1, -2, true), p(1, -2, true)], vec![p(2, 0, false)]),
            term(quarter, One, vec![p(1, -1, false), p(1, -2, true)], vec![p(2, -1, true)]),
        ],
        TheoremId::OmegaEven => vec![
            term(half.clone(), One, vec![p(1, 0, true)], vec![p(2, 2, false)]),
            term(&half * int(pm), One, vec![p(1, -1, true)], vec![p(2, 0, false)]),
        ],
        TheoremId::CosetOmega => vec![term(half, UQ, vec![p(1, 0, true)], vec![p(2, 2, false)])],
    }
}

/// The right side of the `O \ Omega` identity with the numerator as printed,
/// `prod (1 + u/q^{2i-1})`, which fails from `u^2` on.
pub fn rhs_terms_printed_coset_omega() -> Vec<RhsTerm> {
    vec![term(frac(1, 2), Prefactor::UQ, vec![p(1, -1, true)], vec![p(2, 2, false)])]
}

/// Evaluate a list of right-side terms through `u^trunc`.
pub fn eval_rhs(terms: &[RhsTerm], trunc: usize, strategy: Strategy) -> Result<USeries, SeriesError> {
    let mut out = USeries::zero(trunc);
    for t in terms {
        let mut s = t.prefactor.series(trunc);
        for f in &t.num {
            s = s.mul_with(&poch_product(f, trunc), strategy)?;
        }
        for f in &t.den {
            s = s.mul_with(&poch_product(f, trunc).inverse()?, strategy)?;
        }
        out = out.add(&s.scale_rat(&t.weight))?;
    }
    Ok(out)
}

pub fn gf_rhs(theorem: TheoremId, sign: Sign, trunc: usize, strategy: Strategy) -> Result<USeries, SeriesError> {
    eval_rhs(&rhs_terms(theorem, sign), trunc, strategy)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_is_complete() {
        assert_eq!(MANIFEST.len(), TheoremId::ALL.len());
        for t in TheoremId::ALL {
            assert_eq!(t.entry().id, t);
        }
    }

    #[test]
    fn first_coefficients() {
        // SO^+(2,q) is cyclic of even order q - 1: two involutions, and |O^+(2,q)| = 2(q - 1).
        let c = lhs_coeff(TheoremId::SoEven, Sign::Plus, 1).unwrap();
        assert_eq!(c.to_string(), RatFuncQ::new(&"q".parse().unwrap(), &"q - 1".parse().unwrap()).unwrap().to_string());
        assert!(lhs_coeff(TheoremId::Omega1Minus, Sign::Minus, 0).unwrap().is_zero());
    }
}
