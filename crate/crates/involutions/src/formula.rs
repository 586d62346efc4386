//! Involution counts written as data: a sum of `mult * |ambient| / prod(den)`.
//!
//! Each term is the size of one conjugacy class of involutions; the
//! denominator is the order of its centralizer.

use atlas_orders::{CharParity, Family, GroupSpec, Sign};
use serde::Serialize;

use crate::InvolutionError;

/// Which congruence class of an odd `q` selects the Omega formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    #[serde(rename = "1mod4")]
    OneMod4,
    #[serde(rename = "3mod4")]
    ThreeMod4,
}

impl Branch {
    pub fn of(q: u64) -> Option<Branch> {
        match q % 4 {
            1 => Some(Branch::OneMod4),
            3 => Some(Branch::ThreeMod4),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Branch::OneMod4 => "1mod4",
            Branch::ThreeMod4 => "3mod4",
        }
    }
}

impl std::str::FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1mod4" => Ok(Branch::OneMod4),
            "3mod4" => Ok(Branch::ThreeMod4),
            _ => Err(format!("unknown branch {s:?}, expected 1mod4 or 3mod4")),
        }
    }
}

/// One factor of a centralizer order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// `|O^±(k,q)|`; the sign is ignored for odd `k`. `O^-(0)` kills the term.
    Orth(usize, Sign),
    /// `|Sp(k,q)|` with `k` the matrix dimension.
    Symp(usize),
    /// `q^e`.
    QPow(i64),
    Int(i64),
}

/// Where a term comes from, for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermKind {
    /// Odd characteristic, `-1`-eigenspace of dimension `k`.
    Eigen { k: usize },
    A { k: usize },
    B { k: usize },
    C { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub kind: TermKind,
    pub mult: i64,
    pub den: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    pub id: &'static str,
    /// The group whose order sits in every numerator.
    pub ambient: Factor,
    pub terms: Vec<Term>,
}

fn eigen(k: usize, a: Factor, b: Factor) -> Term {
    Term { kind: TermKind::Eigen { k }, mult: 1, den: vec![a, b] }
}

use Sign::{Minus, Plus};

fn orth_odd_q(dim: usize, sign: Sign) -> Vec<Term> {
    let ((a, b), (c, d), first, second) = match sign {
        Plus => ((Plus, Plus), (Minus, Minus), 0..dim + 1, 1..dim),
        Minus => ((Plus, Minus), (Minus, Plus), 0..dim, 1..dim + 1),
    };
    let mut out: Vec<Term> = first.map(|k| eigen(k, Factor::Orth(k, a), Factor::Orth(dim - k, b))).collect();
    out.extend(second.map(|k| eigen(k, Factor::Orth(k, c), Factor::Orth(dim - k, d))));
    out
}

/// `-1`-eigenspace dimension `2R` with type given by `minus_first`.
fn so_term(dim: usize, r: usize, minus_first: bool, sign: Sign) -> Term {
    let first = if minus_first { Minus } else { Plus };
    // the complement carries the type that makes the total form of type `sign`
    let second = if (first == Minus) == (sign == Minus) { Plus } else { Minus };
    eigen(2 * r, Factor::Orth(2 * r, first), Factor::Orth(dim - 2 * r, second))
}

fn so_terms(dim: usize, sign: Option<Sign>, keep: impl Fn(usize, bool) -> bool) -> Vec<Term> {
    let n = dim / 2;
    let sign = sign.unwrap_or(Plus);
    let mut out = Vec::new();
    for r in 0..=n {
        for minus_first in [false, true] {
            if minus_first && r == 0 {
                continue;
            }
            let t = so_term(dim, r, minus_first, sign);
            if dim % 2 == 0 && t.den.contains(&Factor::Orth(0, Minus)) {
                continue;
            }
            if keep(r, minus_first) {
                out.push(t);
            }
        }
    }
    out
}

fn a_term(n: usize, k: usize, sign: Sign) -> Term {
    let (k_, n_) = (k as i64, n as i64);
    Term {
        kind: TermKind::A { k },
        mult: 1,
        den: vec![
            Factor::QPow(k_ * (k_ - 1) / 2 + k_ * (2 * n_ - 2 * k_)),
            Factor::Symp(k),
            Factor::Orth(2 * n - 2 * k, sign),
        ],
    }
}

fn b_term(n: usize, k: usize) -> Term {
    let (k_, n_) = (k as i64, n as i64);
    Term {
        kind: TermKind::B { k },
        mult: 1,
        den: vec![
            Factor::Int(2),
            Factor::QPow(k_ * (k_ + 1) / 2 + (k_ - 1) * (2 * n_ - 2 * k_) - 1),
            Factor::Symp(k - 2),
            Factor::Symp(2 * n - 2 * k),
        ],
    }
}

fn c_term(n: usize, k: usize) -> Term {
    let (k_, n_) = (k as i64, n as i64);
    Term {
        kind: TermKind::C { k },
        mult: 1,
        den: vec![
            Factor::Int(2),
            Factor::QPow(k_ * (k_ - 1) / 2 + (k_ - 1) * (2 * n_ - 2 * k_)),
            Factor::Symp(k - 1),
            Factor::Symp(2 * n - 2 * k),
        ],
    }
}

fn even_q_terms(n: usize, sign: Sign, a: bool, b: bool, c: bool) -> Vec<Term> {
    let mut out = Vec::new();
    if a {
        // O^-(0) is undefined, so the minus type stops one short
        let stop = if sign == Minus { n } else { n + 1 };
        out.extend((0..stop).step_by(2).map(|k| a_term(n, k, sign)));
    }
    if b {
        out.extend((2..=n).step_by(2).map(|k| b_term(n, k)));
    }
    if c {
        out.extend((1..=n).step_by(2).map(|k| c_term(n, k)));
    }
    out
}

/// The counting formula for `spec`.
///
/// `branch` is consulted only for Omega families in odd characteristic.
pub fn formula(spec: &GroupSpec, branch: Option<Branch>) -> Result<Formula, InvolutionError> {
    let dim = spec.dim();
    let n = dim / 2;
    let fam = spec.family();
    let ambient = match fam.sign() {
        _ if fam.odd_dimensional() => Factor::Orth(dim, Plus),
        Some(s) => Factor::Orth(dim, s),
        None => Factor::Symp(dim),
    };
    let (id, terms) = match spec.parity() {
        CharParity::Odd => match fam {
            Family::OPlus | Family::OOdd => ("orthogonal_q_odd", orth_odd_q(dim, Plus)),
            Family::OMinus => ("orthogonal_q_odd", orth_odd_q(dim, Minus)),
            Family::SoPlus | Family::SoMinus | Family::SoOdd => {
                ("special_orthogonal_q_odd", so_terms(dim, fam.sign(), |_, _| true))
            }
            Family::CosetSo(_) => {
                let terms = (0..n)
                    .map(|r| Term {
                        kind: TermKind::Eigen { k: 2 * r + 1 },
                        mult: 2,
                        den: vec![Factor::Orth(2 * r + 1, Plus), Factor::Orth(dim - 2 * r - 1, Plus)],
                    })
                    .collect();
                ("coset_special_orthogonal_q_odd", terms)
            }
            Family::OmegaPlus | Family::OmegaMinus | Family::OmegaOdd => {
                let branch = branch.ok_or(InvolutionError::MissingBranch)?;
                match branch {
                    Branch::OneMod4 => ("omega_q_1mod4", so_terms(dim, fam.sign(), |_, minus_first| !minus_first)),
                    Branch::ThreeMod4 => (
                        "omega_q_3mod4",
                        so_terms(dim, fam.sign(), |r, minus_first| minus_first == (r % 2 == 1)),
                    ),
                }
            }
            Family::Sp | Family::CosetOmega(_) => return Err(InvolutionError::Unsupported(*spec)),
        },
        CharParity::Even => match fam {
            Family::OPlus | Family::OMinus => ("orthogonal_q_even", even_q_terms(n, fam.sign().unwrap(), true, true, true)),
            Family::OmegaPlus | Family::OmegaMinus => {
                ("omega_q_even", even_q_terms(n, fam.sign().unwrap(), true, true, false))
            }
            Family::CosetOmega(s) => ("coset_omega_q_even", even_q_terms(n, s, false, false, true)),
            _ => return Err(InvolutionError::Unsupported(*spec)),
        },
    };
    Ok(Formula { id, ambient, terms })
}
