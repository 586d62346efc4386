//! Exact counts of involutions (elements with `g^2 = 1`, identity included)
//! in finite orthogonal groups, their `SO` and `Omega` subgroups, and the
//! complementary cosets.
//!
//! Every count is a sum of conjugacy-class sizes `|G| / |C_G(g)|`, built from
//! group orders. [`count_involutions`] evaluates at a concrete `q`;
//! [`count_involutions_poly`] keeps `q` formal and returns a polynomial.

mod eval;
pub mod formula;
mod membership;

use std::fmt;

use atlas_exact::exec::Strategy;
use atlas_exact::{BigInt, PolyQ};
use atlas_orders::{CharParity, Family, GroupSpec, PrimePower, Sign, SpecError};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use formula::{formula, Branch, Factor, Formula, Term, TermKind};
pub use membership::{omega_class_membership, OmegaClassQuery};

/// Default ceiling on the dimension accepted by the counters.
pub const DEFAULT_MAX_DIM: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("symbolic Omega counts in odd characteristic need a branch (1mod4 or 3mod4)")]
    MissingBranch,
    #[error("no involution formula for {0}")]
    Unsupported(GroupSpec),
    #[error("dimension {dim} exceeds the configured bound {max}")]
    TooLarge { dim: usize, max: usize },
    #[error("q = {0} must be odd here")]
    NeedOddQ(u64),
    #[error("the -1-eigenspace dimension {0} must be even")]
    OddEigenspace(usize),
    #[error("Witt type {0:?} is not even-dimensional")]
    OddWittType(atlas_orders::WittType),
    #[error("v_- = {0} is not an integer")]
    NonIntegralV(String),
    #[error("internal: class sizes summed to the non-integer {0}")]
    NotIntegral(String),
    #[error("internal: class sizes summed to the non-polynomial {0}")]
    NotPolynomial(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountValue {
    Integer(BigInt),
    Poly(PolyQ),
}

impl CountValue {
    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            CountValue::Integer(v) => Some(v),
            CountValue::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&PolyQ> {
        match self {
            CountValue::Poly(p) => Some(p),
            CountValue::Integer(_) => None,
        }
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountValue::Integer(v) => write!(f, "{v}"),
            CountValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub spec: GroupSpec,
    pub q: Option<PrimePower>,
    pub branch: Option<Branch>,
    pub value: CountValue,
    pub formula_id: &'static str,
    /// Set when the count is reported as something else it equals.
    pub reading: Option<&'static str>,
}

impl Serialize for CountReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("family", self.spec.family().id())?;
        m.serialize_entry("dim", &self.spec.dim())?;
        m.serialize_entry("char_parity", &self.spec.parity())?;
        if let Some(q) = self.q {
            m.serialize_entry("q", &q)?;
        }
        if let Some(b) = self.branch {
            m.serialize_entry("branch", &b)?;
        }
        m.serialize_entry("value", &self.value.to_string())?;
        m.serialize_entry("formula_id", self.formula_id)?;
        if let Some(r) = self.reading {
            m.serialize_entry("reading", r)?;
        }
        m.end()
    }
}

/// Counting knobs: parallelism over terms and the dimension ceiling.
#[derive(Debug, Clone, Copy)]
pub struct Counter {
    pub strategy: Strategy,
    pub max_dim: usize,
}

impl Default for Counter {
    fn default() -> Self {
        Counter { strategy: Strategy::default(), max_dim: DEFAULT_MAX_DIM }
    }
}

impl Counter {
    fn check_dim(&self, spec: &GroupSpec) -> Result<(), InvolutionError> {
        if spec.dim() > self.max_dim {
            return Err(InvolutionError::TooLarge { dim: spec.dim(), max: self.max_dim });
        }
        Ok(())
    }

    pub fn count(&self, spec: &GroupSpec, q: PrimePower) -> Result<CountReport, InvolutionError> {
        spec.check_q(q)?;
        self.check_dim(spec)?;
        let branch = match spec.parity() {
            CharParity::Odd if is_omega(spec.family()) => Branch::of(q.get()),
            _ => None,
        };
        let f = formula(spec, branch)?;
        self.count_formula(spec, q, branch, &f)
    }

    /// Evaluate an explicit formula at `q`.
    pub fn count_formula(
        &self,
        spec: &GroupSpec,
        q: PrimePower,
        branch: Option<Branch>,
        f: &Formula,
    ) -> Result<CountReport, InvolutionError> {
        let ctx = eval::Numeric::new(q.get(), spec.parity(), spec.dim());
        let total = eval::sum(&ctx, f, self.strategy);
        if !total.is_integer() {
            return Err(InvolutionError::NotIntegral(atlas_exact::rat::render(&total)));
        }
        Ok(CountReport {
            spec: *spec,
            q: Some(q),
            branch,
            value: CountValue::Integer(total.to_integer()),
            formula_id: f.id,
            reading: None,
        })
    }

    pub fn count_poly(&self, spec: &GroupSpec, branch: Option<Branch>) -> Result<CountReport, InvolutionError> {
        self.check_dim(spec)?;
        let branch = if spec.parity() == CharParity::Odd && is_omega(spec.family()) { branch } else { None };
        let f = formula(spec, branch)?;
        self.count_poly_formula(spec, branch, &f)
    }

    /// Evaluate an explicit formula with `q` formal.
    pub fn count_poly_formula(
        &self,
        spec: &GroupSpec,
        branch: Option<Branch>,
        f: &Formula,
    ) -> Result<CountReport, InvolutionError> {
        let ctx = eval::Symbolic { parity: spec.parity() };
        let total = eval::sum(&ctx, f, self.strategy);
        let poly = total.to_poly().ok_or_else(|| InvolutionError::NotPolynomial(total.to_string()))?;
        Ok(CountReport { spec: *spec, q: None, branch, value: CountValue::Poly(poly), formula_id: f.id, reading: None })
    }
}

fn is_omega(f: Family) -> bool {
    matches!(f, Family::OmegaPlus | Family::OmegaMinus | Family::OmegaOdd)
}

/// Number of involutions in the group or coset `spec` at `q`.
pub fn count_involutions(spec: &GroupSpec, q: PrimePower) -> Result<CountReport, InvolutionError> {
    Counter::default().count(spec, q)
}

/// The same count as a polynomial in `q`. Omega in odd characteristic needs
/// the congruence branch of `q` named explicitly.
pub fn count_involutions_poly(spec: &GroupSpec, branch: Option<Branch>) -> Result<CountReport, InvolutionError> {
    Counter::default().count_poly(spec, branch)
}

/// Character degree sum of `SO^±(4m+2, q)`, `q` odd, read off as the number
/// of involutions in `O^±(4m+2, q) \ SO^±(4m+2, q)`.
pub fn char_degree_sum_via_involutions(m: usize, q: PrimePower, sign: Sign) -> Result<CountReport, InvolutionError> {
    if q.parity() != CharParity::Odd {
        return Err(InvolutionError::NeedOddQ(q.get()));
    }
    let spec = GroupSpec::new(Family::CosetSo(sign), 4 * m + 2, CharParity::Odd)?;
    let mut r = count_involutions(&spec, q)?;
    r.reading = Some("character_degree_sum_SO");
    Ok(r)
}
