//! Small classical groups over `F_q`, built element by element.
//!
//! Everything here is independent of the closed-form counts: groups come from
//! backtracking over basis images, `Omega` from commutator closure, and
//! involutions are counted one matrix at a time.

pub mod count;
pub mod dump;
pub mod field;
pub mod form;
pub mod group;
pub mod linalg;
pub mod omega;
pub mod suite;

use atlas_exact::BigInt;
use atlas_involutions::InvolutionError;
use atlas_orders::{Sign, SpecError};
use thiserror::Error;

pub use count::{count_involutions_bruteforce, Subset};
pub use field::FieldTable;
pub use form::{witt_type, FormKind, FormSpec};
pub use group::{build_isometry_group, cap_from_env, Group, IsometryGroup, DEFAULT_CAP};
pub use omega::{omega_membership_even, Agreement, OmegaRoute, Subgroups};
pub use suite::{default_suite, run_case, run_suite, Case, CaseOutcome, CaseReport, FormChoice, SubsetRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("field tables are only built for q <= 16, got {0}")]
    FieldTooLarge(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field axiom check failed: {0}")]
    FieldAxiom(&'static str),
    #[error("form is degenerate")]
    Degenerate,
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("constructed form does not have type {0:?}")]
    WrongType(Sign),
    #[error("q = {0} must be odd here")]
    NeedOddQ(u64),
    #[error("q = {0} must be even here")]
    NeedEvenQ(u64),
    #[error("estimated order {estimate} exceeds the cap {cap} (set INVOLUTION_ATLAS_CAP to raise it)")]
    CapExceeded { estimate: BigInt, cap: u64 },
    #[error("enumerated {built} isometries, expected {expected}")]
    OrderMismatch { built: u64, expected: u64 },
    #[error("enumerated set is not closed under products and inverses")]
    NotClosed,
    #[error("candidate Omega has order {order}, not half of {parent}")]
    OmegaIndex { order: usize, parent: usize },
    #[error("no Omega subgroup for this form")]
    NoOmega,
    #[error("subset {subset} is undefined here: {reason}")]
    SubsetUndefined { subset: Subset, reason: &'static str },
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Count(#[from] InvolutionError),
    #[error("dump i/o: {0}")]
    Io(String),
}
