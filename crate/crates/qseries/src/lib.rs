//! Truncated power series in `u` over rational functions of `q`, infinite
//! q-Pochhammer products, and exact checks of generating functions for
//! involution counts.
//!
//! `q` stays formal throughout, so every check is an equality of reduced
//! rational functions.

pub mod poch;
pub mod series;
pub mod theorem;
pub mod verify;

use atlas_exact::ExactError;
use atlas_involutions::InvolutionError;
use thiserror::Error;

pub use poch::{poch_expand, poch_product, qbinom_check, PochSpec, QBinomCase, XSign};
pub use series::USeries;
pub use theorem::{gf_lhs, gf_rhs, lhs_coeff, rhs_terms, ManifestEntry, TheoremId, MANIFEST};
pub use verify::{verify_identity, verify_with, Row, VerifyReport, DEFAULT_TRUNC};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {0} vs {1}")]
    TruncMismatch(usize, usize),
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("product argument must involve u")]
    ConstantArgument,
    #[error("base q^{0} must be a negative even power of q")]
    BadBase(i64),
    #[error("unknown theorem label {0:?}")]
    UnknownTheorem(String),
    #[error("theorem {0} carries no sign choice")]
    Unsigned(&'static str),
    #[error("truncation must be at least 1")]
    ZeroTruncation,
    #[error(transparent)]
    Count(#[from] InvolutionError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
