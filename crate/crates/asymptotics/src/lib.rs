//! Limits of `i(G) / q^{n^2}` for the orthogonal families as the rank grows,
//! evaluated from their infinite-product closed forms, and tables of the
//! exact normalised counts converging to them.
//!
//! Arithmetic is exact-rational; each product carries an explicit bound on
//! the tail it omits.

pub mod limit;
pub mod product;
pub mod table;

use atlas_involutions::InvolutionError;
use thiserror::Error;

pub use limit::{limit_value, LimitKind, LimitSpec, Residue};
pub use product::{infinite_product, Bounded, FactorSign, Pattern};
pub use table::{convergence_table, dims, ConvergenceRow, ConvergenceTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymError {
    #[error("exponent a*i + b must increase with i")]
    NotIncreasing,
    #[error("first factor has exponent a + b = {a} + {b} <= 0")]
    Degenerate { a: u32, b: i32 },
    #[error("eps must be positive")]
    BadEps,
    #[error("base q = {0} must be at least 2")]
    BadBase(String),
    #[error("{kind} needs q of the other parity, got q = {q}")]
    ParityMismatch { kind: &'static str, q: u64 },
    #[error("unknown limit kind {0:?}")]
    UnknownKind(String),
    #[error("dimension {dim} exceeds the configured bound {max}")]
    TooLarge { dim: usize, max: usize },
    #[error(transparent)]
    Count(#[from] InvolutionError),
}
