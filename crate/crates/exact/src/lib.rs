//! Exact arithmetic in one formal variable `q`.
//!
//! [`PolyQ`] is a polynomial over the rationals, [`RatFuncQ`] a reduced
//! rational function with monic denominator, and [`LaurentQ`] a truncated
//! expansion in powers of `1/q`. Equality on all three is structural.

mod error;
pub mod exec;
mod laurent;
mod poly;
pub mod rat;
mod ratfunc;
mod render;
mod zpoly;

pub use error::ExactError;
pub use laurent::{laurent_expand, LaurentQ};
pub use poly::PolyQ;
pub use rat::BigRat;
pub use ratfunc::RatFuncQ;

pub use num_bigint::BigInt;
