use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("window ends at (1/q)^{requested} but the leading term is (1/q)^{leading}")]
    WindowTooSmall { leading: i64, requested: i64 },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
