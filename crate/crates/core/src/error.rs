use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed text: {0}")]
    Parse(String),
    #[error("invalid vertex set: {0}")]
    Domain(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("equivalence is not planar")]
    NotPlanar,
    #[error("equivalence is not convex")]
    NotConvex,
    #[error("{element} is not in {set}")]
    NotMember { element: String, set: String },
    #[error("budget of {0} exhausted")]
    BudgetExhausted(usize),
    #[error("unknown name `{0}`")]
    Unknown(String),
    #[error("presentations need n >= 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("left congruences live on different carriers")]
    CarrierMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
