use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of negative value {0}")]
    NegativeSqrt(String),
    #[error("invalid enclosure: lower bound {lo} exceeds upper bound {hi}")]
    InvalidEnclosure { lo: String, hi: String },
    #[error("success probability {0} is not in (0, 1)")]
    InvalidProbability(String),
    #[error("{what} = {value} is out of range (limit {limit})")]
    OutOfRange {
        what: &'static str,
        value: String,
        limit: String,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("exact identity failed: {0}")]
    IdentityMismatch(String),
}
