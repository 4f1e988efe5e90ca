use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("field of order {order} exceeds the configured limit of {limit} elements")]
    FieldTooLarge { order: u128, limit: u64 },

    #[error("element is not in the required subfield: {0}")]
    NotInSubfield(String),

    #[error("trace level {0} is not available for this field")]
    BadTraceLevel(String),

    #[error("work estimate {estimate} exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub(crate) fn consistency(msg: impl Into<String>) -> Error {
    Error::InternalConsistency(msg.into())
}
