use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PraxError {
    #[error("universe is empty")]
    EmptyUniverse,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("index {index} out of range for universe of {n} points")]
    OutOfRange { index: usize, n: usize },
    #[error("universe of {n} points exceeds the limit of {max} for this operation")]
    UniverseTooLarge { n: usize, max: usize },
    #[error("operands live on different universes")]
    UniverseMismatch,
    #[error("symmetric part is not an equivalence")]
    NonEquivalenceTau,
    #[error("relation is not an order-compatible quasi-order")]
    NotInLqo,
    #[error("first relation is not contained in the second")]
    NotSubrelation,
    #[error("relation is not transitive")]
    NotTransitive,
    #[error("side condition violated: {0}")]
    SideConditionViolated(&'static str),
    #[error("result is undefined")]
    Undefined,
    #[error("no element satisfies the defining condition")]
    EmptyResult,
    #[error("invalid probability weights: {0}")]
    InvalidWeights(&'static str),
}

pub type Result<T, E = PraxError> = std::result::Result<T, E>;
