use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("invalid linkage: {0}")]
    InvalidLinkage(String),

    #[error("vectors are of different causal kinds")]
    MixedCausalType,

    #[error("vector is not future-pointing")]
    NotFuturePointing,

    #[error("vector is lightlike; angle undefined")]
    Lightlike,

    #[error("branching point: A(theta)+C(theta) = {sum:e}, output angle undetermined")]
    BranchingPoint { sum: f64 },

    #[error("output direction is lightlike (|tanh(psi/2)| = 1)")]
    LightlikeOutput,

    #[error("argument {value} outside the domain of {what}")]
    Domain { what: &'static str, value: f64 },

    #[error("coupler direction is timelike or lightlike (ratio {ratio})")]
    TimelikeCoupler { ratio: f64 },

    #[error("degenerate denominator {0:e} in coupler angle")]
    DegenerateDenominator(f64),

    #[error("coupler point leg is degenerate or not spacelike (squared length {0})")]
    DegenerateLeg(f64),

    #[error("sign pattern of T parameters is not covered by the classification")]
    UnclassifiedSignPattern,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
