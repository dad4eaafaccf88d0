use thiserror::Error;

/// Errors raised by the algebra, degree, arrangement and Legendre routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("unsupported variable count {nvars}: {reason}")]
    UnsupportedVariableCount { nvars: usize, reason: &'static str },
    #[error("both inputs are constant in the eliminated variable")]
    ConstantInEliminationVariable,
    #[error("expected a polynomial in two variables, got {0}")]
    NotBivariate(usize),
    #[error("degree precondition violated: {0}")]
    DegreePrecondition(String),
    #[error("polar system has a nonconstant fixed part {0}")]
    NonconstantFixedPart(String),
    #[error("no two agreeing trials after {attempts} attempts")]
    RetriesExhausted { attempts: usize },
    #[error("duplicate hyperplane at rows {0} and {1}")]
    DuplicateHyperplane(usize, usize),
    #[error("invalid hyperplane: {0}")]
    InvalidHyperplane(String),
    #[error("arrangement needs at least {required} hyperplanes, got {got}")]
    TooFewHyperplanes { required: usize, got: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("every sample hit a pole ({attempts} attempts)")]
    AllSamplesPoles { attempts: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
