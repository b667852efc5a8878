use thiserror::Error;

use crate::exact::Radicand;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand mismatch: {left} vs {right}")]
    RadicandMismatch { left: Radicand, right: Radicand },

    #[error("division by zero")]
    DivisionByZero,

    #[error("phase is not normalized: sin^2 + cos^2 = {0}")]
    PhaseNotNormalized(String),

    #[error("requested order {requested} exceeds truncation order {available}")]
    TruncationExceeded { requested: usize, available: usize },

    #[error("series has zero constant term and cannot be inverted")]
    SeriesNotInvertible,

    #[error("evaluation at zero with negative exponents present")]
    EvaluationAtZero,

    #[error("insufficient moments: need index {needed}, have {available} entries")]
    InsufficientMoments { needed: usize, available: usize },

    #[error("{what} is not an integer: {value}")]
    NonInteger { what: String, value: String },

    #[error("{what} has an irrational or imaginary residue: {value}")]
    IrrationalResidue { what: String, value: String },

    #[error("hypergeometric series does not terminate")]
    NotTerminating,

    #[error("lower parameter {param} reaches a pole at term {k} before termination")]
    LowerParameterPole { param: String, k: usize },

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: String },

    #[error("nonzero residual in {what}: {detail}")]
    NonzeroResidual { what: String, detail: String },

    #[error("zero pivot in {0}")]
    ZeroPivot(String),

    #[error("oracle size {n} exceeds limit {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("unsupported weight x = {0}")]
    UnsupportedWeight(u32),

    #[error("{0} is not a polynomial in the requested basis")]
    NotPolynomial(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: impl ToString) -> Self {
        Error::OutOfRange {
            what,
            value: value.to_string(),
        }
    }
}
