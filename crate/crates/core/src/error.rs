use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("denominator {0} is not a product of univariate factors")]
    UnsupportedDenominator(String),

    #[error("series variable {var} appears with negative exponent in {poly}")]
    NegativeSeriesExponent { var: String, poly: String },

    #[error("constant term of the denominator in {0} is zero")]
    ZeroConstantTerm(String),

    #[error("constant term {0} of the denominator is not a unit")]
    NonUnitConstantTerm(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("m = {0} is odd: the two parameters must coincide")]
    ParametersMustCoincide(u32),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("generator `{0}` is not in the domain of the map")]
    UnmappedGenerator(String),

    #[error("relation {index} ({relation}) has sides of different sign")]
    CharacterMismatch { index: usize, relation: String },

    #[error("unsupported model: {0}")]
    UnsupportedModel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
