use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials live in different rings ({left} vs {right} variables)")]
    RingMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("syntax error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown variable '{name}' at offset {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("zero denominator in rational literal at offset {position}")]
    ZeroDenominator { position: usize },
    #[error("a ring needs at least one variable")]
    EmptyRing,
    #[error("invalid variable name '{0}'")]
    InvalidVariableName(String),
    #[error("variable '{0}' declared twice")]
    DuplicateVariable(String),
    #[error("unknown monomial order '{0}'")]
    UnknownOrder(String),
    #[error("module elements have inconsistent ranks")]
    RankMismatch,
    #[error("ideal contains a unit at the origin")]
    UnitIdeal,
    #[error("{0}")]
    InvalidInput(String),
    #[error("the origin does not lie on the divisor (h(0) = {0})")]
    OriginNotOnDivisor(String),
    #[error("equation is not reduced: {0} divides h and all its partials")]
    NotReduced(String),
    #[error("product of the factors differs from h")]
    FactorMismatch,
    #[error("divisor is not free at the origin")]
    NotFree,
    #[error("form is not logarithmic along the divisor: {0}")]
    NotLogarithmic(String),
    #[error("component {0} is not smooth at the origin")]
    ComponentNotSmooth(String),
    #[error("no coordinate j makes the j-th partial a nonzerodivisor on the divisor; apply a generic linear coordinate change first")]
    NoAdmissibleIndex,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
