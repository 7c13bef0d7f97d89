use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported root system {0:?}")]
    UnsupportedType(String),
    #[error("parameter function is not constant on conjugacy classes of simple roots: {0}")]
    NonInvariantParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("singular matrix")]
    Singular,
    #[error("degenerate line: {0}; perturb the direction")]
    DegenerateLine(String),
    #[error("family is identically degenerate (determinant vanishes)")]
    DegenerateFamily,
    #[error("family has a pole at t0 = {0}")]
    PoleAtPoint(String),
    #[error("module is not delta-stable: {0}")]
    NotDeltaStable(String),
    #[error("weight {0} is not regular dominant")]
    NotRegular(String),
    #[error("W-type {0} does not occur in the module")]
    AbsentType(String),
    #[error("no character table for {0}")]
    NoCharTable(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("parity violation: {0}")]
    Parity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
