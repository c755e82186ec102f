use thiserror::Error;

/// Errors raised by the algebraic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeoError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown coordinate `{0}`")]
    UnknownCoordinate(String),
    #[error("pole at evaluation point")]
    PoleAtPoint,
    #[error("invalid chart: {0}")]
    InvalidChart(String),
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("chart mismatch: dimension {left} vs {right}")]
    ChartMismatch { left: usize, right: usize },
    #[error("degree error: {0}")]
    DegreeError(String),
    #[error("sub-bundle is not complexified")]
    NotComplex,
    #[error("not an almost complex endomorphism: {0}")]
    NotAlmostComplex(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("chart dimension {0} is even; an odd dimension 2n+1 is required")]
    EvenDimension(usize),
    #[error("flat map is singular: {0}")]
    SingularFlat(String),
    #[error("Theta map is singular: {0}")]
    SingularTheta(String),
    #[error("not an almost contact structure: {0}")]
    NotAlmostContact(String),
    #[error("scalar syntax error at column {col}: {msg}")]
    ScalarSyntax { col: usize, msg: String },
}

pub type Result<T, E = GeoError> = std::result::Result<T, E>;

pub(crate) fn same_dim(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(GeoError::ChartMismatch { left, right })
    }
}
