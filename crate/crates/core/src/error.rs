use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the spline, quadrature, differentiation and root routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree {0} is not supported (expected 2, 3, 4 or 5)")]
    UnsupportedDegree(usize),

    #[error("n = {n} is too small for degree {degree}: at least {min} subintervals are required")]
    TooFewIntervals { degree: usize, n: usize, min: usize },

    #[error("invalid interval [{a}, {b}]: need finite a < b")]
    InvalidInterval { a: f64, b: f64 },

    #[error("index {index} outside {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("x = {x} lies outside [{a}, {b}]")]
    OutOfDomain { x: f64, a: f64, b: f64 },

    #[error("derivative order {order} exceeds the degree {degree}")]
    DerivativeOrder { order: usize, degree: usize },

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{0}")]
    Precondition(String),

    #[error("unknown function `{0}`")]
    UnknownFunction(String),
}
