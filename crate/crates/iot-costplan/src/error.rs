//! Crate-wide error type.

use std::fmt;

/// Alias for `std::result::Result` with the crate error type.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by model evaluation, solvers, and I/O.
///
/// Solver infeasibilities carry the attainable range so callers can report
/// how far a target misses, not just that it missed.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter lies outside the evaluable domain of an operation.
    Domain(String),
    /// Root bracketing failed: f(lo) and f(hi) have the same sign.
    NoBracket { lo: f64, hi: f64 },
    /// An iterative routine exhausted its iteration budget.
    NoConvergence { what: &'static str, iterations: u32 },
    /// Sequence lengths disagree.
    LengthMismatch { left: usize, right: usize },
    /// Coefficient of determination is undefined: reference values are all identical.
    ZeroVariance,
    /// The operation is not defined for this distribution family.
    UnsupportedFamily { family: &'static str, op: &'static str },
    /// An energy target below the attainable floor.
    BelowFloor { target: f64, floor: f64 },
    /// An energy target above the attainable ceiling.
    AboveCeiling { target: f64, ceiling: f64 },
    /// No (volume, threshold) pair attains the requested energy variability.
    EnergyInfeasible {
        requested: f64,
        attainable_lo: f64,
        attainable_hi: f64,
    },
    /// A sweep was requested over an empty grid.
    EmptyGrid,
    /// An input held no usable rows.
    EmptyInput { what: &'static str },
    /// Configuration failed validation.
    Config(String),
    /// File I/O failure.
    Io(String),
    /// Input file failed to parse; `row` is 1-based.
    Parse { row: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NoBracket { lo, hi } => {
                write!(f, "no sign change on bracket [{lo:e}, {hi:e}]")
            }
            Error::NoConvergence { what, iterations } => {
                write!(f, "{what} did not converge within {iterations} iterations")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "sequence length mismatch: {left} vs {right}")
            }
            Error::ZeroVariance => {
                write!(f, "reference values are all identical; r-squared undefined")
            }
            Error::UnsupportedFamily { family, op } => {
                write!(f, "{op} is not defined for the {family} family")
            }
            Error::BelowFloor { target, floor } => {
                write!(f, "target {target:e} is below the attainable floor {floor:e}")
            }
            Error::AboveCeiling { target, ceiling } => {
                write!(f, "target {target:e} is above the attainable ceiling {ceiling:e}")
            }
            Error::EnergyInfeasible {
                requested,
                attainable_lo,
                attainable_hi,
            } => write!(
                f,
                "energy variability target {requested:e} J^2 unattainable; \
                 attainable range is ({attainable_lo:e}, {attainable_hi:e}) J^2"
            ),
            Error::EmptyGrid => write!(f, "sweep grid is empty"),
            Error::EmptyInput { what } => write!(f, "{what} holds no data rows"),
            Error::Config(msg) => write!(f, "invalid configuration: {msg}"),
            Error::Io(msg) => write!(f, "i/o error: {msg}"),
            Error::Parse { row, message } => write!(f, "parse error at row {row}: {message}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
