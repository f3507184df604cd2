//! Error type shared by the algebra, basis and transform layers.

use std::fmt;

/// Errors reported by validated constructors and the transform engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// The supplied axis is not a complexified-quaternion root of -1.
    InvalidAxis,
    /// No candidate projection yielded a usable second basis direction.
    DegenerateBasis,
    /// The degenerate axis `I` was used with a signal that has a vector part.
    DegenerateAxisMisuse,
    /// A signal sample contained a NaN or infinite component.
    NonFiniteSample,
    /// Signals must hold at least one sample.
    EmptySignal,
    /// The flat sample buffer does not match the requested grid shape.
    ShapeMismatch {
        rows: usize,
        cols: usize,
        got: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidAxis => {
                write!(f, "axis is not a complexified-quaternion root of -1")
            }
            Error::DegenerateBasis => write!(
                f,
                "no usable orthonormal basis: every candidate projection has null semi-norm"
            ),
            Error::DegenerateAxisMisuse => write!(
                f,
                "degenerate axis I requires a signal with zero vector part"
            ),
            Error::NonFiniteSample => write!(f, "signal contains a non-finite component"),
            Error::EmptySignal => write!(f, "signal must contain at least one sample"),
            Error::ShapeMismatch { rows, cols, got } => {
                write!(f, "sample count {got} does not fill a {rows} x {cols} grid")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
