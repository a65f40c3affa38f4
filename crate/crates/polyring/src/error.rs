use std::fmt;

/// Errors produced by ring construction, parsing and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Malformed input text; `pos` is a byte offset into the source.
    Parse { pos: usize, message: String },
    /// An identifier that is not a variable of the ring.
    UnknownVariable { pos: usize, name: String },
    /// A coefficient with denominator zero.
    ZeroDenominator { pos: usize },
    /// Variable index outside `0..nvars`.
    IndexOutOfRange { index: usize, nvars: usize },
    /// A linear change of coordinates with determinant zero.
    SingularMatrix,
    /// Operation that requires a homogeneous polynomial.
    NotHomogeneous,
    /// Ring construction with a repeated or empty variable name.
    BadVariableName(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::Parse { pos, message } => write!(f, "parse error at byte {pos}: {message}"),
            PolyError::UnknownVariable { pos, name } => {
                write!(f, "unknown variable `{name}` at byte {pos}")
            }
            PolyError::ZeroDenominator { pos } => {
                write!(f, "zero denominator in coefficient at byte {pos}")
            }
            PolyError::IndexOutOfRange { index, nvars } => {
                write!(f, "variable index {index} out of range (ring has {nvars} variables)")
            }
            PolyError::SingularMatrix => write!(f, "coordinate matrix is singular"),
            PolyError::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            PolyError::BadVariableName(name) => {
                write!(f, "bad or duplicate variable name `{name}`")
            }
        }
    }
}

impl std::error::Error for PolyError {}
