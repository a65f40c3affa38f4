use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassError {
    /// Bundle degree must be a positive integer.
    BadBundleDegree,
    /// A coefficient list longer than the ambient dimension allows.
    AmbientMismatch { expected: usize, got: usize },
    /// Input class has nonzero coefficients above the declared support bound.
    SupportViolation { support: usize, bound: i64 },
    /// A stratum is missing a field the invoked transform needs.
    MissingField { stratum: String, field: &'static str },
    /// A closure parent that is not in the table.
    UnknownParent { stratum: String, parent: String },
    /// Closure relations incompatible with dimensions (or cyclic).
    ClosureNotPartialOrder { stratum: String, parent: String },
    /// Duplicate stratum id.
    DuplicateStratum(String),
    /// Polar degree list of the wrong length for the stratum dimension.
    PolarLengthMismatch { stratum: String, expected: usize, got: usize },
}

impl fmt::Display for ClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassError::BadBundleDegree => write!(f, "bundle degree must be >= 1"),
            ClassError::AmbientMismatch { expected, got } => write!(
                f,
                "class vector does not fit ambient dimension {expected} (got entries up to {got})"
            ),
            ClassError::SupportViolation { support, bound } => write!(
                f,
                "class vector has support in dimension {support}, above the bound {bound}"
            ),
            ClassError::MissingField { stratum, field } => {
                write!(f, "stratum `{stratum}` is missing required field `{field}`")
            }
            ClassError::UnknownParent { stratum, parent } => {
                write!(f, "stratum `{stratum}` lists unknown parent `{parent}`")
            }
            ClassError::ClosureNotPartialOrder { stratum, parent } => write!(
                f,
                "closure relation `{parent}` over `{stratum}` violates the dimension order"
            ),
            ClassError::DuplicateStratum(id) => write!(f, "duplicate stratum id `{id}`"),
            ClassError::PolarLengthMismatch {
                stratum,
                expected,
                got,
            } => write!(
                f,
                "stratum `{stratum}`: polar degree list must have length {expected}, got {got}"
            ),
        }
    }
}

impl std::error::Error for ClassError {}
