use ideals::IdealError;
use polyring::PolyError;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeError {
    /// The input is not a germ at the origin (zero, constant, or h(0) != 0).
    NotAGerm(&'static str),
    /// A projective input with a repeated factor.
    NonReducedInput,
    /// Polar index outside `1..=n`.
    BadPolarIndex { k: usize, nvars: usize },
    /// No coordinate frame passed the genericity certificate.
    GenericityNotAchieved { attempts: usize, last_failure: String },
    /// Resource caps or other engine-level failures.
    Engine(IdealError),
    /// Malformed polynomial-level input.
    Poly(PolyError),
}

impl fmt::Display for LeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeError::NotAGerm(why) => write!(f, "not a germ at the origin: {why}"),
            LeError::NonReducedInput => {
                write!(f, "input hypersurface is not reduced (repeated factor)")
            }
            LeError::BadPolarIndex { k, nvars } => {
                write!(f, "polar index {k} out of range for {nvars} variables")
            }
            LeError::GenericityNotAchieved { attempts, last_failure } => write!(
                f,
                "genericity not achieved after {attempts} attempts (last failing check: {last_failure})"
            ),
            LeError::Engine(e) => write!(f, "{e}"),
            LeError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LeError {}

impl From<IdealError> for LeError {
    fn from(e: IdealError) -> Self {
        LeError::Engine(e)
    }
}

impl From<PolyError> for LeError {
    fn from(e: PolyError) -> Self {
        LeError::Poly(e)
    }
}
