use std::fmt;

/// Resource limits for the engine. Exceeding a cap is reported as
/// [`IdealError::ResourceCap`], distinct from any mathematical failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of S-pairs Buchberger may reduce.
    pub max_pairs: usize,
    /// Maximum number of quotient rounds in a saturation.
    pub max_sat_rounds: usize,
    /// Power cap for the local-multiplicity truncation loop.
    pub max_truncation: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 50_000,
            max_sat_rounds: 64,
            max_truncation: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    /// A configured cap was exceeded before the computation finished.
    ResourceCap { what: &'static str, limit: u64 },
    /// The origin is not an isolated point of the zero set, so the local
    /// multiplicity is not a finite length. For the Lê machinery this means
    /// an improper intersection: choose more generic coordinates.
    OriginNotIsolated,
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::ResourceCap { what, limit } => {
                write!(f, "resource cap exceeded: {what} (limit {limit})")
            }
            IdealError::OriginNotIsolated => write!(
                f,
                "origin is not isolated in the zero set: improper intersection, \
                 choose more generic coordinates"
            ),
        }
    }
}

impl std::error::Error for IdealError {}
