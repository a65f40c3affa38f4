//! Relative polar ideals, Lê cycle degrees and Lê numbers of polynomial
//! hypersurface germs, and the assembly of global (projective) Lê class
//! degrees for projective hypersurfaces.
//!
//! The constructions are Massey's: the critical scheme `Σ(h)` of the germ,
//! the gap sheaves `Γ^k = V(∂h/∂z_k, ..., ∂h/∂z_n) / Σ(h)` realized as
//! ideal saturations, the cycles `Λ^k = [Γ^{k+1} ∩ V(∂h/∂z_k)] − [Γ^k]`
//! and their local intersection numbers `λ^k` against generic coordinate
//! slices. Genericity of the coordinate frame is certified, not assumed:
//! every accepted result passes expected-dimension checks, origin-isolation
//! checks for the slices, and must be reproduced by an independently drawn
//! random frame.

mod analysis;
mod error;
mod projective;
mod rng;

pub use analysis::{
    critical_ideal, euler_char_milnor_fiber, le_analysis, polar_ideal, AnalysisCaps,
    CertificateCheck, GenericityCertificate, GermInput, LeAnalysis, LeData, PolarData,
    PolarStratum,
};
pub use error::LeError;
pub use projective::{projective_le_classes, ProjectiveLe};
pub use rng::{random_unimodular, SplitMix64};
