//! Gröbner-basis engine and the ideal operations the gap-sheaf calculus
//! reduces to: quotient, saturation, elimination, Hilbert dimension and
//! degree, vector-space dimension of zero-dimensional quotients, and the
//! length of the local ring at the origin.
//!
//! Everything is exact over `Q`. Buchberger's algorithm with the product
//! and chain criteria is the only basis algorithm; the corpus this engine
//! serves is small, so auditability wins over speed.

mod error;
mod gb;
mod hilbert;
mod ideal;
mod local;

pub use error::{IdealError, Limits};
pub use gb::{buchberger, normal_form, GroebnerBasis};
pub use hilbert::{
    hilbert_data, hilbert_data_affine, hilbert_data_projective, quotient_dimension, HilbertData,
    QuotientDim,
};
pub use ideal::{
    eliminate, exact_div, ideal_quotient, ideal_quotient_ideal, intersect, saturate,
    saturate_by_poly_rabinowitsch, Ideal,
};
pub use local::{local_multiplicity_at_origin, origin_in_zero_set, origin_isolated_or_absent};
