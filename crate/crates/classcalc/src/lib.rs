//! Formal calculus of class vectors in the basis `{[P^k]}`.
//!
//! A class vector records the degrees of the dimension-`k` components of a
//! cycle class in `P^N` against generic linear subspaces. This module
//! implements the transforms between Lê classes, Milnor classes,
//! Mather/Schwartz-MacPherson classes, Fulton-Johnson classes and Aluffi
//! classes, together with the stratified Parusiński-Pragacz formula and the
//! combinatorial identities the inversion rests on. Everything is exact
//! rational arithmetic; there are no tolerances anywhere.

mod binomial;
mod coeffs;
mod error;
mod identities;
mod strata;
mod transforms;
mod vector;

pub use binomial::binomial;
pub use coeffs::{coeff_b, coeff_c};
pub use error::ClassError;
pub use identities::{identity_checks, IdentityReport};
pub use strata::{
    chi_from_strata, gamma_from_mu, pp_milnor, resolved_mu, top_milnor_class, Stratum,
    StratumTable,
};
pub use transforms::{
    aluffi_from_milnor, cap_c1, csm_from_fj_milnor, csm_from_polar, fj_degrees, le_from_milnor,
    mather_from_polar, milnor_from_le, milnor_from_le_legacy, milnor_from_le_projective,
};
pub use vector::{BundleDegree, ClassVector};
