use crate::{quotient_dimension, saturate, Ideal, IdealError, Limits, QuotientDim};
use num_traits::Zero;

/// True when the origin lies in `V(I)`, i.e. every generator vanishes there.
pub fn origin_in_zero_set(ideal: &Ideal) -> bool {
    ideal
        .generators()
        .iter()
        .all(|g| g.constant_term().is_zero())
}

/// True when the origin is an isolated point of `V(I)` or not in it at all:
/// saturating away the origin must leave nothing through it.
pub fn origin_isolated_or_absent(ideal: &Ideal, limits: &Limits) -> Result<bool, IdealError> {
    if !origin_in_zero_set(ideal) {
        return Ok(true);
    }
    let m = Ideal::maximal_at_origin(ideal.ring());
    let elsewhere = saturate(ideal, &m, limits)?;
    Ok(elsewhere.is_unit(limits)? || !origin_in_zero_set(&elsewhere))
}

/// Length of the local ring at the origin of `R/I`: the intersection
/// multiplicity the Lê calculus charges to the origin.
///
/// Requires the origin to be an isolated point of `V(I)` (or absent, which
/// gives 0). The length is computed by cutting with `(x_0^a, ..., x_n^a)`
/// and doubling `a` until two consecutive counts agree; the pure-power
/// truncations are cofinal with the powers of the maximal ideal, so the
/// stabilized value is the length of the `m`-primary part.
pub fn local_multiplicity_at_origin(ideal: &Ideal, limits: &Limits) -> Result<u64, IdealError> {
    let ring = ideal.ring();

    // a generator with nonzero constant term means V(I) misses the origin
    if !origin_in_zero_set(ideal) {
        return Ok(0);
    }
    if ideal.is_unit(limits)? {
        return Ok(0);
    }
    if !origin_isolated_or_absent(ideal, limits)? {
        return Err(IdealError::OriginNotIsolated);
    }

    let mut previous: Option<u64> = None;
    let mut a: u32 = 2;
    while a <= limits.max_truncation {
        let truncated = ideal.sum(&Ideal::pure_powers(ring, a));
        let count = match quotient_dimension(&truncated, limits)? {
            QuotientDim::Finite(n) => n,
            QuotientDim::Infinite => unreachable!("truncated ideal contains pure powers"),
        };
        if previous == Some(count) {
            return Ok(count);
        }
        previous = Some(count);
        a = a.saturating_mul(2);
    }
    Err(IdealError::ResourceCap {
        what: "local multiplicity truncation exponent",
        limit: limits.max_truncation as u64,
    })
}
