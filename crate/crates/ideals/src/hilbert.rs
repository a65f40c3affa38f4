//! Hilbert-series data for leading-term ideals: Krull dimension, degree,
//! and vector-space dimensions of zero-dimensional quotients.
//!
//! Everything is derived from the numerator `K(t)` of the Hilbert series
//! `K(t)/(1-t)^m` of the quotient by the leading-term ideal. Writing
//! `K(t) = (1-t)^c Q(t)` with `Q(1) != 0`, the cone dimension is `m - c`
//! and the multiplicity is `Q(1)`. For affine input the degree of the
//! projective closure equals the same `Q(1)`: homogenizing a degrevlex
//! Gröbner basis yields a basis of the closure ideal with unchanged leading
//! terms, and the extra variable shifts `m` by one without touching `K`.

use crate::{Ideal, IdealError, Limits};
use num_traits::{One, Zero};
use polyring::{Integer, Monomial, MonomialOrder};

/// Dimension and degree of a subscheme, affine or projective depending on
/// the constructor used. `dimension = -1` with `degree = 0` means empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertData {
    pub dimension: i64,
    pub degree: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<u64> {
        match self {
            QuotientDim::Finite(n) => Some(n),
            QuotientDim::Infinite => None,
        }
    }
}

/// Hilbert data with the convention keyed to the input: homogeneous
/// generators are read projectively (ambient `P^{m-1}`), anything else as an
/// affine subscheme of `A^m` whose degree is that of its projective closure.
/// A homogeneous ideal whose projective locus is empty (a fat point at the
/// cone vertex) is reported with its affine data, which is the informative
/// reading and what the slice computations expect.
pub fn hilbert_data(ideal: &Ideal, limits: &Limits) -> Result<HilbertData, IdealError> {
    let homogeneous = !ideal.is_zero_ideal()
        && ideal.generators().iter().all(|g| g.is_homogeneous());
    if homogeneous {
        let projective = hilbert_data_projective(ideal, limits)?;
        if projective.dimension >= 0 {
            return Ok(projective);
        }
        if ideal.is_unit(limits)? {
            return Ok(projective);
        }
    }
    hilbert_data_affine(ideal, limits)
}

/// Krull dimension of `V(I)` in affine space and the degree of its
/// projective closure. The unit ideal reports `(-1, 0)`; the zero ideal is
/// all of `A^m`.
pub fn hilbert_data_affine(ideal: &Ideal, limits: &Limits) -> Result<HilbertData, IdealError> {
    let (cone_dim, multiplicity) = cone_data(ideal, limits)?;
    Ok(match cone_dim {
        None => HilbertData {
            dimension: -1,
            degree: 0,
        },
        Some(d) => HilbertData {
            dimension: d as i64,
            degree: multiplicity,
        },
    })
}

/// Projective dimension and degree of `V(I)` for a homogeneous ideal in the
/// coordinate ring of `P^{m-1}`. Empty schemes report `(-1, 0)`.
pub fn hilbert_data_projective(ideal: &Ideal, limits: &Limits) -> Result<HilbertData, IdealError> {
    let (cone_dim, multiplicity) = cone_data(ideal, limits)?;
    Ok(match cone_dim {
        None | Some(0) => HilbertData {
            dimension: -1,
            degree: 0,
        },
        Some(d) => HilbertData {
            dimension: d as i64 - 1,
            degree: multiplicity,
        },
    })
}

/// Dimension of the quotient ring as a `Q`-vector space; `Infinite` exactly
/// when the Krull dimension is at least 1.
pub fn quotient_dimension(ideal: &Ideal, limits: &Limits) -> Result<QuotientDim, IdealError> {
    let (cone_dim, multiplicity) = cone_data(ideal, limits)?;
    Ok(match cone_dim {
        None | Some(0) => QuotientDim::Finite(match cone_dim {
            None => 0,
            Some(_) => multiplicity,
        }),
        Some(_) => QuotientDim::Infinite,
    })
}

/// (Krull dimension of the cone `R/LT(I)`, multiplicity `Q(1)`).
/// `None` dimension marks the unit ideal.
fn cone_data(ideal: &Ideal, limits: &Limits) -> Result<(Option<usize>, u64), IdealError> {
    let m = ideal.ring().nvars();
    let gb = ideal.gb_for(&MonomialOrder::DegRevLex, limits)?;
    if gb.is_unit() {
        return Ok((None, 0));
    }
    let lead = minimal_monomials(gb.leading_monomials());
    let mut numerator = hilbert_numerator(&lead);
    // strip (1-t) factors
    let mut c = 0usize;
    while c < m && eval_at_one(&numerator).is_zero() {
        numerator = divide_by_one_minus_t(&numerator);
        c += 1;
    }
    let q1 = eval_at_one(&numerator);
    debug_assert!(q1 > Integer::zero(), "multiplicity must be positive");
    let degree = u64::try_from(q1).expect("degree fits in u64");
    Ok((Some(m - c), degree))
}

fn minimal_monomials(mut monos: Vec<Monomial>) -> Vec<Monomial> {
    monos.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in monos {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator of the Hilbert series of `R/(monomial ideal)` over `(1-t)^m`,
/// by the colon recursion `N(G + m) = N(G) - t^{|m|} N(G : m)`.
fn hilbert_numerator(gens: &[Monomial]) -> Vec<Integer> {
    if gens.is_empty() {
        return vec![Integer::one()];
    }
    if gens.len() == 1 {
        if gens[0].is_one() {
            return vec![Integer::zero()];
        }
        let d = gens[0].degree() as usize;
        let mut k = vec![Integer::zero(); d + 1];
        k[0] = Integer::one();
        k[d] = -Integer::one();
        return k;
    }
    let (last, rest) = gens.split_last().expect("nonempty");
    let colon: Vec<Monomial> = minimal_monomials(
        rest.iter()
            .map(|g| last.gcd(g).try_div(g).expect("gcd divides"))
            .collect(),
    );
    let a = hilbert_numerator(rest);
    let b = hilbert_numerator(&colon);
    let shift = last.degree() as usize;
    let mut out = vec![Integer::zero(); a.len().max(b.len() + shift)];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i + shift] -= v;
    }
    while out.len() > 1 && out.last().map(|v| v.is_zero()).unwrap_or(false) {
        out.pop();
    }
    out
}

fn eval_at_one(poly: &[Integer]) -> Integer {
    poly.iter().sum()
}

/// Exact division by `(1-t)`: prefix sums.
fn divide_by_one_minus_t(poly: &[Integer]) -> Vec<Integer> {
    let mut out = Vec::with_capacity(poly.len().saturating_sub(1));
    let mut acc = Integer::zero();
    for c in &poly[..poly.len().saturating_sub(1)] {
        acc += c;
        out.push(acc.clone());
    }
    if out.is_empty() {
        out.push(Integer::zero());
    }
    out
}
