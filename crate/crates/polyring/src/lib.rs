//! Sparse multivariate polynomials over exact rational coefficients.
//!
//! The coefficient field is `Q`, represented by [`Rational`]
//! (arbitrary-precision, always in lowest terms, positive denominator).
//! Polynomials are stored sparsely as a map from exponent vectors to
//! coefficients; monomial orders (lex, degrevlex, block elimination) are
//! separate values so the same polynomial can be read under different
//! orders.

mod error;
mod matrix;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;

pub use error::PolyError;
pub use matrix::SquareMatrix;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use poly::{format_rational, Polynomial};
pub use ring::{same_ring, RingRef, RingSpec};

/// Exact rational scalar used everywhere in the workbench.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// Shorthand for `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}
