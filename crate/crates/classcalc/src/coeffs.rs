use crate::binomial::binomial;
use crate::vector::BundleDegree;
use num_traits::One;
use polyring::{Integer, Rational};

/// `C_{k,s}(d)`, the coefficient of `c_1(L)^s ∩ Λ_{k+s}` in the
/// Milnor-from-Lê expansion:
///
/// ```text
/// C_{k,s}(d) = Σ_{l=0}^{s} (-1)^l binom(l+k-1, l)
///              ((d-1)^{s+1-l} + (-1)^{s-l}) / d^{s+1}
/// ```
///
/// with `binom(-1, 0) = 1` and `0^0 = 1` so the `d = 1` case is defined.
pub fn coeff_c(k: u32, s: u32, d: &BundleDegree) -> Rational {
    let dd = Integer::from(d.get());
    let dm1 = Integer::from(d.get() as i64 - 1);
    let mut numerator = Integer::from(0);
    for l in 0..=s {
        let b = binomial(l as i64 + k as i64 - 1, l as i64);
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let alt = if (s - l).is_multiple_of(2) { 1 } else { -1 };
        let power = int_pow(&dm1, s + 1 - l);
        numerator += Integer::from(sign) * b * (power + Integer::from(alt));
    }
    Rational::new(numerator, int_pow(&dd, s + 1))
}

/// `B_{k,s}(d)`, the coefficient of `c_1(L)^s ∩ M_{k+s}` in the inverse
/// Lê-from-Milnor expansion:
///
/// ```text
/// B_{k,s}(d) = Σ_{l=0}^{s} (-1)^{s-l} binom(k+s, k+l) binom(k+1+l, k+1)
///              ((d-1)/d)^l
/// ```
pub fn coeff_b(k: u32, s: u32, d: &BundleDegree) -> Rational {
    let w = d.ratio_dm1_over_d();
    let mut out = Rational::new(Integer::from(0), Integer::one());
    for l in 0..=s {
        let b1 = binomial(k as i64 + s as i64, k as i64 + l as i64);
        let b2 = binomial(k as i64 + 1 + l as i64, k as i64 + 1);
        let sign = if (s - l).is_multiple_of(2) { 1 } else { -1 };
        let weight = rational_pow(&w, l);
        out += Rational::from_integer(Integer::from(sign) * b1 * b2) * weight;
    }
    out
}

/// `base^exp` with `0^0 = 1`.
fn int_pow(base: &Integer, exp: u32) -> Integer {
    let mut out = Integer::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

/// `base^exp` with `0^0 = 1`.
pub(crate) fn rational_pow(base: &Rational, exp: u32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}
