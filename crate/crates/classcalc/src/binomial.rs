use polyring::Integer;
use num_traits::{One, Zero};

/// Binomial coefficient in the combinatorial convention:
/// zero for `k < 0`, zero for `k > n >= 0`, and for negative `n` only the
/// `k = 0` value survives (`binom(-1, 0) = 1`, `binom(-1, k) = 0` for
/// `k >= 1`). The polynomial extension `binom(-1, k) = (-1)^k` is
/// deliberately not used; the inversion formulas pin the combinatorial one.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    if n < 0 {
        return if k == 0 {
            Integer::one()
        } else {
            Integer::zero()
        };
    }
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut out = Integer::one();
    for i in 0..k {
        out = out * Integer::from(n - i) / Integer::from(i + 1);
    }
    out
}
