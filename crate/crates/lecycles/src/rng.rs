use polyring::SquareMatrix;

/// Tiny deterministic generator (splitmix64). Reports are required to be
/// byte-identical for a fixed seed across builds, so the stream is pinned
/// here rather than borrowed from an external crate.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform-ish integer in `[-bound, bound]` excluding zero.
    pub fn nonzero_in(&mut self, bound: i64) -> i64 {
        debug_assert!(bound >= 1);
        let magnitude = 1 + self.below(bound as u64) as i64;
        if self.below(2) == 0 {
            magnitude
        } else {
            -magnitude
        }
    }
}

/// A random integer matrix of determinant ±1: a permutation followed by a
/// bounded number of shear rows. Entries stay small for small bounds, which
/// keeps the transformed polynomials exact and compact.
pub fn random_unimodular(rng: &mut SplitMix64, n: usize, bound: i64) -> SquareMatrix {
    if n < 2 {
        return SquareMatrix::identity(n);
    }
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();

    // random permutation (Fisher-Yates)
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        rows.swap(i, j);
    }
    // shears: row_i += c * row_j, determinant unchanged
    let shears = 2 * n;
    for _ in 0..shears {
        let i = rng.below(n as u64) as usize;
        let mut j = rng.below(n as u64) as usize;
        if i == j {
            j = (j + 1) % n;
        }
        let c = rng.nonzero_in(bound);
        for col in 0..n {
            rows[i][col] += c * rows[j][col];
        }
    }
    SquareMatrix::from_integer_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyring::rat;

    #[test]
    fn stream_is_deterministic() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..16 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn unimodular_matrices_have_unit_determinant() {
        let mut rng = SplitMix64::new(42);
        for n in 2..=5 {
            for bound in 1..=3 {
                let m = random_unimodular(&mut rng, n, bound);
                let det = m.det();
                assert!(
                    det == rat(1) || det == rat(-1),
                    "determinant {det} is not a unit"
                );
            }
        }
    }
}
