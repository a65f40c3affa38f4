use crate::Rational;
use num_traits::{One, Zero};

/// A dense square matrix over the rationals; just enough linear algebra for
/// exact coordinate changes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl SquareMatrix {
    pub fn identity(n: usize) -> Self {
        let mut m = SquareMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        };
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        SquareMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rat(v)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    /// Exact determinant by fraction-full Gaussian elimination.
    pub fn det(&self) -> Rational {
        let n = self.n;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
                Some(p) => p,
                None => return Rational::zero(),
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= p.clone();
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &p;
                for c in col..n {
                    let delta = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }
}
