use crate::ClassError;
use num_traits::Zero;
use polyring::Rational;
use std::fmt;

/// Multiplicity `d` of the line bundle `O(d)` whose first Chern class is
/// `d` times the hyperplane class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BundleDegree(u32);

impl BundleDegree {
    pub fn new(d: u32) -> Result<Self, ClassError> {
        if d == 0 {
            return Err(ClassError::BadBundleDegree);
        }
        Ok(BundleDegree(d))
    }

    pub fn get(&self) -> u32 {
        self.0
    }

    /// `d^s` as a rational.
    pub fn pow(&self, s: u32) -> Rational {
        polyring::rat(self.0 as i64).pow(s as i32)
    }

    /// `(d-1)/d`, the weight in the global Lê class expansion.
    pub fn ratio_dm1_over_d(&self) -> Rational {
        polyring::ratio(self.0 as i64 - 1, self.0 as i64)
    }
}

impl fmt::Display for BundleDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Degrees `a_0..a_N` of the dimension-graded pieces of a class in `P^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVector {
    ambient: usize,
    coeffs: Vec<Rational>,
}

impl ClassVector {
    /// The zero class in `P^ambient`.
    pub fn zero(ambient: usize) -> Self {
        ClassVector {
            ambient,
            coeffs: vec![Rational::zero(); ambient + 1],
        }
    }

    /// A class from low-dimension-first coefficients; missing entries are 0.
    pub fn from_coeffs(
        ambient: usize,
        coeffs: impl IntoIterator<Item = Rational>,
    ) -> Result<Self, ClassError> {
        let coeffs: Vec<Rational> = coeffs.into_iter().collect();
        if coeffs.len() > ambient + 1 {
            return Err(ClassError::AmbientMismatch {
                expected: ambient,
                got: coeffs.len() - 1,
            });
        }
        let mut v = ClassVector::zero(ambient);
        for (k, c) in coeffs.into_iter().enumerate() {
            v.coeffs[k] = c;
        }
        Ok(v)
    }

    /// Integer shorthand used by tests and fixtures.
    pub fn from_ints(ambient: usize, coeffs: &[i64]) -> Self {
        ClassVector::from_coeffs(ambient, coeffs.iter().map(|&c| polyring::rat(c)))
            .expect("coefficient list fits the ambient dimension")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Degree of the dimension-`k` piece; zero beyond the ambient dimension.
    pub fn get(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, k: usize, value: Rational) {
        self.coeffs[k] = value;
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Largest dimension with a nonzero coefficient.
    pub fn support_dim(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// True when every coefficient above dimension `r` vanishes
    /// (`r < 0` requires the zero vector).
    pub fn supported_within(&self, r: i64) -> bool {
        match self.support_dim() {
            None => true,
            Some(s) => r >= 0 && (s as i64) <= r,
        }
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", polyring::format_rational(c))?;
        }
        write!(f, ")")
    }
}
