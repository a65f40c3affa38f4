use crate::ring::same_ring;
use crate::{Monomial, MonomialOrder, PolyError, Rational, RingRef, SquareMatrix};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A sparse multivariate polynomial with rational coefficients.
///
/// Stored terms never have zero coefficients; the term map is keyed by the
/// exponent vector so equality and iteration order are canonical regardless
/// of the monomial order in use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: RingRef,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn constant(ring: &RingRef, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn variable(ring: &RingRef, i: usize) -> Result<Self, PolyError> {
        if i >= ring.nvars() {
            return Err(PolyError::IndexOutOfRange {
                index: i,
                nvars: ring.nvars(),
            });
        }
        Ok(Polynomial::from_term(
            ring,
            Monomial::var(ring.nvars(), i),
            Rational::one(),
        ))
    }

    pub fn from_term(ring: &RingRef, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms(
        ring: &RingRef,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars()))
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// Largest term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.nvars(), self.nvars(), "monomial length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, q)| (m.clone(), q * c)).collect(),
        }
    }

    /// `self + c * m * g`, the basic reduction step used by division.
    pub fn add_scaled_term(&self, g: &Polynomial, m: &Monomial, c: &Rational) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled_assign(g, m, c);
        out
    }

    /// In-place `self += c * m * g`.
    pub fn add_scaled_assign(&mut self, g: &Polynomial, m: &Monomial, c: &Rational) {
        for (gm, gc) in g.terms.iter() {
            self.add_term(gm.mul(m), gc * c);
        }
    }

    /// Coefficients scaled so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = Rational::one() / lc.clone();
                self.scaled(&inv)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Formal partial derivative with respect to variable `var_index`.
    pub fn partial_derivative(&self, var_index: usize) -> Result<Polynomial, PolyError> {
        if var_index >= self.nvars() {
            return Err(PolyError::IndexOutOfRange {
                index: var_index,
                nvars: self.nvars(),
            });
        }
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in self.terms() {
            let e = m.exponent(var_index);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var_index] -= 1;
            out.add_term(Monomial::new(exps), c * crate::rat(e as i64));
        }
        Ok(out)
    }

    /// `f(A z)`: compose with the linear substitution `z_i -> sum_j a_{ij} z_j`.
    /// The matrix must be square of size `nvars` and invertible.
    pub fn linear_change(&self, matrix: &SquareMatrix) -> Result<Polynomial, PolyError> {
        let n = self.nvars();
        if matrix.size() != n {
            return Err(PolyError::IndexOutOfRange {
                index: matrix.size(),
                nvars: n,
            });
        }
        if !matrix.is_invertible() {
            return Err(PolyError::SingularMatrix);
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                let mut img = Polynomial::zero(&self.ring);
                for j in 0..n {
                    let a = matrix.get(i, j);
                    if !a.is_zero() {
                        img.add_term(Monomial::var(n, j), a.clone());
                    }
                }
                img
            })
            .collect();
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in self.terms() {
            let mut term = Polynomial::constant(&self.ring, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    term = &term * &img.pow(e);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Homogenize with a fresh variable appended at the end of the ring.
    pub fn homogenize(&self, new_var: &str) -> Result<Polynomial, PolyError> {
        let ring = self.ring.append_var(new_var)?;
        let d = self.total_degree();
        let mut out = Polynomial::zero(&ring);
        for (m, c) in self.terms() {
            let pad = (d - m.degree()) as u32;
            out.add_term(m.insert_var(self.nvars(), pad), c.clone());
        }
        Ok(out)
    }

    /// Set variable `var_index` to 1 and drop it from the ring.
    /// Requires a homogeneous input.
    pub fn dehomogenize(&self, var_index: usize) -> Result<Polynomial, PolyError> {
        if var_index >= self.nvars() {
            return Err(PolyError::IndexOutOfRange {
                index: var_index,
                nvars: self.nvars(),
            });
        }
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        let ring = self.ring.remove_var(var_index);
        let mut out = Polynomial::zero(&ring);
        for (m, c) in self.terms() {
            out.add_term(m.remove_var(var_index), c.clone());
        }
        Ok(out)
    }

    /// The same exponent vectors read in another ring of equal arity.
    pub fn with_ring(&self, ring: &RingRef) -> Polynomial {
        assert_eq!(ring.nvars(), self.nvars(), "ring arity mismatch");
        Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        }
    }

    fn assert_compatible(&self, other: &Polynomial) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials from different rings: {} vs {}",
            self.ring,
            other.ring
        );
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut sorted: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        sorted.sort_by(|(a, _), (b, _)| self.ring.order().cmp(b, a));
        for (i, (m, c)) in sorted.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = abs.is_one();
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                if !coeff_is_one {
                    write!(f, "{}*", format_rational(&abs))?;
                }
                let mut first = true;
                for (j, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "{}", self.ring.var_name(j))?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `p/q` with the denominator omitted when it is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
