use crate::gb::{buchberger, normal_form, GroebnerBasis};
use crate::{IdealError, Limits};
use num_traits::One;
use polyring::{same_ring, Monomial, MonomialOrder, Polynomial, Rational, RingRef};
use std::sync::OnceLock;

/// An ideal given by generators, with a write-once cache for the Gröbner
/// basis under the ring's declared order. Zero generators are dropped on
/// construction.
#[derive(Debug)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    cached_gb: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cached_gb: self.cached_gb.clone(),
        }
    }
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: impl IntoIterator<Item = Polynomial>) -> Self {
        let gens: Vec<Polynomial> = gens
            .into_iter()
            .inspect(|g| assert!(same_ring(g.ring(), ring), "generator from another ring"))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
            cached_gb: OnceLock::new(),
        }
    }

    /// The zero ideal.
    pub fn zero(ring: &RingRef) -> Self {
        Ideal::new(ring, [])
    }

    /// The ideal of all variables (the maximal ideal at the origin).
    pub fn maximal_at_origin(ring: &RingRef) -> Self {
        let gens: Vec<Polynomial> = (0..ring.nvars())
            .map(|i| Polynomial::variable(ring, i).expect("index in range"))
            .collect();
        Ideal::new(ring, gens)
    }

    /// The ideal `(x_0^a, ..., x_n^a)`.
    pub fn pure_powers(ring: &RingRef, a: u32) -> Self {
        let gens: Vec<Polynomial> = (0..ring.nvars())
            .map(|i| {
                Polynomial::from_term(ring, {
                    let mut e = vec![0u32; ring.nvars()];
                    e[i] = a;
                    Monomial::new(e)
                }, Rational::one())
            })
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Gröbner basis under the ring's declared order, cached.
    pub fn gb(&self, limits: &Limits) -> Result<&GroebnerBasis, IdealError> {
        if let Some(gb) = self.cached_gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.gens, self.ring.order(), limits)?;
        // concurrent fills compute the same reduced basis, so losing the
        // race is harmless
        let _ = self.cached_gb.set(gb);
        Ok(self.cached_gb.get().expect("just set"))
    }

    /// Gröbner basis under an arbitrary order.
    pub fn gb_for(&self, order: &MonomialOrder, limits: &Limits) -> Result<GroebnerBasis, IdealError> {
        if order == self.ring.order() {
            return self.gb(limits).cloned();
        }
        buchberger(&self.gens, order, limits)
    }

    pub fn is_unit(&self, limits: &Limits) -> Result<bool, IdealError> {
        Ok(self.gb(limits)?.is_unit())
    }

    pub fn contains(&self, f: &Polynomial, limits: &Limits) -> Result<bool, IdealError> {
        Ok(normal_form(f, self.gb(limits)?).is_zero())
    }

    /// Generator-wise sum `I + J`.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert!(same_ring(&self.ring, &other.ring), "ideal sum across rings");
        Ideal::new(
            &self.ring,
            self.gens.iter().chain(other.gens.iter()).cloned(),
        )
    }

    pub fn with_extra(&self, polys: impl IntoIterator<Item = Polynomial>) -> Ideal {
        Ideal::new(&self.ring, self.gens.iter().cloned().chain(polys))
    }

    /// Ideal equality via the canonical reduced Gröbner basis.
    pub fn equal(&self, other: &Ideal, limits: &Limits) -> Result<bool, IdealError> {
        if !same_ring(&self.ring, &other.ring) {
            return Ok(false);
        }
        let order = MonomialOrder::DegRevLex;
        Ok(self.gb_for(&order, limits)?.elements() == other.gb_for(&order, limits)?.elements())
    }
}

/// Remainder-free division: `f / g` when `g` divides `f` exactly.
pub fn exact_div(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    assert!(!g.is_zero(), "division by the zero polynomial");
    let order = MonomialOrder::DegRevLex;
    let (gm, gc) = g.leading_term(&order).expect("nonzero");
    let (gm, gc) = (gm.clone(), gc.clone());
    let mut work = f.clone();
    let mut quotient = Polynomial::zero(f.ring());
    while !work.is_zero() {
        let (wm, wc) = {
            let (m, c) = work.leading_term(&order).expect("nonzero");
            (m.clone(), c.clone())
        };
        let q = gm.try_div(&wm)?;
        let coeff = &wc / &gc;
        quotient.add_term(q.clone(), coeff.clone());
        work = work.add_scaled_term(g, &q, &-coeff);
    }
    Some(quotient)
}

/// Intersection `I ∩ J` via the auxiliary-variable trick:
/// `I ∩ J = (t·I + (1−t)·J) ∩ k[x]`.
pub fn intersect(a: &Ideal, b: &Ideal, limits: &Limits) -> Result<Ideal, IdealError> {
    let ring = a.ring();
    let tname = ring.fresh_var("t");
    let ext = ring
        .prepend_var(&tname, MonomialOrder::elim_first(1))
        .expect("fresh variable name is valid");

    let lift = |p: &Polynomial| -> Polynomial {
        Polynomial::from_terms(
            &ext,
            p.terms().map(|(m, c)| (m.insert_var(0, 0), c.clone())),
        )
    };
    let t = Polynomial::variable(&ext, 0).expect("t exists");
    let one_minus_t = &Polynomial::one(&ext) - &t;

    let mut gens: Vec<Polynomial> = Vec::new();
    for f in a.generators() {
        gens.push(&t * &lift(f));
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &lift(g));
    }
    let gb = buchberger(&gens, ext.order(), limits)?;
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|p| p.terms().all(|(m, _)| m.exponent(0) == 0))
        .map(|p| {
            Polynomial::from_terms(ring, p.terms().map(|(m, c)| (m.remove_var(0), c.clone())))
        })
        .collect();
    Ok(Ideal::new(ring, kept))
}

/// Ideal quotient `I : f`.
pub fn ideal_quotient(i: &Ideal, f: &Polynomial, limits: &Limits) -> Result<Ideal, IdealError> {
    assert!(!f.is_zero(), "quotient by the zero polynomial");
    if f.is_constant() {
        return Ok(i.clone());
    }
    let principal = Ideal::new(i.ring(), [f.clone()]);
    let meet = intersect(i, &principal, limits)?;
    let gens: Vec<Polynomial> = meet
        .generators()
        .iter()
        .map(|g| exact_div(g, f).expect("intersection elements are divisible by f"))
        .collect();
    Ok(Ideal::new(i.ring(), gens))
}

/// Ideal quotient `I : J`, the intersection of the single-element quotients.
pub fn ideal_quotient_ideal(i: &Ideal, j: &Ideal, limits: &Limits) -> Result<Ideal, IdealError> {
    let mut parts = j.generators().iter();
    let first = match parts.next() {
        // J = (0): everything multiplies 0 into I
        None => return Ok(Ideal::new(i.ring(), [Polynomial::one(i.ring())])),
        Some(g) => g,
    };
    let mut acc = ideal_quotient(i, first, limits)?;
    for g in parts {
        let q = ideal_quotient(i, g, limits)?;
        acc = intersect(&acc, &q, limits)?;
    }
    Ok(acc)
}

/// Saturation `I : J^∞` by iterated quotient until the chain stabilizes.
pub fn saturate(i: &Ideal, j: &Ideal, limits: &Limits) -> Result<Ideal, IdealError> {
    let mut current = i.clone();
    for _ in 0..limits.max_sat_rounds {
        let next = ideal_quotient_ideal(&current, j, limits)?;
        if next.equal(&current, limits)? {
            return Ok(current);
        }
        current = next;
    }
    Err(IdealError::ResourceCap {
        what: "saturation quotient rounds",
        limit: limits.max_sat_rounds as u64,
    })
}

/// Saturation by a single polynomial via the Rabinowitsch trick
/// `(I, t·f − 1) ∩ k[x]`; kept as an independent cross-check of [`saturate`].
pub fn saturate_by_poly_rabinowitsch(
    i: &Ideal,
    f: &Polynomial,
    limits: &Limits,
) -> Result<Ideal, IdealError> {
    assert!(!f.is_zero());
    let ring = i.ring();
    let tname = ring.fresh_var("t");
    let ext = ring
        .prepend_var(&tname, MonomialOrder::elim_first(1))
        .expect("fresh variable name is valid");
    let lift = |p: &Polynomial| -> Polynomial {
        Polynomial::from_terms(
            &ext,
            p.terms().map(|(m, c)| (m.insert_var(0, 0), c.clone())),
        )
    };
    let t = Polynomial::variable(&ext, 0).expect("t exists");
    let mut gens: Vec<Polynomial> = i.generators().iter().map(&lift).collect();
    gens.push(&(&t * &lift(f)) - &Polynomial::one(&ext));
    let gb = buchberger(&gens, ext.order(), limits)?;
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|p| p.terms().all(|(m, _)| m.exponent(0) == 0))
        .map(|p| {
            Polynomial::from_terms(ring, p.terms().map(|(m, c)| (m.remove_var(0), c.clone())))
        })
        .collect();
    Ok(Ideal::new(ring, kept))
}

/// Generators of `I ∩ k[vars not in `drop`]`, returned in the original ring.
pub fn eliminate(i: &Ideal, drop: &[usize], limits: &Limits) -> Result<Ideal, IdealError> {
    if drop.is_empty() {
        return Ok(i.clone());
    }
    let block: std::collections::BTreeSet<usize> = drop.iter().copied().collect();
    let order = MonomialOrder::Elim(block.clone());
    let gb = i.gb_for(&order, limits)?;
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|p| {
            p.terms()
                .all(|(m, _)| block.iter().all(|&v| m.exponent(v) == 0))
        })
        .cloned()
        .collect();
    Ok(Ideal::new(i.ring(), kept))
}
