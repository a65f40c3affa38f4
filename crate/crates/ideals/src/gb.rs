use crate::{IdealError, Limits};
use num_traits::One;
use polyring::{Monomial, MonomialOrder, Polynomial, Rational};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// A reduced, monic Gröbner basis. Elements are sorted by leading monomial
/// (ascending), so equal ideals under the same order produce identical
/// values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant() && !self.elements[0].is_zero()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading monomials of the basis elements.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_term(&self.order).expect("basis elements are nonzero").0.clone())
            .collect()
    }
}

/// Buchberger's algorithm with the product and chain criteria and normal
/// pair selection. The result is auto-reduced and monic.
pub fn buchberger(
    gens: &[Polynomial],
    order: &MonomialOrder,
    limits: &Limits,
) -> Result<GroebnerBasis, IdealError> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic(order));
        }
    }

    let mut leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_term(order).expect("nonzero").0.clone())
        .collect();

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pending.insert((i, j));
        }
    }
    let mut treated: BTreeSet<(usize, usize)> = BTreeSet::new();

    let mut reductions: usize = 0;
    while !pending.is_empty() {
        // normal selection: the pair whose lcm is smallest in the order
        let &pair = pending
            .iter()
            .min_by(|p, q| {
                let lp = leads[p.0].lcm(&leads[p.1]);
                let lq = leads[q.0].lcm(&leads[q.1]);
                order.cmp(&lp, &lq)
            })
            .expect("nonempty");
        pending.remove(&pair);
        treated.insert(pair);
        let (i, j) = pair;

        if leads[i].coprime(&leads[j]) {
            continue;
        }
        let lcm = leads[i].lcm(&leads[j]);
        // chain criterion: some basis element k divides the lcm and both
        // flanking pairs were already treated
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&lcm)
                && treated.contains(&key(i, k))
                && treated.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        reductions += 1;
        if reductions > limits.max_pairs {
            return Err(IdealError::ResourceCap {
                what: "Buchberger S-pair reductions",
                limit: limits.max_pairs as u64,
            });
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce_full(&s, &basis, order);
        if !r.is_zero() {
            let new = r.monic(order);
            let n = basis.len();
            leads.push(new.leading_term(order).expect("nonzero").0.clone());
            basis.push(new);
            for k in 0..n {
                pending.insert((k, n));
            }
        }
    }

    Ok(interreduce(basis, order))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// S-polynomial of two monic polynomials.
fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (lmf, lcf) = f.leading_term(order).expect("nonzero");
    let (lmg, lcg) = g.leading_term(order).expect("nonzero");
    let lcm = lmf.lcm(lmg);
    let mf = lmf.try_div(&lcm).expect("lcm divisible");
    let mg = lmg.try_div(&lcm).expect("lcm divisible");
    let a = Polynomial::zero(f.ring()).add_scaled_term(f, &mf, &(Rational::one() / lcf.clone()));
    a.add_scaled_term(g, &mg, &(-(Rational::one() / lcg.clone())))
}

/// Full normal form: repeatedly cancels the largest reducible term; the
/// remainder has no term divisible by any leading monomial of `basis`.
fn reduce_full(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let lts: Vec<(Monomial, Rational)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (m, c) = g.leading_term(order).expect("nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let live: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();

    let mut work = f.clone();
    let mut remainder = Polynomial::zero(f.ring());
    'outer: while !work.is_zero() {
        let (wm, wc) = {
            let (m, c) = work.leading_term(order).expect("nonzero");
            (m.clone(), c.clone())
        };
        for (idx, (gm, gc)) in lts.iter().enumerate() {
            if let Some(q) = gm.try_div(&wm) {
                let coeff = -(&wc / gc);
                work.add_scaled_assign(live[idx], &q, &coeff);
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        remainder.add_term(wm.clone(), wc.clone());
        work.add_term(wm, -wc);
    }
    remainder
}

/// Normal form of `f` with respect to a Gröbner basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    reduce_full(f, &gb.elements, &gb.order)
}

/// Minimalize and tail-reduce a basis; sort it canonically.
fn interreduce(mut basis: Vec<Polynomial>, order: &MonomialOrder) -> GroebnerBasis {
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Polynomial> = Vec::new();
    'next: for i in 0..basis.len() {
        let lmi = basis[i].leading_term(order).expect("nonzero").0.clone();
        for (j, other) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let lmj = other.leading_term(order).expect("nonzero").0;
            if lmj.divides(&lmi) && (lmj != &lmi || j < i) {
                continue 'next;
            }
        }
        keep.push(basis[i].clone());
    }
    basis = keep;

    // tail-reduce every element against the rest
    let mut reduced: Vec<Polynomial> = basis.clone();
    for i in 0..basis.len() {
        let others: Vec<Polynomial> = reduced
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced[i] = reduce_full(&reduced[i], &others, order).monic(order);
    }
    reduced.retain(|g| !g.is_zero());
    reduced.sort_by(|a, b| {
        let la = a.leading_term(order).expect("nonzero").0;
        let lb = b.leading_term(order).expect("nonzero").0;
        match order.cmp(la, lb) {
            Ordering::Equal => format!("{a}").cmp(&format!("{b}")),
            other => other,
        }
    });
    GroebnerBasis {
        order: order.clone(),
        elements: reduced,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyring::{parse_poly, RingSpec};

    #[test]
    fn s_polynomial_cancels_leads() {
        let r = RingSpec::degrevlex(["x", "y"]).unwrap();
        let f = parse_poly("x^2 + y", &r).unwrap();
        let g = parse_poly("x*y + 1", &r).unwrap();
        let s = s_polynomial(&f, &g, r.order());
        // lcm = x^2 y; s = y*f - x*g = y^2 - x
        assert_eq!(s, parse_poly("y^2 - x", &r).unwrap());
    }
}
