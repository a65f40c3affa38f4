use crate::transforms::stratum_mu;
use crate::vector::{BundleDegree, ClassVector};
use crate::ClassError;
use num_traits::Zero;
use polyring::Rational;
use std::collections::{BTreeMap, BTreeSet};

/// One stratum of a Whitney stratification, with whatever per-stratum data
/// the invoked transform needs. Optional fields left `None` are simply
/// unavailable to transforms that require them.
#[derive(Debug, Clone, PartialEq)]
pub struct Stratum {
    pub id: String,
    pub dim: usize,
    /// Ids of strata whose closure contains this one. The transitive
    /// closure of the listed relation is taken, so listing direct covers
    /// is enough.
    pub parents: Vec<String>,
    /// Local Milnor number of the ambient hypersurface along the stratum.
    pub mu: Option<Rational>,
    /// Euler characteristic of the transversal Milnor fiber.
    pub chi_fiber: Option<i64>,
    /// Euler characteristic of the stratum itself.
    pub chi_stratum: Option<i64>,
    /// Normal Morse index weight.
    pub eta: Option<Rational>,
    /// Schwartz-MacPherson class of the closure as degrees in `P^N`.
    pub csm_closure: Option<ClassVector>,
    /// Polar degrees `p_0..p_dim` of the closure.
    pub polar_degrees: Option<Vec<Rational>>,
    /// Transversal Milnor number.
    pub mu_perp: Option<Rational>,
    /// Degree of the closure in `P^N`.
    pub closure_degree: Option<Rational>,
}

impl Stratum {
    pub fn new(id: impl Into<String>, dim: usize) -> Self {
        Stratum {
            id: id.into(),
            dim,
            parents: Vec::new(),
            mu: None,
            chi_fiber: None,
            chi_stratum: None,
            eta: None,
            csm_closure: None,
            polar_degrees: None,
            mu_perp: None,
            closure_degree: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct StratumTable {
    pub strata: Vec<Stratum>,
}

impl StratumTable {
    pub fn new(strata: Vec<Stratum>) -> Result<Self, ClassError> {
        let table = StratumTable { strata };
        table.validate()?;
        Ok(table)
    }

    /// Ids unique, parents known, and every closure relation strictly
    /// increasing in dimension (which also rules out cycles).
    pub fn validate(&self) -> Result<(), ClassError> {
        let mut ids = BTreeSet::new();
        for s in &self.strata {
            if !ids.insert(s.id.clone()) {
                return Err(ClassError::DuplicateStratum(s.id.clone()));
            }
        }
        for s in &self.strata {
            for p in &s.parents {
                let parent = self
                    .strata
                    .iter()
                    .find(|t| &t.id == p)
                    .ok_or(ClassError::UnknownParent {
                        stratum: s.id.clone(),
                        parent: p.clone(),
                    })?;
                if parent.dim <= s.dim {
                    return Err(ClassError::ClosureNotPartialOrder {
                        stratum: s.id.clone(),
                        parent: p.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    fn index(&self) -> BTreeMap<&str, usize> {
        self.strata
            .iter()
            .enumerate()
            .map(|(i, s)| (s.id.as_str(), i))
            .collect()
    }

    /// All strata whose closure contains `start`, as indices.
    fn ancestors(&self, start: usize) -> BTreeSet<usize> {
        let idx = self.index();
        let mut seen = BTreeSet::new();
        let mut stack: Vec<usize> = vec![start];
        while let Some(i) = stack.pop() {
            for p in &self.strata[i].parents {
                let pi = idx[p.as_str()];
                if seen.insert(pi) {
                    stack.push(pi);
                }
            }
        }
        seen
    }
}

/// The stratum's `mu`, resolved from `chiF` when not given directly.
pub fn resolved_mu(stratum: &Stratum, dim_z: usize) -> Result<Rational, ClassError> {
    stratum_mu(stratum, dim_z)
}

/// The inclusion–exclusion weights of the Parusiński-Pragacz formula:
/// `γ_S = μ_S − Σ_{S' ≠ S, S̄' ⊃ S} γ_{S'}`, computed from maximal strata
/// downward. Strata with `μ = 0` and no singular ancestors come out zero.
pub fn gamma_from_mu(
    table: &StratumTable,
    dim_z: usize,
) -> Result<BTreeMap<String, Rational>, ClassError> {
    table.validate()?;
    let mut order: Vec<usize> = (0..table.strata.len()).collect();
    order.sort_by(|&a, &b| table.strata[b].dim.cmp(&table.strata[a].dim));
    let mut gamma: BTreeMap<String, Rational> = BTreeMap::new();
    for i in order {
        let stratum = &table.strata[i];
        let mut value = stratum_mu(stratum, dim_z)?;
        for a in table.ancestors(i) {
            let aid = &table.strata[a].id;
            value -= gamma
                .get(aid)
                .cloned()
                .expect("ancestors processed first: dimensions strictly increase");
        }
        gamma.insert(stratum.id.clone(), value);
    }
    Ok(gamma)
}

/// Parusiński-Pragacz stratified Milnor class:
/// `M(Z) = Σ_S γ_S (c(L|_Z)^{-1} ∩ c^SM(S̄))`, with `c(L)^{-1}` expanded as
/// the finite geometric series `Σ_j (-dH)^j`.
pub fn pp_milnor(
    table: &StratumTable,
    d: &BundleDegree,
    ambient: usize,
) -> Result<ClassVector, ClassError> {
    let dim_z = ambient.saturating_sub(1);
    let gamma = gamma_from_mu(table, dim_z)?;
    let mut out = ClassVector::zero(ambient);
    for stratum in &table.strata {
        let g = gamma[&stratum.id].clone();
        if g.is_zero() {
            continue;
        }
        let csm = stratum
            .csm_closure
            .as_ref()
            .ok_or(ClassError::MissingField {
                stratum: stratum.id.clone(),
                field: "csm_closure",
            })?;
        for k in 0..=ambient {
            let mut acc = Rational::zero();
            for j in 0..=(ambient - k) as u32 {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                acc += polyring::rat(sign) * d.pow(j) * csm.get(k + j as usize);
            }
            let v = out.get(k) + g.clone() * acc;
            out.set(k, v);
        }
    }
    Ok(out)
}

/// Top-dimensional Milnor class from transversal Milnor numbers:
/// `M_r = Σ_{dim S = r} (-1)^r μ⊥(S) deg[S̄]`, summed over the
/// `r`-dimensional strata carrying `mu_perp`.
pub fn top_milnor_class(
    table: &StratumTable,
    r: usize,
    ambient: usize,
) -> Result<ClassVector, ClassError> {
    table.validate()?;
    let mut total = Rational::zero();
    for stratum in &table.strata {
        if stratum.dim != r || stratum.mu_perp.is_none() {
            continue;
        }
        let mu_perp = stratum.mu_perp.clone().expect("checked above");
        let degree = stratum
            .closure_degree
            .clone()
            .or_else(|| {
                stratum
                    .polar_degrees
                    .as_ref()
                    .and_then(|p| p.last().cloned())
            })
            .ok_or(ClassError::MissingField {
                stratum: stratum.id.clone(),
                field: "closure_degree",
            })?;
        total += mu_perp * degree;
    }
    if r % 2 == 1 {
        total = -total;
    }
    let mut out = ClassVector::zero(ambient);
    out.set(r, total);
    Ok(out)
}

/// Stratified Euler characteristic `χ(X, F) = Σ_S χ(F_S) χ(S)`.
pub fn chi_from_strata(table: &StratumTable) -> Result<Rational, ClassError> {
    table.validate()?;
    let mut total = Rational::zero();
    for stratum in &table.strata {
        let chi_f = stratum.chi_fiber.ok_or(ClassError::MissingField {
            stratum: stratum.id.clone(),
            field: "chiF",
        })?;
        let chi_s = stratum.chi_stratum.ok_or(ClassError::MissingField {
            stratum: stratum.id.clone(),
            field: "chiS",
        })?;
        total += polyring::rat(chi_f * chi_s);
    }
    Ok(total)
}
