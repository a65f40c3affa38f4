//! Line-oriented job file format:
//!
//! ```text
//! # comment
//! ring x0 x1 x2 x3 x4
//! poly x0*x1
//! param d=2 N=4 seed=7
//! vector 0 0 1
//! coords 1 0 0  0 1 0  0 0 1
//! stratum sing
//! dim 2
//! parents
//! chiF 0
//! csm 3 3 1
//! end
//! ```
//!
//! `vector`, `csm` and `polar` entries and all stratum scalars are exact
//! rationals written as `p`, `-p` or `p/q`.

use classcalc::{ClassVector, Stratum, StratumTable};
use polyring::{parse_poly, Polynomial, Rational, RingRef, RingSpec, SquareMatrix};
use std::collections::BTreeMap;

#[derive(Debug, Default)]
pub struct JobFile {
    pub ring: Option<RingRef>,
    pub poly_text: Option<String>,
    pub poly: Option<Polynomial>,
    pub params: BTreeMap<String, String>,
    pub vector: Option<Vec<Rational>>,
    pub coords: Option<SquareMatrix>,
    pub table: Option<StratumTable>,
}

impl JobFile {
    pub fn parse(text: &str) -> Result<JobFile, String> {
        let mut job = JobFile::default();
        let mut strata: Vec<Stratum> = Vec::new();
        let mut current: Option<Stratum> = None;

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = match line.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (line, ""),
            };

            if let Some(stratum) = current.as_mut() {
                match key {
                    "dim" => {
                        stratum.dim = rest
                            .parse::<usize>()
                            .map_err(|_| format!("line {lineno}: bad dimension `{rest}`"))?
                    }
                    "parents" => {
                        stratum.parents =
                            rest.split_whitespace().map(|s| s.to_string()).collect()
                    }
                    "mu" => stratum.mu = Some(parse_rational(rest, lineno)?),
                    "chiF" => {
                        stratum.chi_fiber = Some(rest.parse::<i64>().map_err(|_| {
                            format!("line {lineno}: bad integer `{rest}` for chiF")
                        })?)
                    }
                    "chiS" => {
                        stratum.chi_stratum = Some(rest.parse::<i64>().map_err(|_| {
                            format!("line {lineno}: bad integer `{rest}` for chiS")
                        })?)
                    }
                    "eta" => stratum.eta = Some(parse_rational(rest, lineno)?),
                    "csm" => {
                        stratum.csm_closure =
                            Some(vector_from_entries(parse_vector_entries(rest, lineno)?))
                    }
                    "polar" => stratum.polar_degrees = Some(parse_vector_entries(rest, lineno)?),
                    "mu_perp" => stratum.mu_perp = Some(parse_rational(rest, lineno)?),
                    "closure_degree" => {
                        stratum.closure_degree = Some(parse_rational(rest, lineno)?)
                    }
                    "end" => {
                        strata.push(current.take().expect("inside a stratum"));
                    }
                    other => {
                        return Err(format!(
                            "line {lineno}: unknown stratum field `{other}`"
                        ))
                    }
                }
                continue;
            }

            match key {
                "ring" => {
                    let names: Vec<&str> = rest.split_whitespace().collect();
                    if names.is_empty() {
                        return Err(format!("line {lineno}: ring needs variable names"));
                    }
                    job.ring = Some(
                        RingSpec::degrevlex(names)
                            .map_err(|e| format!("line {lineno}: {e}"))?,
                    );
                }
                "poly" => {
                    let ring = job
                        .ring
                        .as_ref()
                        .ok_or(format!("line {lineno}: poly before ring"))?;
                    job.poly = Some(
                        parse_poly(rest, ring).map_err(|e| format!("line {lineno}: {e}"))?,
                    );
                    job.poly_text = Some(rest.to_string());
                }
                "param" => {
                    for assignment in rest.split_whitespace() {
                        let (name, value) = assignment.split_once('=').ok_or(format!(
                            "line {lineno}: param entries look like name=value"
                        ))?;
                        job.params.insert(name.to_string(), value.to_string());
                    }
                }
                "vector" => {
                    job.vector = Some(parse_vector_entries(rest, lineno)?);
                }
                "coords" => {
                    let entries = parse_vector_entries(rest, lineno)?;
                    let n = (0..=entries.len()).find(|k| k * k >= entries.len()).unwrap();
                    if n * n != entries.len() {
                        return Err(format!(
                            "line {lineno}: coords needs a square number of entries"
                        ));
                    }
                    let rows: Vec<Vec<Rational>> =
                        entries.chunks(n).map(|c| c.to_vec()).collect();
                    job.coords = Some(SquareMatrix::from_rows(rows));
                }
                "stratum" => {
                    if rest.is_empty() {
                        return Err(format!("line {lineno}: stratum needs an id"));
                    }
                    current = Some(Stratum::new(rest, 0));
                }
                other => return Err(format!("line {lineno}: unknown directive `{other}`")),
            }
        }
        if current.is_some() {
            return Err("unterminated stratum block (missing `end`)".into());
        }
        if !strata.is_empty() {
            job.table =
                Some(StratumTable::new(strata).map_err(|e| format!("stratum table: {e}"))?);
        }
        Ok(job)
    }

    pub fn param_u64(&self, name: &str) -> Result<Option<u64>, String> {
        match self.params.get(name) {
            None => Ok(None),
            Some(v) => v
                .parse::<u64>()
                .map(Some)
                .map_err(|_| format!("param {name}={v} is not a nonnegative integer")),
        }
    }

    pub fn param_i64(&self, name: &str) -> Result<Option<i64>, String> {
        match self.params.get(name) {
            None => Ok(None),
            Some(v) => v
                .parse::<i64>()
                .map(Some)
                .map_err(|_| format!("param {name}={v} is not an integer")),
        }
    }
}

fn parse_rational(text: &str, lineno: usize) -> Result<Rational, String> {
    let bad = || format!("line {lineno}: bad rational `{text}`");
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n: polyring::Integer = num.parse().map_err(|_| bad())?;
    let d: polyring::Integer = den.parse().map_err(|_| bad())?;
    if d == polyring::Integer::from(0) {
        return Err(format!("line {lineno}: zero denominator"));
    }
    Ok(Rational::new(n, d))
}

fn parse_vector_entries(text: &str, lineno: usize) -> Result<Vec<Rational>, String> {
    text.split_whitespace()
        .map(|tok| parse_rational(tok, lineno))
        .collect()
}

/// Coefficients into a class vector sized to fit; transforms look entries
/// up with out-of-range reads returning zero, so the tight ambient works.
fn vector_from_entries(entries: Vec<Rational>) -> ClassVector {
    let ambient = entries.len().saturating_sub(1);
    ClassVector::from_coeffs(ambient, entries).expect("length fits ambient by construction")
}
