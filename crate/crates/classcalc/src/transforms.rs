use crate::binomial::binomial;
use crate::coeffs::{coeff_b, coeff_c};
use crate::vector::{BundleDegree, ClassVector};
use crate::{ClassError, Stratum, StratumTable};
use num_traits::Zero;
use polyring::{Integer, Rational};

/// `c_1(L)^s ∩ v`: the dimension-`k` degree of the result is
/// `d^s * v_{k+s}`.
pub fn cap_c1(v: &ClassVector, d: &BundleDegree, s: u32) -> ClassVector {
    let mut out = ClassVector::zero(v.ambient());
    let scale = d.pow(s);
    for k in 0..=v.ambient() {
        let src = k + s as usize;
        if src <= v.ambient() {
            out.set(k, v.get(src) * scale.clone());
        }
    }
    out
}

fn check_support(v: &ClassVector, bound: i64) -> Result<(), ClassError> {
    if !v.supported_within(bound) {
        return Err(ClassError::SupportViolation {
            support: v.support_dim().unwrap_or(0),
            bound,
        });
    }
    Ok(())
}

/// Corrected Milnor-from-Lê transform:
/// `M_k = (-1)^k Σ_{s=0}^{r-k} C_{k,s}(d) c_1(L)^s ∩ Λ_{k+s}`.
/// `r` is the dimension of the singular set; the input must be supported
/// within it.
pub fn milnor_from_le(
    lambda: &ClassVector,
    d: &BundleDegree,
    r: i64,
) -> Result<ClassVector, ClassError> {
    check_support(lambda, r)?;
    let mut out = ClassVector::zero(lambda.ambient());
    if r < 0 {
        return Ok(out);
    }
    for k in 0..=r as u32 {
        let mut acc = Rational::zero();
        for s in 0..=(r as u32 - k) {
            let coeff = coeff_c(k, s, d);
            acc += coeff * d.pow(s) * lambda.get((k + s) as usize);
        }
        if k % 2 == 1 {
            acc = -acc;
        }
        out.set(k as usize, acc);
    }
    Ok(out)
}

/// Inverse transform:
/// `Λ_k = (-1)^k Σ_{s=0}^{r-k} B_{k,s}(d) c_1(L)^s ∩ M_{k+s}`.
pub fn le_from_milnor(
    milnor: &ClassVector,
    d: &BundleDegree,
    r: i64,
) -> Result<ClassVector, ClassError> {
    check_support(milnor, r)?;
    let mut out = ClassVector::zero(milnor.ambient());
    if r < 0 {
        return Ok(out);
    }
    for k in 0..=r as u32 {
        let mut acc = Rational::zero();
        for s in 0..=(r as u32 - k) {
            let coeff = coeff_b(k, s, d);
            acc += coeff * d.pow(s) * milnor.get((k + s) as usize);
        }
        if k % 2 == 1 {
            acc = -acc;
        }
        out.set(k as usize, acc);
    }
    Ok(out)
}

/// Milnor classes via the two-bundle projective expansion:
/// `M_k = Σ_{j>=0} Σ_{i>=k+j} (-1)^{i+j} binom(i+1, k+j+1)
///        c_1(O(d))^j c_1(O(1))^{i-k-j} ∩ Λ_i`.
/// An independent route that must agree with [`milnor_from_le`] for
/// hypersurfaces in projective space.
pub fn milnor_from_le_projective(
    lambda: &ClassVector,
    d: &BundleDegree,
    dim_z: usize,
) -> Result<ClassVector, ClassError> {
    check_support(lambda, dim_z as i64 - 1)?;
    let n = lambda.ambient();
    let mut out = ClassVector::zero(n);
    for k in 0..=n {
        let mut acc = Rational::zero();
        for i in k..=n {
            let li = lambda.get(i);
            if li.is_zero() {
                continue;
            }
            for j in 0..=(i - k) as u32 {
                let b = binomial(i as i64 + 1, k as i64 + j as i64 + 1);
                let sign = if (i + j as usize).is_multiple_of(2) { 1 } else { -1 };
                acc += Rational::from_integer(Integer::from(sign) * b)
                    * d.pow(j)
                    * li.clone();
            }
        }
        out.set(k, acc);
    }
    Ok(out)
}

/// A superseded early form of the transform, kept as a regression
/// artifact:
/// `M_k = Σ_{l=0}^{r-k} (-1)^{l+k} binom(l+k, k) c_1(L)^l ∩ Λ_{l+k}`.
/// It agrees with [`milnor_from_le`] only on classes supported in
/// dimension zero.
pub fn milnor_from_le_legacy(lambda: &ClassVector, d: &BundleDegree, r: i64) -> ClassVector {
    let mut out = ClassVector::zero(lambda.ambient());
    if r < 0 {
        return out;
    }
    for k in 0..=r as u32 {
        let mut acc = Rational::zero();
        for l in 0..=(r as u32 - k) {
            let b = binomial(l as i64 + k as i64, k as i64);
            let sign = if (l + k) % 2 == 0 { 1 } else { -1 };
            acc += Rational::from_integer(Integer::from(sign) * b)
                * d.pow(l)
                * lambda.get((l + k) as usize);
        }
        out.set(k as usize, acc);
    }
    out
}

/// Piene's polar expression for the Mather classes of a `dim`-dimensional
/// projective variety with polar degrees `p_0..p_dim` (where `p_dim` is the
/// degree of the variety itself):
/// `c_k^Ma = Σ_{i=k}^{dim} (-1)^{dim-i} binom(i+1, k+1) c_1(O(1))^{i-k} ∩ p_i`.
pub fn mather_from_polar(
    polar_degrees: &[Rational],
    dim: usize,
    ambient: usize,
) -> Result<ClassVector, ClassError> {
    if polar_degrees.len() != dim + 1 {
        return Err(ClassError::PolarLengthMismatch {
            stratum: String::new(),
            expected: dim + 1,
            got: polar_degrees.len(),
        });
    }
    let mut out = ClassVector::zero(ambient);
    for k in 0..=dim {
        let mut acc = Rational::zero();
        for i in k..=dim {
            let sign = if (dim - i).is_multiple_of(2) { 1 } else { -1 };
            let b = binomial(i as i64 + 1, k as i64 + 1);
            acc += Rational::from_integer(Integer::from(sign) * b) * polar_degrees[i].clone();
        }
        out.set(k, acc);
    }
    Ok(out)
}

/// Stratified Schwartz-MacPherson classes from polar data:
/// `c_k^SM(β) = Σ_α η(S_α, β) Σ_{i=k}^{d_α} (-1)^{d_α-i} binom(i+1, k+1)
///              c_1(O(1))^{i-k} ∩ p_i(S̄_α)`.
/// Every stratum must carry `eta` and the polar degrees of its closure.
pub fn csm_from_polar(table: &StratumTable, ambient: usize) -> Result<ClassVector, ClassError> {
    table.validate()?;
    let mut out = ClassVector::zero(ambient);
    for stratum in &table.strata {
        let eta = stratum.eta.clone().ok_or(ClassError::MissingField {
            stratum: stratum.id.clone(),
            field: "eta",
        })?;
        if eta.is_zero() {
            continue;
        }
        let polar = stratum
            .polar_degrees
            .as_ref()
            .ok_or(ClassError::MissingField {
                stratum: stratum.id.clone(),
                field: "polar_degrees",
            })?;
        let part = mather_from_polar(polar, stratum.dim, ambient).map_err(|e| match e {
            ClassError::PolarLengthMismatch { expected, got, .. } => {
                ClassError::PolarLengthMismatch {
                    stratum: stratum.id.clone(),
                    expected,
                    got,
                }
            }
            other => other,
        })?;
        for k in 0..=ambient {
            let v = out.get(k) + eta.clone() * part.get(k);
            out.set(k, v);
        }
    }
    Ok(out)
}

/// Degrees of the Fulton-Johnson class of a degree-`d` hypersurface in
/// `P^N`: the class of `(1+H)^{N+1} (1+dH)^{-1} ∩ [Z]`, so
/// `c_k^FJ = d Σ_{j=0}^{N-1-k} binom(N+1, j) (-d)^{N-1-k-j}`.
pub fn fj_degrees(ambient: usize, d: &BundleDegree) -> ClassVector {
    let mut out = ClassVector::zero(ambient);
    if ambient == 0 {
        return out;
    }
    let dim_z = ambient - 1;
    let dr = polyring::rat(d.get() as i64);
    for k in 0..=dim_z {
        let mut acc = Rational::zero();
        for j in 0..=(dim_z - k) {
            let b = binomial(ambient as i64 + 1, j as i64);
            let pow = dim_z - k - j;
            let sign = if pow.is_multiple_of(2) { 1 } else { -1 };
            acc += Rational::from_integer(Integer::from(sign) * b) * d.pow(pow as u32);
        }
        out.set(k, dr.clone() * acc);
    }
    out
}

/// Recover the Schwartz-MacPherson degrees from the Fulton-Johnson degrees
/// and the Milnor class: `c^SM = c^FJ - (-1)^{dim Z} M`.
pub fn csm_from_fj_milnor(fj: &ClassVector, milnor: &ClassVector, dim_z: usize) -> ClassVector {
    let ambient = fj.ambient().max(milnor.ambient());
    let mut out = ClassVector::zero(ambient);
    let sign = if dim_z.is_multiple_of(2) { 1 } else { -1 };
    for k in 0..=ambient {
        out.set(
            k,
            fj.get(k) - polyring::rat(sign) * milnor.get(k),
        );
    }
    out
}

/// Aluffi class of the singular locus: `α = c(L|_Z) ∩ M(Z)`, i.e.
/// `α_k = M_k + d·M_{k+1}`.
pub fn aluffi_from_milnor(milnor: &ClassVector, d: &BundleDegree) -> ClassVector {
    let mut out = ClassVector::zero(milnor.ambient());
    let dr = polyring::rat(d.get() as i64);
    for k in 0..=milnor.ambient() {
        let next = if k < milnor.ambient() {
            milnor.get(k + 1)
        } else {
            Rational::zero()
        };
        out.set(k, milnor.get(k) + dr.clone() * next);
    }
    out
}

/// Resolve a stratum's local Milnor number: explicit `mu` wins, otherwise
/// `(-1)^{dim Z} (χ(F) - 1)` from the transversal fiber Euler characteristic.
pub(crate) fn stratum_mu(stratum: &Stratum, dim_z: usize) -> Result<Rational, ClassError> {
    if let Some(mu) = &stratum.mu {
        return Ok(mu.clone());
    }
    if let Some(chi) = stratum.chi_fiber {
        let sign = if dim_z.is_multiple_of(2) { 1 } else { -1 };
        return Ok(polyring::rat(sign * (chi - 1)));
    }
    Err(ClassError::MissingField {
        stratum: stratum.id.clone(),
        field: "mu (or chiF)",
    })
}
