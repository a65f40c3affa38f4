use crate::rng::{random_unimodular, SplitMix64};
use crate::LeError;
use ideals::{
    hilbert_data_affine, local_multiplicity_at_origin, origin_in_zero_set,
    origin_isolated_or_absent, saturate, Ideal, IdealError, Limits,
};
use num_traits::Zero;
use polyring::{Polynomial, RingRef, SquareMatrix};

/// Retry and engine limits for a germ analysis.
#[derive(Debug, Clone)]
pub struct AnalysisCaps {
    /// Maximum number of coordinate frames tried before giving up.
    pub attempts: usize,
    pub limits: Limits,
}

impl Default for AnalysisCaps {
    fn default() -> Self {
        AnalysisCaps {
            attempts: 24,
            limits: Limits::default(),
        }
    }
}

/// A polynomial germ at the origin together with the analysis parameters.
#[derive(Debug, Clone)]
pub struct GermInput {
    pub h: Polynomial,
    /// Optional user-chosen coordinate frame tried first (identity when
    /// absent). Frames that fail the certificate are replaced by seeded
    /// random unimodular changes.
    pub coordinates: Option<SquareMatrix>,
    pub seed: u64,
    pub caps: AnalysisCaps,
}

impl GermInput {
    pub fn new(h: Polynomial) -> Self {
        GermInput {
            h,
            coordinates: None,
            seed: 0,
            caps: AnalysisCaps::default(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_coordinates(mut self, matrix: SquareMatrix) -> Self {
        self.coordinates = Some(matrix);
        self
    }
}

/// One relative polar variety `Γ^k` in the accepted frame.
#[derive(Debug, Clone)]
pub struct PolarStratum {
    pub k: usize,
    pub ideal: Ideal,
    /// `k` for a nonempty polar variety, `-1` for an empty one.
    pub dimension: i64,
    /// Degree of the projective closure of the affine cycle.
    pub degree: u64,
}

#[derive(Debug, Clone, Default)]
pub struct PolarData {
    pub strata: Vec<PolarStratum>,
}

/// Lê cycle degrees and Lê numbers of the germ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeData {
    /// Degrees of `Λ^k` as affine cycles, `k = 0..=dim Σ(h)`.
    pub lambda_degrees: Vec<u64>,
    /// `λ^k` at the origin, `k = 0..=sigma_dimension`; empty when the
    /// origin is a smooth point of the hypersurface.
    pub le_numbers: Vec<u64>,
    /// Dimension of the critical set at the origin (`-1` when the origin
    /// is not critical).
    pub sigma_dimension: i64,
    /// Dimension of the whole affine critical set.
    pub sigma_dimension_global: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateCheck {
    pub name: String,
    pub passed: bool,
}

/// Certificate that the reported frame passed every genericity check and
/// that an independently drawn frame reproduced the same numbers.
#[derive(Debug, Clone)]
pub struct GenericityCertificate {
    pub matrix: SquareMatrix,
    pub checks: Vec<CertificateCheck>,
    pub attempts_used: usize,
}

#[derive(Debug, Clone)]
pub struct LeAnalysis {
    pub polar: PolarData,
    pub le: LeData,
    pub certificate: GenericityCertificate,
    /// Set when the critical scheme of the input has a codimension-one
    /// component inside the hypersurface, i.e. a repeated factor.
    pub nonreduced_warning: bool,
}

/// The Jacobian ideal `(∂h/∂z_0, ..., ∂h/∂z_n)` cutting out the critical
/// scheme `Σ(h)`.
pub fn critical_ideal(h: &Polynomial) -> Ideal {
    let ring = h.ring().clone();
    Ideal::new(&ring, partials_of(h))
}

fn partials_of(h: &Polynomial) -> Vec<Polynomial> {
    (0..h.nvars())
        .map(|i| h.partial_derivative(i).expect("index in range"))
        .collect()
}

/// The relative polar ideal `Γ^k_{h,z}`: the gap sheaf of
/// `(∂h/∂z_k, ..., ∂h/∂z_n)` with respect to `Σ(h)`, realized as the
/// saturation by the Jacobian ideal. The coordinates are the ring's
/// declared variable order.
pub fn polar_ideal(h: &Polynomial, k: usize, limits: &Limits) -> Result<Ideal, LeError> {
    let n = h.nvars() - 1;
    if k == 0 || k > n {
        return Err(LeError::BadPolarIndex {
            k,
            nvars: h.nvars(),
        });
    }
    let jac = critical_ideal(h);
    Ok(polar_ideal_raw(h, &jac, k, limits)?)
}

fn polar_ideal_raw(
    h: &Polynomial,
    jac: &Ideal,
    k: usize,
    limits: &Limits,
) -> Result<Ideal, IdealError> {
    let ring = h.ring().clone();
    let gens: Vec<Polynomial> = (k..h.nvars())
        .map(|i| h.partial_derivative(i).expect("index in range"))
        .collect();
    let raw = Ideal::new(&ring, gens);
    saturate(&raw, jac, limits)
}

/// `χ(F_{h,0}) = 1 + Σ_k (-1)^{n-k} λ^k`, the Milnor fiber Euler
/// characteristic from the Lê numbers (`n` = number of variables − 1).
pub fn euler_char_milnor_fiber(le: &LeData, n: usize) -> i64 {
    let mut chi: i64 = 1;
    for (k, &lam) in le.le_numbers.iter().enumerate() {
        let sign = if (n as i64 - k as i64).rem_euclid(2) == 0 {
            1
        } else {
            -1
        };
        chi += sign * lam as i64;
    }
    chi
}

pub(crate) struct FrameAnalysis {
    pub polar: Vec<PolarStratum>,
    pub lambda_degrees: Vec<u64>,
    pub le_numbers: Vec<u64>,
    pub sigma_origin: i64,
    pub sigma_global: i64,
    pub checks: Vec<CertificateCheck>,
}

impl FrameAnalysis {
    /// The frame-independent numbers two accepted frames must agree on.
    /// Polar degrees are deliberately absent: they are honest data of the
    /// accepted frame, not invariants of the germ.
    pub fn fingerprint(&self) -> (&[u64], &[u64], i64, i64) {
        (
            &self.lambda_degrees,
            &self.le_numbers,
            self.sigma_origin,
            self.sigma_global,
        )
    }
}

pub(crate) enum Frame {
    Accepted(Box<FrameAnalysis>),
    Rejected(String),
}

/// Run the polar/Lê computation in the coordinates of `h`'s own ring.
/// Dimension checks decide acceptance; `with_local` additionally computes
/// Lê numbers at the origin with their slice-properness checks.
///
/// With `zero_fiber_only` set, cycle degrees count only the components
/// lying inside `V(h)` itself. The affine critical scheme of a chart
/// polynomial also carries the critical points of the other fibers
/// `h = c`, which do not belong to the hypersurface `V(h)`; the inside
/// part of a degree is obtained by subtracting the degree surviving
/// saturation by `h`.
pub(crate) fn analyze_frame(
    h: &Polynomial,
    limits: &Limits,
    with_local: bool,
    zero_fiber_only: bool,
) -> Result<Frame, IdealError> {
    let ring: RingRef = h.ring().clone();
    let mut checks: Vec<CertificateCheck> = Vec::new();

    let partials = partials_of(h);
    let jac = Ideal::new(&ring, partials.clone());
    let sigma = hilbert_data_affine(&jac, limits)?;
    let sigma_global = sigma.dimension;

    if sigma_global < 0 {
        return Ok(Frame::Accepted(Box::new(FrameAnalysis {
            polar: Vec::new(),
            lambda_degrees: Vec::new(),
            le_numbers: Vec::new(),
            sigma_origin: -1,
            sigma_global: -1,
            checks,
        })));
    }
    let d = sigma_global as usize;

    // polar ideals Γ^k for k = 1..=d+1; Γ^0 is empty by definition
    let empty = Ideal::new(&ring, [Polynomial::one(&ring)]);
    let mut gamma: Vec<Ideal> = vec![empty];
    let mut polar: Vec<PolarStratum> = Vec::new();
    for k in 1..=d + 1 {
        let gens: Vec<Polynomial> = partials.iter().skip(k).cloned().collect();
        let raw = Ideal::new(&ring, gens);
        let sat = saturate(&raw, &jac, limits)?;
        let hd = hilbert_data_affine(&sat, limits)?;
        let ok = hd.dimension == k as i64 || hd.dimension == -1;
        checks.push(CertificateCheck {
            name: format!("dim Γ^{k} in {{{k}, empty}} (got {})", hd.dimension),
            passed: ok,
        });
        if !ok {
            return Ok(Frame::Rejected(checks.last().unwrap().name.clone()));
        }
        polar.push(PolarStratum {
            k,
            ideal: sat.clone(),
            dimension: hd.dimension,
            degree: if hd.dimension == k as i64 { hd.degree } else { 0 },
        });
        gamma.push(sat);
    }

    // Λ^k degrees for k = 0..=d
    let fiber_ideal = Ideal::new(&ring, [h.clone()]);
    // degree of the dimension-k part of V(I) lying inside V(h)
    let degree_in_fiber = |ideal: &Ideal,
                           k: usize,
                           full_dim: i64,
                           full_degree: u64|
     -> Result<u64, IdealError> {
        let full = if full_dim == k as i64 { full_degree } else { 0 };
        if !zero_fiber_only || full == 0 {
            return Ok(full);
        }
        let outside = saturate(ideal, &fiber_ideal, limits)?;
        let ho = hilbert_data_affine(&outside, limits)?;
        let out = if ho.dimension == k as i64 { ho.degree } else { 0 };
        Ok(full.saturating_sub(out))
    };

    let mut lambda_degrees: Vec<u64> = Vec::new();
    for k in 0..=d {
        let upper = gamma[k + 1].with_extra([partials[k].clone()]);
        let hu = hilbert_data_affine(&upper, limits)?;
        let upper_ok = hu.dimension == k as i64 || hu.dimension == -1;
        checks.push(CertificateCheck {
            name: format!(
                "dim (Γ^{} ∩ V(∂_{k})) in {{{k}, empty}} (got {})",
                k + 1,
                hu.dimension
            ),
            passed: upper_ok,
        });
        if !upper_ok {
            return Ok(Frame::Rejected(checks.last().unwrap().name.clone()));
        }
        let deg_upper = degree_in_fiber(&upper, k, hu.dimension, hu.degree)?;
        let deg_lower = if k == 0 {
            0
        } else {
            let p = &polar[k - 1];
            debug_assert_eq!(p.k, k);
            degree_in_fiber(&p.ideal, k, p.dimension, p.degree)?
        };
        let nonneg = deg_upper >= deg_lower;
        checks.push(CertificateCheck {
            name: format!("Λ^{k} degree nonnegative ({deg_upper} - {deg_lower})"),
            passed: nonneg,
        });
        if !nonneg {
            return Ok(Frame::Rejected(checks.last().unwrap().name.clone()));
        }
        lambda_degrees.push(deg_upper - deg_lower);
    }

    // Lê numbers at the origin
    let mut le_numbers: Vec<u64> = Vec::new();
    let mut sigma_origin: i64 = -1;
    if with_local && origin_in_zero_set(&jac) {
        // dimension of Σ(h) at the origin: the first slice count that
        // isolates the origin
        let mut found = None;
        for k in 0..=d {
            let sliced = jac.with_extra(coordinate_slice(&ring, k));
            if origin_isolated_or_absent(&sliced, limits)? {
                found = Some(k as i64);
                break;
            }
        }
        let d0 = match found {
            Some(v) => v,
            None => {
                checks.push(CertificateCheck {
                    name: format!("origin isolated after at most {d} generic slices"),
                    passed: false,
                });
                return Ok(Frame::Rejected(checks.last().unwrap().name.clone()));
            }
        };
        sigma_origin = d0;

        for k in 0..=d0 as usize {
            let slice = coordinate_slice(&ring, k);
            let upper = gamma[k + 1]
                .with_extra([partials[k].clone()])
                .with_extra(slice.clone());
            let lower = gamma[k].with_extra(slice);
            let up = match local_multiplicity_at_origin(&upper, limits) {
                Ok(v) => v,
                Err(IdealError::OriginNotIsolated) => {
                    checks.push(CertificateCheck {
                        name: format!("slice of Γ^{} ∩ V(∂_{k}) proper at origin", k + 1),
                        passed: false,
                    });
                    return Ok(Frame::Rejected(checks.last().unwrap().name.clone()));
                }
                Err(e) => return Err(e),
            };
            let lo = match local_multiplicity_at_origin(&lower, limits) {
                Ok(v) => v,
                Err(IdealError::OriginNotIsolated) => {
                    checks.push(CertificateCheck {
                        name: format!("slice of Γ^{k} proper at origin"),
                        passed: false,
                    });
                    return Ok(Frame::Rejected(checks.last().unwrap().name.clone()));
                }
                Err(e) => return Err(e),
            };
            checks.push(CertificateCheck {
                name: format!("slice ideals for λ^{k} zero-dimensional at origin"),
                passed: true,
            });
            if up < lo {
                checks.push(CertificateCheck {
                    name: format!("λ^{k} nonnegative ({up} - {lo})"),
                    passed: false,
                });
                return Ok(Frame::Rejected(checks.last().unwrap().name.clone()));
            }
            le_numbers.push(up - lo);
        }
    }

    Ok(Frame::Accepted(Box::new(FrameAnalysis {
        polar,
        lambda_degrees,
        le_numbers,
        sigma_origin,
        sigma_global,
        checks,
    })))
}

/// The slice ideal `(z_0, ..., z_{count-1})`; empty for `count = 0`.
fn coordinate_slice(ring: &RingRef, count: usize) -> Vec<Polynomial> {
    (0..count)
        .map(|i| Polynomial::variable(ring, i).expect("index in range"))
        .collect()
}

/// Full Lê analysis of a germ: polar data, Lê cycle degrees, Lê numbers at
/// the origin and the genericity certificate. The input frame (user matrix
/// or identity) is tried first; frames failing any check are replaced by
/// seeded random unimodular changes, and a result is only accepted once two
/// independently drawn frames report identical numbers.
pub fn le_analysis(germ: &GermInput) -> Result<LeAnalysis, LeError> {
    let h0 = &germ.h;
    if h0.is_zero() {
        return Err(LeError::NotAGerm("zero polynomial"));
    }
    if h0.is_constant() {
        return Err(LeError::NotAGerm("constant polynomial"));
    }
    if !h0.constant_term().is_zero() {
        return Err(LeError::NotAGerm("h(0) != 0"));
    }
    let limits = &germ.caps.limits;
    let nvars = h0.nvars();

    // repeated factor <=> a codimension-one component of the critical
    // scheme inside V(h)
    let jac0 = critical_ideal(h0);
    let nonreduced_warning = hilbert_data_affine(&jac0.with_extra([h0.clone()]), limits)?
        .dimension
        == nvars as i64 - 1;

    let mut rng = SplitMix64::new(germ.seed);
    let mut last_failure = String::from("no frame attempted");
    let mut previous: Option<(SquareMatrix, Box<FrameAnalysis>)> = None;
    let mut attempts_used = 0usize;

    for attempt in 0..germ.caps.attempts.max(2) {
        attempts_used = attempt + 1;
        let matrix = if attempt == 0 {
            germ.coordinates
                .clone()
                .unwrap_or_else(|| SquareMatrix::identity(nvars))
        } else {
            random_unimodular(&mut rng, nvars, 1 + attempt as i64 / 4)
        };
        let moved = h0.linear_change(&matrix)?;
        match analyze_frame(&moved, limits, true, false)? {
            Frame::Rejected(why) => {
                last_failure = why;
            }
            Frame::Accepted(current) => {
                if let Some((first_matrix, first)) = previous.take() {
                    if first.fingerprint() == current.fingerprint() {
                        let mut checks = first.checks.clone();
                        checks.push(CertificateCheck {
                            name: "independently drawn frame reproduces all numbers".into(),
                            passed: true,
                        });
                        return Ok(LeAnalysis {
                            polar: PolarData {
                                strata: first.polar.clone(),
                            },
                            le: LeData {
                                lambda_degrees: first.lambda_degrees.clone(),
                                le_numbers: first.le_numbers.clone(),
                                sigma_dimension: first.sigma_origin,
                                sigma_dimension_global: first.sigma_global,
                            },
                            certificate: GenericityCertificate {
                                matrix: first_matrix,
                                checks,
                                attempts_used,
                            },
                            nonreduced_warning,
                        });
                    }
                    last_failure = "cross-frame disagreement on Lê data".into();
                    previous = Some((matrix, current));
                } else {
                    previous = Some((matrix, current));
                }
            }
        }
    }

    Err(LeError::GenericityNotAchieved {
        attempts: attempts_used,
        last_failure,
    })
}
