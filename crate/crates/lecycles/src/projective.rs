use crate::analysis::{analyze_frame, critical_ideal, AnalysisCaps, CertificateCheck, Frame, GenericityCertificate};
use crate::rng::{random_unimodular, SplitMix64};
use crate::LeError;
use ideals::{hilbert_data_projective, saturate, Ideal};
use polyring::{PolyError, Polynomial, SquareMatrix};

/// Global Lê class degrees of a projective hypersurface.
#[derive(Debug, Clone)]
pub struct ProjectiveLe {
    /// Ambient projective dimension `N`.
    pub ambient: usize,
    /// Degree of the defining polynomial.
    pub degree: u64,
    /// Projective dimension of the singular locus (`-1` when smooth).
    pub singular_dim: i64,
    /// Degrees of `Λ_k(Z)` for `k = 0..=N` (zero above the singular
    /// dimension).
    pub lambda: Vec<u64>,
    pub certificate: GenericityCertificate,
}

/// Lê class degrees of `Z = V(H) ⊂ P^N` for a reduced homogeneous `H`.
///
/// A seeded random homogeneous linear change is applied until the chart
/// `x_N = 1` is generic: no component of the singular scheme may lie in the
/// hyperplane at infinity (checked by saturating the Jacobian ideal by
/// `x_N`), the chart analysis must pass its dimension certificate, and a
/// second independently drawn frame must reproduce the same degrees. The
/// Lê cycles of the chart equation are Massey's; their projective closure
/// degrees assemble the global classes.
pub fn projective_le_classes(
    h: &Polynomial,
    seed: u64,
    caps: &AnalysisCaps,
) -> Result<ProjectiveLe, LeError> {
    if h.is_zero() || h.is_constant() {
        return Err(LeError::NotAGerm("a nonconstant polynomial is required"));
    }
    if !h.is_homogeneous() {
        return Err(LeError::Poly(PolyError::NotHomogeneous));
    }
    let ring = h.ring().clone();
    let nvars = ring.nvars();
    let ambient = nvars - 1;
    let limits = &caps.limits;
    let degree = h.total_degree();

    let jac = critical_ideal(h);
    let sing = hilbert_data_projective(&jac, limits)?;
    let r = sing.dimension;
    if r > ambient as i64 - 2 {
        // a codimension-one singular locus means a repeated factor
        return Err(LeError::NonReducedInput);
    }
    if r < 0 {
        return Ok(ProjectiveLe {
            ambient,
            degree,
            singular_dim: -1,
            lambda: vec![0; ambient + 1],
            certificate: GenericityCertificate {
                matrix: SquareMatrix::identity(nvars),
                checks: vec![CertificateCheck {
                    name: "singular scheme empty (smooth hypersurface)".into(),
                    passed: true,
                }],
                attempts_used: 0,
            },
        });
    }

    let mut rng = SplitMix64::new(seed);
    let mut last_failure = String::from("no chart attempted");
    let mut previous: Option<(SquareMatrix, Vec<CertificateCheck>, Vec<u64>)> = None;
    let mut attempts_used = 0usize;

    for attempt in 0..caps.attempts.max(2) {
        attempts_used = attempt + 1;
        let matrix = if attempt == 0 {
            SquareMatrix::identity(nvars)
        } else {
            random_unimodular(&mut rng, nvars, 1 + attempt as i64 / 4)
        };
        let moved = h.linear_change(&matrix)?;
        let moved_jac = critical_ideal(&moved);

        // the linear change must not disturb the singular profile
        let profile = hilbert_data_projective(&moved_jac, limits)?;
        if profile != sing {
            last_failure = format!(
                "singular profile changed under coordinate change (got {}, {})",
                profile.dimension, profile.degree
            );
            continue;
        }

        // no component of the singular scheme at infinity: saturating the
        // Jacobian ideal by x_N must not change its dimension profile
        let at_infinity = Ideal::new(
            &ring,
            [Polynomial::variable(&ring, ambient).expect("index in range")],
        );
        let saturated = saturate(&moved_jac, &at_infinity, limits)?;
        let sat_profile = hilbert_data_projective(&saturated, limits)?;
        let mut checks = vec![CertificateCheck {
            name: format!(
                "no singular component in the hyperplane at infinity (profile ({}, {}) vs ({}, {}))",
                sat_profile.dimension, sat_profile.degree, sing.dimension, sing.degree
            ),
            passed: sat_profile == sing,
        }];
        if sat_profile != sing {
            last_failure = checks.pop().expect("just pushed").name;
            continue;
        }

        let chart = moved.dehomogenize(ambient)?;
        match analyze_frame(&chart, limits, false, true)? {
            Frame::Rejected(why) => {
                last_failure = why;
            }
            Frame::Accepted(frame) => {
                let complete = frame.sigma_global == r;
                checks.extend(frame.checks.iter().cloned());
                checks.push(CertificateCheck {
                    name: format!(
                        "chart sees the full singular locus (dim {} vs {r})",
                        frame.sigma_global
                    ),
                    passed: complete,
                });
                if !complete {
                    last_failure = checks.last().expect("just pushed").name.clone();
                    continue;
                }
                let mut lambda = frame.lambda_degrees.clone();
                lambda.resize(ambient + 1, 0);

                if let Some((first_matrix, first_checks, first_lambda)) = previous.take() {
                    if first_lambda == lambda {
                        let mut all_checks = first_checks;
                        all_checks.push(CertificateCheck {
                            name: "independently drawn chart reproduces all degrees".into(),
                            passed: true,
                        });
                        return Ok(ProjectiveLe {
                            ambient,
                            degree,
                            singular_dim: r,
                            lambda,
                            certificate: GenericityCertificate {
                                matrix: first_matrix,
                                checks: all_checks,
                                attempts_used,
                            },
                        });
                    }
                    last_failure = "cross-chart disagreement on Lê degrees".into();
                    previous = Some((matrix, checks, lambda));
                } else {
                    previous = Some((matrix, checks, lambda));
                }
            }
        }
    }

    Err(LeError::GenericityNotAchieved {
        attempts: attempts_used,
        last_failure,
    })
}
