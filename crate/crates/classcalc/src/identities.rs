use crate::binomial::binomial;
use num_traits::Zero;
use polyring::Integer;

/// Outcome of the exact verification of the two combinatorial identities
/// behind the inversion formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub kmax: u32,
    pub lmax: u32,
    pub alternating_cases: u64,
    pub alternating_ok: bool,
    pub alternating_counterexample: Option<(u32, u32)>,
    pub kronecker_cases: u64,
    pub kronecker_ok: bool,
    pub kronecker_counterexample: Option<(u32, u32)>,
}

impl IdentityReport {
    pub fn all_ok(&self) -> bool {
        self.alternating_ok && self.kronecker_ok
    }
}

/// Verifies, for all `k <= kmax` and `l <= lmax` (bounds at most 64):
///
/// * the alternating-sum identity
///   `Σ_{j=0}^{l} (-1)^j binom(l+k+1, j+k+1) = binom(l+k, k)`, and
/// * the Kronecker-delta identity
///   `Σ_{v=m}^{s} (-1)^v binom(s, v) binom(v, m) = (-1)^m δ_{s,m}`
///   (with `s` ranging over `0..=kmax` and `m` over `0..=lmax`).
pub fn identity_checks(kmax: u32, lmax: u32) -> IdentityReport {
    assert!(kmax <= 64 && lmax <= 64, "identity bounds are capped at 64");
    let mut report = IdentityReport {
        kmax,
        lmax,
        alternating_cases: 0,
        alternating_ok: true,
        alternating_counterexample: None,
        kronecker_cases: 0,
        kronecker_ok: true,
        kronecker_counterexample: None,
    };

    for k in 0..=kmax {
        for l in 0..=lmax {
            report.alternating_cases += 1;
            let mut sum = Integer::zero();
            for j in 0..=l {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sum += Integer::from(sign) * binomial((l + k + 1) as i64, (j + k + 1) as i64);
            }
            if sum != binomial((l + k) as i64, k as i64) && report.alternating_ok {
                report.alternating_ok = false;
                report.alternating_counterexample = Some((k, l));
            }
        }
    }

    for s in 0..=kmax {
        for m in 0..=lmax {
            report.kronecker_cases += 1;
            let mut sum = Integer::zero();
            for v in m..=s.max(m) {
                let sign = if v % 2 == 0 { 1 } else { -1 };
                sum += Integer::from(sign) * binomial(s as i64, v as i64) * binomial(v as i64, m as i64);
            }
            let expected = if s == m {
                Integer::from(if m % 2 == 0 { 1 } else { -1 })
            } else {
                Integer::zero()
            };
            if sum != expected && report.kronecker_ok {
                report.kronecker_ok = false;
                report.kronecker_counterexample = Some((s, m));
            }
        }
    }

    report
}
