use crate::jobfile::JobFile;
use crate::report::{rational_compact, rational_pq, vector_pq, ReportBuilder};
use classcalc::{
    aluffi_from_milnor, chi_from_strata, coeff_b, coeff_c, csm_from_fj_milnor, csm_from_polar,
    fj_degrees, gamma_from_mu, identity_checks, le_from_milnor, milnor_from_le,
    milnor_from_le_legacy, milnor_from_le_projective, pp_milnor, top_milnor_class, BundleDegree,
    ClassError, ClassVector,
};
use ideals::IdealError;
use lecycles::{
    euler_char_milnor_fiber, le_analysis, projective_le_classes, AnalysisCaps,
    GenericityCertificate, GermInput, LeError,
};
use polyring::SquareMatrix;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    LeNumbers,
    Analyze,
    Transform(String),
    Strata(String),
    Identities,
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub table: bool,
    pub strict: bool,
    pub seed: Option<u64>,
    pub attempts: Option<usize>,
    pub max_pairs: Option<usize>,
    pub max_sat_rounds: Option<usize>,
    pub max_truncation: Option<u32>,
    pub kmax: Option<u32>,
    pub lmax: Option<u32>,
}

#[derive(Debug)]
pub struct RunOutcome {
    pub report: String,
    /// First failed consistency gate, if any; a hard failure under
    /// `--strict`.
    pub gate_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Genericity(String),
    Resource(String),
    Gate(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Genericity(m) => write!(f, "genericity failure: {m}"),
            CliError::Resource(m) => write!(f, "resource cap: {m}"),
            CliError::Gate(m) => write!(f, "consistency gate failed: {m}"),
        }
    }
}

impl From<LeError> for CliError {
    fn from(e: LeError) -> Self {
        match e {
            LeError::GenericityNotAchieved { .. } => CliError::Genericity(e.to_string()),
            LeError::Engine(IdealError::ResourceCap { .. }) => CliError::Resource(e.to_string()),
            LeError::Engine(IdealError::OriginNotIsolated) => CliError::Genericity(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<ClassError> for CliError {
    fn from(e: ClassError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<IdealError> for CliError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::ResourceCap { .. } => CliError::Resource(e.to_string()),
            IdealError::OriginNotIsolated => CliError::Genericity(e.to_string()),
        }
    }
}

/// Run a command against the text of a job file.
pub fn run(cmd: &Command, job_text: &str, opts: &RunOptions) -> Result<RunOutcome, CliError> {
    let job = JobFile::parse(job_text).map_err(CliError::Input)?;
    match cmd {
        Command::LeNumbers => cmd_le_numbers(&job, opts),
        Command::Analyze => cmd_analyze(&job, opts),
        Command::Transform(kind) => cmd_transform(kind, &job, opts),
        Command::Strata(kind) => cmd_strata(kind, &job, opts),
        Command::Identities => cmd_identities(&job, opts),
    }
}

fn caps_from(job: &JobFile, opts: &RunOptions) -> Result<AnalysisCaps, CliError> {
    let mut caps = AnalysisCaps::default();
    if let Some(v) = opts
        .attempts
        .or(job.param_u64("attempts").map_err(CliError::Input)?.map(|v| v as usize))
    {
        caps.attempts = v;
    }
    if let Some(v) = opts
        .max_pairs
        .or(job.param_u64("max_pairs").map_err(CliError::Input)?.map(|v| v as usize))
    {
        caps.limits.max_pairs = v;
    }
    if let Some(v) = opts
        .max_sat_rounds
        .or(job.param_u64("max_sat_rounds").map_err(CliError::Input)?.map(|v| v as usize))
    {
        caps.limits.max_sat_rounds = v;
    }
    if let Some(v) = opts
        .max_truncation
        .or(job.param_u64("max_trunc").map_err(CliError::Input)?.map(|v| v as u32))
    {
        caps.limits.max_truncation = v;
    }
    Ok(caps)
}

fn seed_from(job: &JobFile, opts: &RunOptions) -> Result<u64, CliError> {
    Ok(opts
        .seed
        .or(job.param_u64("seed").map_err(CliError::Input)?)
        .unwrap_or(0))
}

fn header(rb: &mut ReportBuilder, command: &str) {
    rb.section("lecalc-report");
    rb.kv("version", VERSION);
    rb.kv("command", command);
}

fn matrix_line(m: &SquareMatrix) -> String {
    let n = m.size();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| rational_compact(m.get(i, j)))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn emit_certificate(rb: &mut ReportBuilder, cert: &GenericityCertificate) {
    rb.section("certificate");
    rb.kv("attempts-used", cert.attempts_used.to_string());
    rb.kv("matrix", matrix_line(&cert.matrix));
    rb.kv(
        "all-checks-passed",
        if cert.checks.iter().all(|c| c.passed) {
            "true"
        } else {
            "false"
        },
    );
    rb.section("checks");
    for check in &cert.checks {
        rb.kv(if check.passed { "ok" } else { "FAILED" }, &check.name);
    }
    rb.end_section();
    rb.end_section();
}

fn emit_class_vector(rb: &mut ReportBuilder, key: &str, v: &ClassVector, opts: &RunOptions) {
    if opts.table {
        let rows: Vec<(String, String)> = v
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (k.to_string(), rational_compact(c)))
            .collect();
        rb.table(key, ("k", "degree"), &rows);
    } else {
        rb.kv(key, vector_pq(v.coeffs()));
    }
}

fn emit_u64_sequence(rb: &mut ReportBuilder, key: &str, values: &[u64]) {
    rb.kv(
        key,
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
}

fn ring_line(ring: &polyring::RingRef) -> String {
    ring.vars().join(" ")
}

fn cmd_le_numbers(job: &JobFile, opts: &RunOptions) -> Result<RunOutcome, CliError> {
    let poly = job
        .poly
        .clone()
        .ok_or(CliError::Input("le-numbers needs a `poly` line".into()))?;
    let seed = seed_from(job, opts)?;
    let caps = caps_from(job, opts)?;
    let mut germ = GermInput::new(poly.clone()).with_seed(seed);
    germ.caps = caps;
    if let Some(m) = &job.coords {
        germ.coordinates = Some(m.clone());
    }
    let analysis = le_analysis(&germ)?;

    let mut rb = ReportBuilder::new();
    header(&mut rb, "le-numbers");
    rb.section("input");
    rb.kv("ring", ring_line(poly.ring()));
    rb.kv("poly", job.poly_text.clone().unwrap_or_default());
    rb.kv("seed", seed.to_string());
    rb.end_section();

    rb.kv(
        "sigma-dim-at-origin",
        analysis.le.sigma_dimension.to_string(),
    );
    rb.kv(
        "sigma-dim-global",
        analysis.le.sigma_dimension_global.to_string(),
    );
    rb.kv(
        "nonreduced-warning",
        if analysis.nonreduced_warning {
            "true"
        } else {
            "false"
        },
    );

    rb.section("polar-varieties");
    for stratum in &analysis.polar.strata {
        rb.kv(
            &format!("gamma-{}", stratum.k),
            format!("dim {} degree {}", stratum.dimension, stratum.degree),
        );
    }
    rb.end_section();

    emit_u64_sequence(&mut rb, "lambda-degrees", &analysis.le.lambda_degrees);
    emit_u64_sequence(&mut rb, "le-numbers", &analysis.le.le_numbers);
    let n = poly.nvars() - 1;
    rb.kv(
        "euler-char-milnor-fiber",
        euler_char_milnor_fiber(&analysis.le, n).to_string(),
    );
    emit_certificate(&mut rb, &analysis.certificate);
    rb.end_section();
    Ok(RunOutcome {
        report: rb.finish(),
        gate_failure: None,
    })
}

fn cmd_analyze(job: &JobFile, opts: &RunOptions) -> Result<RunOutcome, CliError> {
    let poly = job
        .poly
        .clone()
        .ok_or(CliError::Input("analyze needs a `poly` line".into()))?;
    let seed = seed_from(job, opts)?;
    let caps = caps_from(job, opts)?;
    let ambient = poly.nvars() - 1;
    let dim_z = ambient - 1;

    let ple = projective_le_classes(&poly, seed, &caps)?;
    let degree = u32::try_from(ple.degree)
        .map_err(|_| CliError::Input("hypersurface degree too large".into()))?;
    let d = BundleDegree::new(degree).map_err(|e| CliError::Input(e.to_string()))?;
    let r = ple.singular_dim;

    let lambda = ClassVector::from_coeffs(
        ambient,
        ple.lambda.iter().map(|&v| polyring::rat(v as i64)),
    )
    .map_err(|e| CliError::Input(e.to_string()))?;

    let milnor = milnor_from_le(&lambda, &d, r)?;
    let milnor_lemma = milnor_from_le_projective(&lambda, &d, dim_z)?;
    let legacy = milnor_from_le_legacy(&lambda, &d, r);
    let lambda_back = le_from_milnor(&milnor, &d, r)?;
    let fj = fj_degrees(ambient, &d);
    let csm = csm_from_fj_milnor(&fj, &milnor, dim_z);
    let aluffi = aluffi_from_milnor(&milnor, &d);

    // consistency gates
    let mut gates: Vec<(String, bool)> = Vec::new();
    gates.push(("milnor-route-agreement".into(), milnor == milnor_lemma));
    gates.push(("milnor-support-within-singular-dim".into(), milnor.supported_within(r)));
    gates.push(("le-roundtrip-identity".into(), lambda_back == lambda));
    if r == 0 {
        gates.push((
            "isolated-m0-equals-sum-of-milnor-numbers".into(),
            milnor.get(0) == lambda.get(0),
        ));
    }
    let gate_failure = gates
        .iter()
        .find(|(_, ok)| !ok)
        .map(|(name, _)| name.clone());

    let mut rb = ReportBuilder::new();
    header(&mut rb, "analyze");
    rb.section("input");
    rb.kv("ring", ring_line(poly.ring()));
    rb.kv("poly", job.poly_text.clone().unwrap_or_default());
    rb.kv("seed", seed.to_string());
    rb.end_section();

    rb.kv("ambient-projective-dim", ambient.to_string());
    rb.kv("hypersurface-degree", ple.degree.to_string());
    rb.kv("singular-dim", r.to_string());

    emit_class_vector(&mut rb, "le-classes", &lambda, opts);
    emit_class_vector(&mut rb, "milnor-classes", &milnor, opts);
    emit_class_vector(&mut rb, "milnor-via-projective-expansion", &milnor_lemma, opts);
    emit_class_vector(&mut rb, "milnor-legacy", &legacy, opts);
    emit_class_vector(&mut rb, "fulton-johnson", &fj, opts);
    emit_class_vector(&mut rb, "schwartz-macpherson", &csm, opts);
    emit_class_vector(&mut rb, "aluffi", &aluffi, opts);

    rb.section("gates");
    for (name, ok) in &gates {
        rb.kv(name, if *ok { "pass" } else { "FAIL" });
    }
    rb.end_section();
    emit_certificate(&mut rb, &ple.certificate);
    rb.end_section();

    Ok(RunOutcome {
        report: rb.finish(),
        gate_failure: if opts.strict { gate_failure } else { None },
    })
}

fn require_vector(job: &JobFile, ambient: usize) -> Result<ClassVector, CliError> {
    let entries = job
        .vector
        .clone()
        .ok_or(CliError::Input("this transform needs a `vector` line".into()))?;
    ClassVector::from_coeffs(ambient, entries).map_err(|e| CliError::Input(e.to_string()))
}

fn cmd_transform(kind: &str, job: &JobFile, opts: &RunOptions) -> Result<RunOutcome, CliError> {
    let ambient = job
        .param_u64("N")
        .map_err(CliError::Input)?
        .ok_or(CliError::Input("transform needs param N".into()))? as usize;
    let degree = match job.param_u64("d").map_err(CliError::Input)? {
        Some(v) => BundleDegree::new(
            u32::try_from(v).map_err(|_| CliError::Input("param d too large".into()))?,
        )
        .map_err(|e| CliError::Input(e.to_string()))?,
        None => return Err(CliError::Input("transform needs param d".into())),
    };

    let mut rb = ReportBuilder::new();
    header(&mut rb, &format!("transform {kind}"));
    rb.section("input");
    rb.kv("N", ambient.to_string());
    rb.kv("d", degree.get().to_string());
    if let Some(v) = &job.vector {
        rb.kv("vector", vector_pq(v));
    }
    rb.end_section();

    let dim_z = ambient.saturating_sub(1);
    match kind {
        "milnor-from-le" | "le-from-milnor" | "legacy" => {
            let input = require_vector(job, ambient)?;
            let r = job
                .param_i64("r")
                .map_err(CliError::Input)?
                .unwrap_or(input.support_dim().map(|s| s as i64).unwrap_or(-1));
            rb.kv("r", r.to_string());
            // echo the coefficient tables actually used
            rb.section("coefficients");
            if r >= 0 {
                for k in 0..=r as u32 {
                    for s in 0..=(r as u32 - k) {
                        match kind {
                            "le-from-milnor" => {
                                rb.kv(&format!("B[{k},{s}]"), rational_pq(&coeff_b(k, s, &degree)));
                            }
                            _ => {
                                rb.kv(&format!("C[{k},{s}]"), rational_pq(&coeff_c(k, s, &degree)));
                            }
                        }
                    }
                }
            }
            rb.end_section();
            let output = match kind {
                "milnor-from-le" => milnor_from_le(&input, &degree, r)?,
                "le-from-milnor" => le_from_milnor(&input, &degree, r)?,
                _ => milnor_from_le_legacy(&input, &degree, r),
            };
            emit_class_vector(&mut rb, "output", &output, opts);
        }
        "projective" => {
            let input = require_vector(job, ambient)?;
            rb.kv("dim-z", dim_z.to_string());
            let output = milnor_from_le_projective(&input, &degree, dim_z)?;
            emit_class_vector(&mut rb, "output", &output, opts);
        }
        "aluffi" => {
            let input = require_vector(job, ambient)?;
            let output = aluffi_from_milnor(&input, &degree);
            emit_class_vector(&mut rb, "output", &output, opts);
        }
        "fj" => {
            let output = fj_degrees(ambient, &degree);
            emit_class_vector(&mut rb, "output", &output, opts);
        }
        "csm-from-fj" => {
            let milnor = require_vector(job, ambient)?;
            let fj = fj_degrees(ambient, &degree);
            emit_class_vector(&mut rb, "fulton-johnson", &fj, opts);
            let output = csm_from_fj_milnor(&fj, &milnor, dim_z);
            emit_class_vector(&mut rb, "output", &output, opts);
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown transform kind `{other}` (expected milnor-from-le, le-from-milnor, \
                 legacy, projective, aluffi, fj, csm-from-fj)"
            )))
        }
    }
    rb.end_section();
    Ok(RunOutcome {
        report: rb.finish(),
        gate_failure: None,
    })
}

fn cmd_strata(kind: &str, job: &JobFile, opts: &RunOptions) -> Result<RunOutcome, CliError> {
    let table = job
        .table
        .clone()
        .ok_or(CliError::Input("strata commands need stratum blocks".into()))?;

    let mut rb = ReportBuilder::new();
    header(&mut rb, &format!("strata {kind}"));
    rb.kv("strata-count", table.strata.len().to_string());

    match kind {
        "pp-milnor" => {
            let ambient = job
                .param_u64("N")
                .map_err(CliError::Input)?
                .ok_or(CliError::Input("pp-milnor needs param N".into()))?
                as usize;
            let degree = job
                .param_u64("d")
                .map_err(CliError::Input)?
                .ok_or(CliError::Input("pp-milnor needs param d".into()))?;
            let d = BundleDegree::new(
                u32::try_from(degree).map_err(|_| CliError::Input("param d too large".into()))?,
            )
            .map_err(|e| CliError::Input(e.to_string()))?;
            let gamma = gamma_from_mu(&table, ambient.saturating_sub(1))?;
            rb.section("gamma");
            for (id, value) in &gamma {
                rb.kv(id, rational_pq(value));
            }
            rb.end_section();
            let output = pp_milnor(&table, &d, ambient)?;
            emit_class_vector(&mut rb, "milnor-classes", &output, opts);
        }
        "csm-from-polar" => {
            let ambient = job
                .param_u64("N")
                .map_err(CliError::Input)?
                .ok_or(CliError::Input("csm-from-polar needs param N".into()))?
                as usize;
            let output = csm_from_polar(&table, ambient)?;
            emit_class_vector(&mut rb, "schwartz-macpherson", &output, opts);
        }
        "gamma" => {
            let ambient = job
                .param_u64("N")
                .map_err(CliError::Input)?
                .ok_or(CliError::Input("gamma needs param N".into()))? as usize;
            let gamma = gamma_from_mu(&table, ambient.saturating_sub(1))?;
            rb.section("gamma");
            for (id, value) in &gamma {
                rb.kv(id, rational_pq(value));
            }
            rb.end_section();
        }
        "top-class" => {
            let ambient = job
                .param_u64("N")
                .map_err(CliError::Input)?
                .ok_or(CliError::Input("top-class needs param N".into()))?
                as usize;
            let default_r = table
                .strata
                .iter()
                .filter(|s| s.mu_perp.is_some())
                .map(|s| s.dim)
                .max();
            let r = match job.param_u64("r").map_err(CliError::Input)? {
                Some(v) => v as usize,
                None => default_r.ok_or(CliError::Input(
                    "top-class needs param r or at least one stratum with mu_perp".into(),
                ))?,
            };
            rb.kv("r", r.to_string());
            let output = top_milnor_class(&table, r, ambient)?;
            emit_class_vector(&mut rb, "top-milnor-class", &output, opts);
        }
        "chi" => {
            let chi = chi_from_strata(&table)?;
            rb.kv("euler-characteristic", rational_pq(&chi));
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown strata kind `{other}` (expected pp-milnor, csm-from-polar, gamma, \
                 top-class, chi)"
            )))
        }
    }
    rb.end_section();
    Ok(RunOutcome {
        report: rb.finish(),
        gate_failure: None,
    })
}

fn cmd_identities(job: &JobFile, opts: &RunOptions) -> Result<RunOutcome, CliError> {
    let kmax = opts
        .kmax
        .or(job.param_u64("kmax").map_err(CliError::Input)?.map(|v| v as u32))
        .unwrap_or(32);
    let lmax = opts
        .lmax
        .or(job.param_u64("lmax").map_err(CliError::Input)?.map(|v| v as u32))
        .unwrap_or(32);
    if kmax > 64 || lmax > 64 {
        return Err(CliError::Input("identity bounds are capped at 64".into()));
    }
    let report = identity_checks(kmax, lmax);

    let mut rb = ReportBuilder::new();
    header(&mut rb, "identities");
    rb.kv("kmax", kmax.to_string());
    rb.kv("lmax", lmax.to_string());
    rb.section("alternating-binomial-identity");
    rb.kv("cases", report.alternating_cases.to_string());
    rb.kv("result", if report.alternating_ok { "pass" } else { "FAIL" });
    if let Some((k, l)) = report.alternating_counterexample {
        rb.kv("first-counterexample", format!("k={k} l={l}"));
    }
    rb.end_section();
    rb.section("kronecker-delta-identity");
    rb.kv("cases", report.kronecker_cases.to_string());
    rb.kv("result", if report.kronecker_ok { "pass" } else { "FAIL" });
    if let Some((s, m)) = report.kronecker_counterexample {
        rb.kv("first-counterexample", format!("s={s} m={m}"));
    }
    rb.end_section();
    rb.kv("all-identities", if report.all_ok() { "pass" } else { "FAIL" });
    rb.end_section();

    let gate_failure = if report.all_ok() {
        None
    } else {
        Some("combinatorial identity failed".into())
    };
    Ok(RunOutcome {
        report: rb.finish(),
        gate_failure,
    })
}
