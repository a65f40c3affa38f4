//! Acceptance suite: the ten criteria the workbench must meet, every check
//! exact (tolerance zero). Each test prints one PASS line; a failure
//! panics with the criterion number.

use classcalc::{
    csm_from_fj_milnor, csm_from_polar, fj_degrees, gamma_from_mu, identity_checks,
    le_from_milnor, mather_from_polar, milnor_from_le, milnor_from_le_legacy,
    milnor_from_le_projective, pp_milnor, BundleDegree, ClassVector, Stratum, StratumTable,
};
use ideals::{normal_form, saturate, Ideal, Limits};
use lecycles::{
    euler_char_milnor_fiber, le_analysis, projective_le_classes, AnalysisCaps, GermInput,
    SplitMix64,
};
use polyring::{parse_poly, rat, ratio, Monomial, Polynomial, RingRef, RingSpec};
use std::time::Instant;

fn ring(names: &[&str]) -> RingRef {
    RingSpec::degrevlex(names.to_vec()).unwrap()
}

fn caps() -> AnalysisCaps {
    AnalysisCaps::default()
}

fn d(v: u32) -> BundleDegree {
    BundleDegree::new(v).unwrap()
}

fn lambda_vector(ambient: usize, degrees: &[u64]) -> ClassVector {
    ClassVector::from_coeffs(ambient, degrees.iter().map(|&v| rat(v as i64))).unwrap()
}

/// Criterion 1: the pair of hyperplanes in P^4, full pipeline, both routes.
#[test]
fn acceptance_01_pair_of_hyperplanes_full_pipeline() {
    let started = Instant::now();
    let r5 = ring(&["x0", "x1", "x2", "x3", "x4"]);
    let h = parse_poly("x0*x1", &r5).unwrap();
    let ple = projective_le_classes(&h, 7, &caps()).unwrap();
    assert_eq!(ple.singular_dim, 2);
    assert_eq!(ple.lambda, vec![0, 0, 1, 0, 0], "Lambda(Z) = (0,0,1)");

    let lambda = lambda_vector(4, &ple.lambda);
    let expected_m = ClassVector::from_ints(4, &[1, 1, 1]);
    let m_c = milnor_from_le(&lambda, &d(2), 2).unwrap();
    let m_lemma = milnor_from_le_projective(&lambda, &d(2), 3).unwrap();
    assert_eq!(m_c, expected_m, "coefficient route");
    assert_eq!(m_lemma, expected_m, "projective product-bundle route");

    let alpha = classcalc::aluffi_from_milnor(&m_c, &d(2));
    assert_eq!(alpha, ClassVector::from_ints(4, &[3, 3, 1]), "Aluffi class");

    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 2.0,
        "pipeline took {elapsed:?}, budget is 2 s"
    );
    println!("ACCEPTANCE 1 PASS: x0*x1 in P^4 gives Lambda=(0,0,1), M=(1,1,1) by both routes, alpha=(3,3,1) in {elapsed:?}");
}

/// Criterion 2: Lê numbers of the Whitney umbrella and a Morse point.
#[test]
fn acceptance_02_le_numbers() {
    let r = ring(&["x", "y", "z"]);
    let umbrella = le_analysis(&GermInput::new(parse_poly("y^2 - x^2*z", &r).unwrap()).with_seed(2))
        .unwrap();
    assert_eq!(umbrella.le.le_numbers, vec![2, 1]);
    assert_eq!(euler_char_milnor_fiber(&umbrella.le, 2), 2);

    let morse =
        le_analysis(&GermInput::new(parse_poly("x^2 + y^2 + z^2", &r).unwrap()).with_seed(2))
            .unwrap();
    assert_eq!(morse.le.le_numbers, vec![1]);
    println!("ACCEPTANCE 2 PASS: umbrella lambda=(2,1) with chi(F)=2; Morse point lambda=(1)");
}

/// Criterion 3: the Brieskorn sweep against the closed form.
#[test]
fn acceptance_03_brieskorn_sweep() {
    let r = ring(&["x", "y", "z"]);
    let mut cases = 0;
    for a in 2u32..=4 {
        for b in 2u32..=4 {
            for c in 2u32..=4 {
                let h = parse_poly(&format!("x^{a} + y^{b} + z^{c}"), &r).unwrap();
                let analysis = le_analysis(&GermInput::new(h).with_seed(5)).unwrap();
                let mu = ((a - 1) * (b - 1) * (c - 1)) as u64;
                assert_eq!(
                    analysis.le.le_numbers,
                    vec![mu],
                    "x^{a}+y^{b}+z^{c}: lambda^0 = mu and higher Le numbers vanish"
                );
                cases += 1;
            }
        }
    }
    assert_eq!(cases, 27);
    println!("ACCEPTANCE 3 PASS: all 27 Brieskorn germs give lambda^0=(a-1)(b-1)(c-1), lambda^k=0 for k>=1");
}

/// Criterion 4: isolated-singularity Milnor class of the quadric cone and
/// smooth surfaces in P^3.
#[test]
fn acceptance_04_isolated_milnor_class_and_smooth_surfaces() {
    // quadric cone
    let r4 = ring(&["x0", "x1", "x2", "x3"]);
    let cone = parse_poly("x1*x2 - x0^2", &r4).unwrap();
    let ple = projective_le_classes(&cone, 7, &caps()).unwrap();
    assert_eq!(ple.lambda, vec![1, 0, 0, 0]);
    let lambda = lambda_vector(3, &ple.lambda);
    let m = milnor_from_le(&lambda, &d(2), 0).unwrap();
    assert_eq!(m, ClassVector::from_ints(3, &[1]), "M = (1)");
    let fj = fj_degrees(3, &d(2));
    let csm = csm_from_fj_milnor(&fj, &m, 2);
    assert_eq!(fj.get(0), rat(4));
    assert_eq!(csm.get(0), rat(3), "chi of the quadric cone");

    // smooth surfaces of degree 1..4: M = 0 and chi = d^3 - 4d^2 + 6d
    let expected_chi = [3i64, 4, 9, 24];
    for (i, deg) in (1u32..=4).enumerate() {
        let h = smooth_surface(&r4, deg);
        let ple = projective_le_classes(&h, 3, &caps()).unwrap();
        assert_eq!(ple.singular_dim, -1, "degree {deg} surface is smooth");
        let m = ClassVector::zero(3);
        let csm = csm_from_fj_milnor(&fj_degrees(3, &d(deg)), &m, 2);
        assert_eq!(csm.get(0), rat(expected_chi[i]), "degree {deg}");
    }
    println!("ACCEPTANCE 4 PASS: quadric cone M=(1), chi=4-1=3; smooth surfaces d=1..4 give M=0, chi=3,4,9,24");
}

fn smooth_surface(r4: &RingRef, deg: u32) -> Polynomial {
    // Fermat-type hypersurfaces are smooth in every degree
    let terms = ["x0", "x1", "x2", "x3"]
        .iter()
        .map(|v| format!("{v}^{deg}"))
        .collect::<Vec<_>>()
        .join(" + ");
    parse_poly(&terms, r4).unwrap()
}

/// Criterion 5: the transform round trip on 200 seeded random vectors.
#[test]
fn acceptance_05_round_trip_200_vectors() {
    let mut rng = SplitMix64::new(20240 + 8);
    for case in 0..200 {
        let r = (rng.below(6)) as usize; // 0..=5
        let deg = 1 + rng.below(8) as u32; // 1..=8
        let ambient = 6usize;
        let coeffs: Vec<polyring::Rational> = (0..=r)
            .map(|_| {
                let numer = rng.below(201) as i64 - 100;
                let denom = 1 + rng.below(12) as i64;
                ratio(numer, denom)
            })
            .collect();
        let v = ClassVector::from_coeffs(ambient, coeffs).unwrap();
        let dd = d(deg);
        let m = milnor_from_le(&v, &dd, r as i64).unwrap();
        let back = le_from_milnor(&m, &dd, r as i64).unwrap();
        assert_eq!(back, v, "case {case}: le->milnor->le, r={r}, d={deg}");
    }
    println!("ACCEPTANCE 5 PASS: le_from_milnor . milnor_from_le = id on 200 random vectors (r<=5, d in 1..8), exactly");
}

/// Criterion 6: the combinatorial identities up to 32, exactly.
#[test]
fn acceptance_06_combinatorial_identities() {
    let report = identity_checks(32, 32);
    assert!(report.alternating_ok, "{report:?}");
    assert!(report.kronecker_ok, "{report:?}");
    println!(
        "ACCEPTANCE 6 PASS: alternating-sum identity ({} cases) and Kronecker identity ({} cases) hold exactly",
        report.alternating_cases, report.kronecker_cases
    );
}

/// Criterion 7: the legacy formula is demonstrably different yet agrees
/// on dimension-0 support.
#[test]
fn acceptance_07_legacy_regression() {
    let lambda = ClassVector::from_ints(4, &[0, 0, 1]);
    let legacy = milnor_from_le_legacy(&lambda, &d(2), 2);
    assert_eq!(legacy.get(0), rat(4), "legacy M_0 = 4 on the pair of hyperplanes");
    let corrected = milnor_from_le(&lambda, &d(2), 2).unwrap();
    assert_eq!(corrected.get(0), rat(1), "corrected M_0 = 1");
    assert_ne!(legacy, corrected);

    let mut rng = SplitMix64::new(77);
    for _ in 0..50 {
        let deg = 1 + rng.below(8) as u32;
        let value = ratio(rng.below(101) as i64 - 50, 1 + rng.below(9) as i64);
        let v = ClassVector::from_coeffs(5, vec![value]).unwrap();
        let a = milnor_from_le(&v, &d(deg), 0).unwrap();
        let b = milnor_from_le_legacy(&v, &d(deg), 0);
        assert_eq!(a, b, "dimension-0 support agreement");
    }
    println!("ACCEPTANCE 7 PASS: legacy formula gives M_0=4 (not 1) on the P^4 example and agrees exactly on dimension-0 support");
}

/// Criterion 8: smooth P^m polar tables give binomial CSM degrees via both
/// the Piene transform and the stratified transform.
#[test]
fn acceptance_08_polar_to_csm_smooth() {
    for m in 0usize..=6 {
        let ambient = m + 1;
        let mut polar = vec![rat(0); m + 1];
        polar[m] = rat(1);

        let mather = mather_from_polar(&polar, m, ambient).unwrap();

        let mut stratum = Stratum::new("pm", m);
        stratum.eta = Some(rat(1));
        stratum.polar_degrees = Some(polar.clone());
        let table = StratumTable::new(vec![stratum]).unwrap();
        let csm = csm_from_polar(&table, ambient).unwrap();

        for k in 0..=m {
            let expected = classcalc::binomial(m as i64 + 1, k as i64 + 1);
            let expected = polyring::Rational::from_integer(expected);
            assert_eq!(mather.get(k), expected, "Piene route, P^{m}, k={k}");
            assert_eq!(csm.get(k), expected, "stratified route, P^{m}, k={k}");
        }
    }
    println!("ACCEPTANCE 8 PASS: smooth P^m (m<=6) gives CSM degrees binom(m+1,k+1) via both Piene and the stratified transform");
}

/// Criterion 9: the Parusiński-Pragacz formula on hand-built stratum tables
/// equals the Lê-route Milnor class.
#[test]
fn acceptance_09_pp_formula_equivalence() {
    // the P^4 example
    let mut sing = Stratum::new("sing", 2);
    sing.chi_fiber = Some(0);
    sing.csm_closure = Some(ClassVector::from_ints(4, &[3, 3, 1]));
    let table = StratumTable::new(vec![sing]).unwrap();
    let via_pp = pp_milnor(&table, &d(2), 4).unwrap();

    let lambda = ClassVector::from_ints(4, &[0, 0, 1]);
    let via_le = milnor_from_le(&lambda, &d(2), 2).unwrap();
    assert_eq!(via_pp, via_le, "P^4 example");

    // the quadric cone: point stratum with chi(F) = 2, mu = (-1)^2(2-1) = 1
    let mut pt = Stratum::new("pt", 0);
    pt.chi_fiber = Some(2);
    pt.csm_closure = Some(ClassVector::from_ints(3, &[1]));
    let table = StratumTable::new(vec![pt]).unwrap();
    let via_pp = pp_milnor(&table, &d(2), 3).unwrap();
    let via_le = milnor_from_le(&ClassVector::from_ints(3, &[1]), &d(2), 0).unwrap();
    assert_eq!(via_pp, via_le, "quadric cone");

    // gamma bookkeeping on the same tables
    let gamma = gamma_from_mu(&table, 2).unwrap();
    assert_eq!(gamma["pt"], rat(1));
    println!("ACCEPTANCE 9 PASS: pp_milnor on hand-built stratum tables equals the Le-route Milnor class for the P^4 example and the quadric cone");
}

/// Criterion 10: the engine property suite on the corpus.
#[test]
fn acceptance_10_engine_property_suite() {
    let lims = Limits::default();
    let r3 = ring(&["x", "y", "z"]);

    // GB confluence: randomized reduction order agrees with the
    // deterministic normal form
    let corpus_ideals = [
        vec!["x*y - z^2", "y^2 - x*z"],
        vec!["x^2 + y^2 - 1", "x - y"],
        vec!["y^2 - x^2*z", "x*z"],
    ];
    let mut rng = SplitMix64::new(4242);
    for gens in &corpus_ideals {
        let ideal = Ideal::new(&r3, gens.iter().map(|g| parse_poly(g, &r3).unwrap()));
        let gb = ideal.gb(&lims).unwrap();
        for _ in 0..8 {
            let f = random_poly(&r3, &mut rng);
            let nf = normal_form(&f, gb);
            let shuffled = shuffled_reduce(&f, gb, &mut rng);
            assert_eq!(nf, shuffled, "confluence on {gens:?}");
        }
    }

    // saturation idempotence on the corpus polar setups
    for (gens, by) in [
        (vec!["x*z", "y"], vec!["x", "y"]),
        (vec!["x^2", "x*y"], vec!["y"]),
        (vec!["y^2 - x^2*z"], vec!["x", "y", "z"]),
    ] {
        let i = Ideal::new(&r3, gens.iter().map(|g| parse_poly(g, &r3).unwrap()));
        let j = Ideal::new(&r3, by.iter().map(|g| parse_poly(g, &r3).unwrap()));
        let s1 = saturate(&i, &j, &lims).unwrap();
        let s2 = saturate(&s1, &j, &lims).unwrap();
        assert!(s1.equal(&s2, &lims).unwrap(), "idempotence on {gens:?}");
        for g in i.generators() {
            assert!(s1.contains(g, &lims).unwrap(), "contains input on {gens:?}");
        }
    }

    // coordinate-change invariance: two accepted seeds agree
    for text in ["y^2 - x^2*z", "x^2*y", "x^3 + y^4 + z^2"] {
        let a = le_analysis(&GermInput::new(parse_poly(text, &r3).unwrap()).with_seed(1)).unwrap();
        let b =
            le_analysis(&GermInput::new(parse_poly(text, &r3).unwrap()).with_seed(777)).unwrap();
        assert_eq!(a.le, b.le, "seed invariance on {text}");
    }

    // Milnor class support bound over the projective corpus
    let corpus: [(&[&str], &str, u32); 3] = [
        (&["x0", "x1", "x2", "x3", "x4"], "x0*x1", 2),
        (&["x0", "x1", "x2", "x3"], "x1*x2 - x0^2", 2),
        (&["x0", "x1", "x2", "x3"], "x0*x1*x2 - x3^3", 3),
    ];
    for (vars, text, deg) in corpus {
        let rr = ring(vars);
        let h = parse_poly(text, &rr).unwrap();
        let ple = projective_le_classes(&h, 9, &caps()).unwrap();
        let ambient = vars.len() - 1;
        let lambda = lambda_vector(ambient, &ple.lambda);
        let m = milnor_from_le(&lambda, &d(deg), ple.singular_dim).unwrap();
        assert!(
            m.supported_within(ple.singular_dim),
            "support bound for {text}"
        );
    }
    println!("ACCEPTANCE 10 PASS: GB confluence, saturation idempotence, seed invariance of lambda, and the Milnor support bound all hold on the corpus");
}

fn random_poly(r: &RingRef, rng: &mut SplitMix64) -> Polynomial {
    let mut p = Polynomial::zero(r);
    for _ in 0..4 {
        let exps: Vec<u32> = (0..3).map(|_| rng.below(3) as u32).collect();
        let coeff = rat(rng.below(11) as i64 - 5);
        p.add_term(Monomial::new(exps), coeff);
    }
    p
}

/// Reduce with randomized term and reducer choices; must agree with the
/// deterministic normal form for a Gröbner basis.
fn shuffled_reduce(
    f: &Polynomial,
    gb: &ideals::GroebnerBasis,
    rng: &mut SplitMix64,
) -> Polynomial {
    let order = gb.order();
    let mut work = f.clone();
    loop {
        let mut options: Vec<(Monomial, polyring::Rational, usize)> = Vec::new();
        for (m, c) in work.terms() {
            for (gi, g) in gb.elements().iter().enumerate() {
                let (lm, _) = g.leading_term(order).unwrap();
                if lm.divides(m) {
                    options.push((m.clone(), c.clone(), gi));
                }
            }
        }
        if options.is_empty() {
            return work;
        }
        let pick = rng.below(options.len() as u64) as usize;
        let (m, c, gi) = options[pick].clone();
        let g = &gb.elements()[gi];
        let (lm, lc) = g.leading_term(order).unwrap();
        let q = lm.try_div(&m).unwrap();
        let coeff = -(&c / lc);
        work.add_scaled_assign(g, &q, &coeff);
    }
}
