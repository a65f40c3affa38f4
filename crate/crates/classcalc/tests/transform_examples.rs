//! Worked examples for every transform: the two hypersurfaces that anchor
//! the sign conventions (the degree-2 pair of hyperplanes in P^4 and the
//! quadric cone in P^3), smooth consistency checks, and the legacy
//! regression.

use classcalc::{
    aluffi_from_milnor, cap_c1, chi_from_strata, csm_from_fj_milnor, csm_from_polar, fj_degrees,
    gamma_from_mu, le_from_milnor, mather_from_polar, milnor_from_le, milnor_from_le_legacy,
    milnor_from_le_projective, pp_milnor, top_milnor_class, BundleDegree, ClassError, ClassVector,
    Stratum, StratumTable,
};
use polyring::{rat, ratio};

fn d(v: u32) -> BundleDegree {
    BundleDegree::new(v).unwrap()
}

#[test]
fn cap_product_examples() {
    // c1(O(2))^2 on a plane has degree 4
    let v = ClassVector::from_ints(4, &[0, 0, 1]);
    let capped = cap_c1(&v, &d(2), 2);
    assert_eq!(capped.get(0), rat(4));
    assert!(capped.get(1).eq(&rat(0)));

    // s = 0 is the identity
    assert_eq!(cap_c1(&v, &d(2), 0), v);

    // zero in, zero out
    let z = ClassVector::zero(4);
    assert!(cap_c1(&z, &d(3), 1).is_zero());
}

#[test]
fn pair_of_hyperplanes_in_p4_both_routes() {
    // Z = V(x0 x1) in P^4: Lê class (0,0,1), Milnor class (1,1,1)
    let lambda = ClassVector::from_ints(4, &[0, 0, 1]);
    let expected_m = ClassVector::from_ints(4, &[1, 1, 1]);

    let m = milnor_from_le(&lambda, &d(2), 2).unwrap();
    assert_eq!(m, expected_m);

    let m_proj = milnor_from_le_projective(&lambda, &d(2), 3).unwrap();
    assert_eq!(m_proj, expected_m);

    // the inverse recovers the Lê class
    let back = le_from_milnor(&m, &d(2), 2).unwrap();
    assert_eq!(back, lambda);

    // Aluffi class
    let alpha = aluffi_from_milnor(&m, &d(2));
    assert_eq!(alpha, ClassVector::from_ints(4, &[3, 3, 1]));

    // Fulton-Johnson and the Schwartz-MacPherson reconstruction (dim Z = 3):
    // c^SM must come out (5, 9, 7, 2), the inclusion–exclusion values for
    // two copies of P^3 glued along a P^2.
    let fj = fj_degrees(4, &d(2));
    assert_eq!(fj, ClassVector::from_ints(4, &[4, 8, 6, 2]));
    let csm = csm_from_fj_milnor(&fj, &m, 3);
    assert_eq!(csm, ClassVector::from_ints(4, &[5, 9, 7, 2]));
}

#[test]
fn isolated_case_and_zero_vectors() {
    // isolated singularities: M_0 = sum of Milnor numbers, any degree
    for deg in 1..=6 {
        let lambda = ClassVector::from_ints(3, &[7]);
        let m = milnor_from_le(&lambda, &d(deg), 0).unwrap();
        assert_eq!(m, lambda, "C_(0,0)(d) must be 1");
    }
    // zero maps to zero
    let z = ClassVector::zero(3);
    assert!(milnor_from_le(&z, &d(4), 2).unwrap().is_zero());
    assert!(le_from_milnor(&z, &d(4), 2).unwrap().is_zero());
    assert!(milnor_from_le_projective(&z, &d(4), 2).unwrap().is_zero());
}

#[test]
fn support_violation_is_an_error() {
    let lambda = ClassVector::from_ints(4, &[0, 0, 1]);
    match milnor_from_le(&lambda, &d(2), 1) {
        Err(ClassError::SupportViolation { support: 2, bound: 1 }) => {}
        other => panic!("expected support violation, got {other:?}"),
    }
}

#[test]
fn quadric_cone_chain() {
    // quadric cone in P^3: one A_1 point, M = (1), c^FJ_0 = 4, chi = 3
    let lambda = ClassVector::from_ints(3, &[1]);
    let m = milnor_from_le(&lambda, &d(2), 0).unwrap();
    assert_eq!(m, ClassVector::from_ints(3, &[1]));
    let fj = fj_degrees(3, &d(2));
    assert_eq!(fj.get(0), rat(4));
    let csm = csm_from_fj_milnor(&fj, &m, 2);
    assert_eq!(csm.get(0), rat(3), "chi of the projective quadric cone");
}

#[test]
fn smooth_surface_euler_characteristics() {
    // smooth degree-d surfaces in P^3: chi = d^3 - 4 d^2 + 6 d
    let expected = [3i64, 4, 9, 24];
    for (i, deg) in (1u32..=4).enumerate() {
        let fj = fj_degrees(3, &d(deg));
        let m = ClassVector::zero(3);
        let csm = csm_from_fj_milnor(&fj, &m, 2);
        assert_eq!(csm.get(0), rat(expected[i]), "degree {deg}");
        let dd = deg as i64;
        assert_eq!(csm.get(0), rat(dd * dd * dd - 4 * dd * dd + 6 * dd));
    }
}

#[test]
fn legacy_formula_demonstrates_the_correction() {
    let lambda = ClassVector::from_ints(4, &[0, 0, 1]);
    let legacy = milnor_from_le_legacy(&lambda, &d(2), 2);
    assert_eq!(legacy.get(0), rat(4), "the legacy formula gives 4, not 1");

    // but it agrees with the corrected transform on dimension-0 support
    for deg in 1..=5 {
        let iso = ClassVector::from_ints(4, &[5]);
        let corrected = milnor_from_le(&iso, &d(deg), 0).unwrap();
        let old = milnor_from_le_legacy(&iso, &d(deg), 0);
        assert_eq!(corrected, old);
    }

    // zero maps to zero
    assert!(milnor_from_le_legacy(&ClassVector::zero(4), &d(2), 2).is_zero());
}

#[test]
fn mather_classes_of_small_projective_spaces() {
    // P^m has polar degrees (0,...,0,1) and Mather = Chern = (1+H)^{m+1}
    let p2 = mather_from_polar(&[rat(0), rat(0), rat(1)], 2, 3).unwrap();
    assert_eq!(p2, ClassVector::from_ints(3, &[3, 3, 1]));

    let p1 = mather_from_polar(&[rat(0), rat(1)], 1, 3).unwrap();
    assert_eq!(p1, ClassVector::from_ints(3, &[2, 1]));

    let point = mather_from_polar(&[rat(1)], 0, 3).unwrap();
    assert_eq!(point, ClassVector::from_ints(3, &[1]));
}

#[test]
fn csm_from_polar_single_smooth_stratum() {
    let mut s = Stratum::new("p2", 2);
    s.eta = Some(rat(1));
    s.polar_degrees = Some(vec![rat(0), rat(0), rat(1)]);
    let table = StratumTable::new(vec![s]).unwrap();
    let csm = csm_from_polar(&table, 3).unwrap();
    assert_eq!(csm, ClassVector::from_ints(3, &[3, 3, 1]));

    let mut pt = Stratum::new("pt", 0);
    pt.eta = Some(rat(1));
    pt.polar_degrees = Some(vec![rat(1)]);
    let table = StratumTable::new(vec![pt]).unwrap();
    assert_eq!(
        csm_from_polar(&table, 3).unwrap(),
        ClassVector::from_ints(3, &[1])
    );

    // eta = 0 everywhere: the zero constructible function
    let mut z = Stratum::new("z", 1);
    z.eta = Some(rat(0));
    let table = StratumTable::new(vec![z]).unwrap();
    assert!(csm_from_polar(&table, 3).unwrap().is_zero());
}

#[test]
fn gamma_recursion_examples() {
    // single singular point under a regular stratum
    let mut reg = Stratum::new("reg", 2);
    reg.mu = Some(rat(0));
    let mut pt = Stratum::new("pt", 0);
    pt.mu = Some(rat(1));
    pt.parents = vec!["reg".into()];
    let table = StratumTable::new(vec![reg, pt]).unwrap();
    let gamma = gamma_from_mu(&table, 2).unwrap();
    assert_eq!(gamma["pt"], rat(1));
    assert_eq!(gamma["reg"], rat(0));

    // chain S ⊂ S̄' with mu_S = 3, mu_S' = 1
    let mut sp = Stratum::new("sp", 1);
    sp.mu = Some(rat(1));
    let mut s = Stratum::new("s", 0);
    s.mu = Some(rat(3));
    s.parents = vec!["sp".into()];
    let table = StratumTable::new(vec![sp, s]).unwrap();
    let gamma = gamma_from_mu(&table, 2).unwrap();
    assert_eq!(gamma["sp"], rat(1));
    assert_eq!(gamma["s"], rat(2));

    // all mu zero: all gamma zero
    let mut a = Stratum::new("a", 1);
    a.mu = Some(rat(0));
    let mut b = Stratum::new("b", 0);
    b.mu = Some(rat(0));
    b.parents = vec!["a".into()];
    let table = StratumTable::new(vec![a, b]).unwrap();
    let gamma = gamma_from_mu(&table, 2).unwrap();
    assert!(gamma.values().all(|g| g == &rat(0)));
}

#[test]
fn gamma_uses_transitive_ancestors() {
    // tower pt ⊂ curve ⊂ surface, parents listed as direct covers only
    let mut surface = Stratum::new("surface", 2);
    surface.mu = Some(rat(1));
    let mut curve = Stratum::new("curve", 1);
    curve.mu = Some(rat(3));
    curve.parents = vec!["surface".into()];
    let mut pt = Stratum::new("pt", 0);
    pt.mu = Some(rat(7));
    pt.parents = vec!["curve".into()];
    let table = StratumTable::new(vec![surface, curve, pt]).unwrap();
    let gamma = gamma_from_mu(&table, 3).unwrap();
    assert_eq!(gamma["surface"], rat(1));
    assert_eq!(gamma["curve"], rat(2));
    // gamma_pt = 7 - gamma_curve - gamma_surface = 7 - 2 - 1
    assert_eq!(gamma["pt"], rat(4));
}

#[test]
fn pp_milnor_point_stratum() {
    // a single singular point with mu = 1: M = (1)
    let mut pt = Stratum::new("pt", 0);
    pt.mu = Some(rat(1));
    pt.csm_closure = Some(ClassVector::from_ints(3, &[1]));
    let table = StratumTable::new(vec![pt]).unwrap();
    let m = pp_milnor(&table, &d(2), 3).unwrap();
    assert_eq!(m, ClassVector::from_ints(3, &[1]));
}

#[test]
fn pp_milnor_matches_le_route_on_p4_example() {
    // stratum P^2 with chi(F) = 0, so mu = (-1)^3 (0-1) = 1, gamma = 1,
    // c^SM(P^2) = (3,3,1), d = 2: M = (1,1,1)
    let mut s = Stratum::new("sing", 2);
    s.chi_fiber = Some(0);
    s.csm_closure = Some(ClassVector::from_ints(4, &[3, 3, 1]));
    let table = StratumTable::new(vec![s]).unwrap();
    let m = pp_milnor(&table, &d(2), 4).unwrap();
    assert_eq!(m, ClassVector::from_ints(4, &[1, 1, 1]));

    // empty singular set: zero class
    let empty = StratumTable::new(vec![]).unwrap();
    assert!(pp_milnor(&empty, &d(2), 4).unwrap().is_zero());
}

#[test]
fn pp_milnor_missing_csm_is_an_error() {
    let mut s = Stratum::new("sing", 2);
    s.chi_fiber = Some(0);
    let table = StratumTable::new(vec![s]).unwrap();
    match pp_milnor(&table, &d(2), 4) {
        Err(ClassError::MissingField { field: "csm_closure", .. }) => {}
        other => panic!("expected missing csm error, got {other:?}"),
    }
}

#[test]
fn top_class_examples() {
    // x0 x1 in P^4: one 2-dimensional stratum, mu_perp = 1, deg = 1
    let mut s = Stratum::new("sing", 2);
    s.mu_perp = Some(rat(1));
    s.closure_degree = Some(rat(1));
    let table = StratumTable::new(vec![s]).unwrap();
    let m = top_milnor_class(&table, 2, 4).unwrap();
    assert_eq!(m.get(2), rat(1));
    assert_eq!(m.support_dim(), Some(2));

    // isolated point: M_0 = mu
    let mut pt = Stratum::new("pt", 0);
    pt.mu_perp = Some(rat(5));
    pt.closure_degree = Some(rat(1));
    let table = StratumTable::new(vec![pt]).unwrap();
    assert_eq!(top_milnor_class(&table, 0, 3).unwrap().get(0), rat(5));

    // two disjoint r-strata with mu_perp a, b and degree 1: (-1)^r (a+b)
    let mut s1 = Stratum::new("s1", 1);
    s1.mu_perp = Some(rat(2));
    s1.closure_degree = Some(rat(1));
    let mut s2 = Stratum::new("s2", 1);
    s2.mu_perp = Some(rat(3));
    s2.closure_degree = Some(rat(1));
    let table = StratumTable::new(vec![s1, s2]).unwrap();
    assert_eq!(top_milnor_class(&table, 1, 4).unwrap().get(1), rat(-5));
}

#[test]
fn chi_from_strata_examples() {
    let mut s = Stratum::new("s", 2);
    s.chi_fiber = Some(1);
    s.chi_stratum = Some(5);
    let table = StratumTable::new(vec![s]).unwrap();
    assert_eq!(chi_from_strata(&table).unwrap(), rat(5));

    let mut a = Stratum::new("a", 2);
    a.chi_fiber = Some(1);
    a.chi_stratum = Some(2);
    let mut b = Stratum::new("b", 1);
    b.chi_fiber = Some(3);
    b.chi_stratum = Some(1);
    let table = StratumTable::new(vec![a, b]).unwrap();
    assert_eq!(chi_from_strata(&table).unwrap(), rat(5));

    let empty = StratumTable::new(vec![]).unwrap();
    assert_eq!(chi_from_strata(&empty).unwrap(), rat(0));
}

#[test]
fn table_validation_errors() {
    // unknown parent
    let mut s = Stratum::new("s", 0);
    s.parents = vec!["ghost".into()];
    assert!(matches!(
        StratumTable::new(vec![s]),
        Err(ClassError::UnknownParent { .. })
    ));

    // dimension order violated
    let big = Stratum::new("big", 2);
    let mut small = Stratum::new("small", 2);
    small.parents = vec!["big".into()];
    assert!(matches!(
        StratumTable::new(vec![big, small]),
        Err(ClassError::ClosureNotPartialOrder { .. })
    ));

    // duplicate ids
    assert!(matches!(
        StratumTable::new(vec![Stratum::new("x", 0), Stratum::new("x", 1)]),
        Err(ClassError::DuplicateStratum(_))
    ));
}

#[test]
fn projective_route_hand_expansion() {
    // the three hand-expanded sums for Λ = (0,0,1), d = 2:
    // M0 = 3 - 6 + 4, M1 = 3 - 2, M2 = 1
    let lambda = ClassVector::from_ints(4, &[0, 0, 1]);
    let m = milnor_from_le_projective(&lambda, &d(2), 3).unwrap();
    assert_eq!(m.get(0), rat(3 - 6 + 4));
    assert_eq!(m.get(1), rat(3 - 2));
    assert_eq!(m.get(2), rat(1));
}

#[test]
fn rational_inputs_stay_exact() {
    // a fractional class vector round-trips exactly
    let v = ClassVector::from_coeffs(5, vec![ratio(7, 3), ratio(-2, 5), rat(0), ratio(1, 9)])
        .unwrap();
    let m = milnor_from_le(&v, &d(5), 3).unwrap();
    let back = le_from_milnor(&m, &d(5), 3).unwrap();
    assert_eq!(back, v);
}
