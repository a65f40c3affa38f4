//! Property tests: the Milnor/Lê transforms are exact mutual inverses, the
//! two Milnor routes agree, the legacy formula agrees exactly on
//! dimension-0 support, and outputs respect the support bound.

use classcalc::{
    identity_checks, le_from_milnor, milnor_from_le, milnor_from_le_legacy,
    milnor_from_le_projective, BundleDegree, ClassVector,
};
use polyring::Rational;
use proptest::prelude::*;

fn arb_vector(ambient: usize, support: usize) -> impl Strategy<Value = ClassVector> {
    prop::collection::vec((-60i64..=60, 1i64..=12), support + 1).prop_map(move |entries| {
        ClassVector::from_coeffs(
            ambient,
            entries.into_iter().map(|(n, d)| polyring::ratio(n, d)),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn round_trip_is_identity(
        r in 0usize..=5,
        deg in 1u32..=8,
        seed_entries in prop::collection::vec((-60i64..=60, 1i64..=12), 6),
    ) {
        let ambient = 6;
        let d = BundleDegree::new(deg).unwrap();
        let v = ClassVector::from_coeffs(
            ambient,
            seed_entries.iter().take(r + 1).map(|&(n, q)| polyring::ratio(n, q)),
        ).unwrap();
        let m = milnor_from_le(&v, &d, r as i64).unwrap();
        let back = le_from_milnor(&m, &d, r as i64).unwrap();
        prop_assert_eq!(back, v.clone());
        // and the other composition
        let l = le_from_milnor(&v, &d, r as i64).unwrap();
        let forward = milnor_from_le(&l, &d, r as i64).unwrap();
        prop_assert_eq!(forward, v);
    }

    #[test]
    fn projective_route_agrees_with_coefficient_route(
        r in 0usize..=4,
        deg in 1u32..=6,
        seed_entries in prop::collection::vec((-40i64..=40, 1i64..=8), 5),
    ) {
        // for a hypersurface in P^N the singular set has dim <= N-2, so
        // realize the vector in an ambient where dim Z = r + 1
        let ambient = r + 2;
        let dim_z = ambient - 1;
        let d = BundleDegree::new(deg).unwrap();
        let v = ClassVector::from_coeffs(
            ambient,
            seed_entries.iter().take(r + 1).map(|&(n, q)| polyring::ratio(n, q)),
        ).unwrap();
        let via_c = milnor_from_le(&v, &d, r as i64).unwrap();
        let via_lemma = milnor_from_le_projective(&v, &d, dim_z).unwrap();
        prop_assert_eq!(via_c, via_lemma);
    }

    #[test]
    fn legacy_agrees_exactly_on_dimension_zero_support(
        deg in 1u32..=8,
        n in -50i64..=50,
        q in 1i64..=10,
    ) {
        let d = BundleDegree::new(deg).unwrap();
        let v = ClassVector::from_coeffs(5, vec![polyring::ratio(n, q)]).unwrap();
        let corrected = milnor_from_le(&v, &d, 0).unwrap();
        let legacy = milnor_from_le_legacy(&v, &d, 0);
        prop_assert_eq!(corrected, legacy);
    }

    #[test]
    fn outputs_respect_the_support_bound(
        r in 0usize..=4,
        deg in 1u32..=6,
        v in arb_vector(6, 4),
    ) {
        prop_assume!(v.supported_within(r as i64));
        let d = BundleDegree::new(deg).unwrap();
        let m = milnor_from_le(&v, &d, r as i64).unwrap();
        prop_assert!(m.supported_within(r as i64));
        let l = le_from_milnor(&v, &d, r as i64).unwrap();
        prop_assert!(l.supported_within(r as i64));
    }
}

#[test]
fn identities_pass_up_to_thirty_two() {
    let report = identity_checks(32, 32);
    assert!(report.all_ok(), "{report:?}");
}

#[test]
fn zero_is_a_fixed_point_for_every_degree() {
    for deg in 1..=8 {
        let d = BundleDegree::new(deg).unwrap();
        let z = ClassVector::zero(5);
        assert!(milnor_from_le(&z, &d, 3).unwrap().is_zero());
        assert!(le_from_milnor(&z, &d, 3).unwrap().is_zero());
    }
    let _ = Rational::from_integer(0.into());
}
