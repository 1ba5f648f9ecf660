use clifford_invariants::exact::{Rational, Scalar};
use clifford_invariants::groups::{generators, CompactMatrix, Group, GroupSpec};
use clifford_invariants::lattices::{
    barnes_wall, barnes_wall_index, design_test, even_unimodular_rescaling, is_sublattice, rotation_345,
    stabilizes_balanced, verify_complex_automorphism_membership, verify_span_maximal_order, verify_tensor_decomposition,
    PointMode,
};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn tensor_decomposition_with_negative_controls() {
    for m in 2..=3 {
        assert!(verify_tensor_decomposition(m, false).unwrap(), "m = {m}");
        assert!(!verify_tensor_decomposition(m, true).unwrap(), "m = {m}");
    }
}

#[test]
fn barnes_wall_invariants() {
    for m in 1..=3 {
        let plain = barnes_wall(m, false).unwrap();
        let primed = barnes_wall(m, true).unwrap();
        assert!(is_sublattice(&plain, &primed).unwrap());
        assert_eq!(plain.minimum, Some(Rational::from(1i64 << m)));
        assert_eq!(primed.minimum, Some(Rational::from(1i64 << (m - 1))));
        // det L = [L′ : L]² det L′.
        let index = barnes_wall_index(m).unwrap();
        let ratio = plain.det.to_rational().unwrap() * primed.det.to_rational().unwrap().recip().unwrap();
        assert_eq!(ratio, Rational::from(&index * &index));
    }
    assert_eq!(barnes_wall_index(3).unwrap(), BigInt::from(16));
    // Neither genus-two lattice rescales to an even unimodular one.
    assert!(!even_unimodular_rescaling(&barnes_wall(2, false).unwrap()).unwrap().ok());
}

#[test]
fn complex_automorphisms() {
    for m in 1..=2 {
        assert!(verify_complex_automorphism_membership(m).unwrap().ok(), "m = {m}");
    }
}

#[test]
fn rotation_is_not_an_automorphism() {
    assert!(rotation_345().is_unitary());
    assert!(!stabilizes_balanced(1, &rotation_345()).unwrap());
}

#[test]
fn span_of_the_group() {
    let c2 = verify_span_maximal_order(&Group::cached(GroupSpec::real(2)).unwrap()).unwrap();
    assert!(c2.maximal);
    let e2 = verify_span_maximal_order(&Group::cached(GroupSpec::extraspecial(2)).unwrap()).unwrap();
    assert!(!e2.full_rank);
    assert_eq!(e2.rank, 16);
}

#[test]
fn design_strengths() {
    for m in 1..=2 {
        let r = design_test(m, PointMode::MinimalVector, 10).unwrap();
        assert_eq!(r.float_exact_agree, Some(true));
        assert_eq!(r.strength, 7);
    }
    let r = design_test(3, PointMode::MinimalVector, 8).unwrap();
    assert_eq!((r.orbit_size, r.strength), (480, 7));
}

fn word(m: usize, letters: &[usize]) -> CompactMatrix {
    let spec = GroupSpec::real(m as u32);
    let ring = spec.ring().unwrap();
    let gens = generators(&spec, &ring).unwrap();
    let mut g = CompactMatrix::identity(&ring, 1 << m);
    for &l in letters {
        g = g.mul(&gens[l % gens.len()], &ring).unwrap();
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_elements_stabilize_the_balanced_lattice(m in 1usize..=3, letters in prop::collection::vec(0usize..16, 0..16)) {
        let spec = GroupSpec::real(m as u32);
        let ring = spec.ring().unwrap();
        let g = word(m, &letters).to_sqrt2_matrix(&ring).unwrap();
        prop_assert!(stabilizes_balanced(m, &g).unwrap());
    }

    #[test]
    fn generic_genus_two_orbits_are_seven_designs(seed in any::<u64>()) {
        let r = design_test(2, PointMode::RandomSphere { seed }, 8).unwrap();
        prop_assert_eq!(r.orbit_size, 2304);
        prop_assert_eq!(r.strength, 7);
    }
}
