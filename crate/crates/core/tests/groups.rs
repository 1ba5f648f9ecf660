use clifford_invariants::exact::{monomials_of_degree, rational_function, RatPoly, Rational};
use clifford_invariants::groups::{
    extraspecial_molien_formula, generators, hadamard, is_invariant, is_unitary, molien_series, predicted_order,
    reynolds_average, structure_order, CompactMatrix, Group, GroupSpec,
};
use proptest::prelude::*;

#[test]
fn closure_orders_match_formulas() {
    for spec in [
        GroupSpec::real(1),
        GroupSpec::real(2),
        GroupSpec::complex(1),
        GroupSpec::complex(2),
        GroupSpec::extraspecial(1),
        GroupSpec::extraspecial(2),
        GroupSpec::extraspecial(3),
    ] {
        let g = Group::cached(spec).unwrap();
        assert_eq!(g.order(), predicted_order(&spec).unwrap(), "{spec:?}");
    }
    for p in [3, 5] {
        for spec in [GroupSpec::odd_prime(p, 1), GroupSpec::extraspecial_p(p, 1)] {
            let g = Group::cached(spec).unwrap();
            assert_eq!(g.order(), structure_order(&spec).unwrap(), "{spec:?}");
        }
    }
}

#[test]
fn generators_are_unitary() {
    for spec in [GroupSpec::real(3), GroupSpec::complex(3), GroupSpec::odd_prime(3, 2), GroupSpec::odd_prime(5, 1)] {
        let ring = spec.ring().unwrap();
        for g in generators(&spec, &ring).unwrap() {
            assert!(is_unitary(&ring, &g), "{spec:?}");
        }
    }
}

#[test]
fn hadamard_is_an_involution() {
    let ring = GroupSpec::real(3).ring().unwrap();
    let h = hadamard(&ring, 3).unwrap();
    assert!(h.mul(&h, &ring).unwrap().is_identity());
}

#[test]
fn complex_genus_two_molien() {
    let g = Group::cached(GroupSpec::complex(2)).unwrap();
    let s = molien_series(&g, 40).unwrap();
    let expected = rational_function(&[(0, 1), (32, 1)], &[8, 24, 24, 40], 40);
    assert_eq!(s.coeffs(), expected.coeffs());
}

#[test]
fn extraspecial_molien_closed_form() {
    let g = Group::cached(GroupSpec::extraspecial(3)).unwrap();
    let s = molien_series(&g, 12).unwrap();
    assert_eq!(s.coeffs(), extraspecial_molien_formula(3, 12).coeffs());
}

fn word(spec: &GroupSpec, letters: &[usize]) -> (Group, CompactMatrix) {
    let group = Group::new(*spec).unwrap();
    let ring = group.ring().clone();
    let gens = group.generators().to_vec();
    let mut g = CompactMatrix::identity(&ring, group.dim());
    for &l in letters {
        g = g.mul(&gens[l % gens.len()], &ring).unwrap();
    }
    (group, g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn words_in_generators_are_members(letters in prop::collection::vec(0usize..16, 0..24)) {
        let (group, g) = word(&GroupSpec::real(2), &letters);
        prop_assert!(group.contains(&g).unwrap());
        prop_assert!(is_unitary(group.ring(), &g));
    }

    #[test]
    fn reynolds_average_is_invariant(index in 0usize..35) {
        let group = Group::cached(GroupSpec::real(2)).unwrap();
        let e = monomials_of_degree(4, 4)[index].clone();
        let avg = reynolds_average(&group, &RatPoly::monomial(e, Rational::one())).unwrap();
        for g in group.generators() {
            prop_assert!(is_invariant(group.ring(), g, &avg).unwrap());
        }
    }
}

#[test]
fn real_genus_three_order() {
    let g = Group::new(GroupSpec::real(3)).unwrap();
    assert_eq!(g.order(), 5_160_960);
}
