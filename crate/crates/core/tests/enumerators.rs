use clifford_invariants::codes::{enumerate_self_dual, hamming8, BinaryCode};
use clifford_invariants::enumerators::{cwe, fwe, genus_collapse, hm_term_count_formula, hwe, project, shadow_identities};
use clifford_invariants::exact::{RatPoly, Rational};
use clifford_invariants::groups::{is_invariant, Group, GroupSpec};
use proptest::prelude::*;

fn code() -> impl Strategy<Value = BinaryCode> {
    (1usize..=7)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(0u64..(1 << n), 1..4)))
        .prop_map(|(n, rows)| BinaryCode::new(n, rows).unwrap())
}

fn var(i: usize) -> RatPoly {
    RatPoly::var(2, i, &())
}

#[test]
fn weighted_term_count_is_a_power_of_two() {
    for m in 0..=12 {
        assert_eq!(hm_term_count_formula(m), 1u128 << (4 * m), "m = {m}");
    }
}

#[test]
fn enumerators_of_self_dual_codes_are_invariant() {
    for m in 1..=2u32 {
        let real = Group::cached(GroupSpec::real(m)).unwrap();
        for n in [2, 4, 6, 8] {
            for class in enumerate_self_dual(n, false).unwrap() {
                let w = cwe(&class.representative, m as usize).unwrap();
                for g in real.generators() {
                    assert!(is_invariant(real.ring(), g, &w).unwrap());
                }
            }
        }
        let complex = Group::cached(GroupSpec::complex(m)).unwrap();
        let w = cwe(&hamming8(), m as usize).unwrap();
        for g in complex.generators() {
            assert!(is_invariant(complex.ring(), g, &w).unwrap());
        }
    }
}

#[test]
fn shadow_identities_at_length_twelve() {
    for class in enumerate_self_dual(12, false).unwrap() {
        assert!(shadow_identities(&class.representative).unwrap().all());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn genus_one_is_the_hamming_enumerator(c in code()) {
        prop_assert_eq!(cwe(&c, 1).unwrap(), hwe(&c).unwrap());
    }

    #[test]
    fn macwilliams(c in code()) {
        let size = Rational::from(1i64 << c.dim());
        let transformed = cwe(&c, 1)
            .unwrap()
            .substitute(&[var(0).add(&var(1)).unwrap(), var(0).sub(&var(1)).unwrap()])
            .unwrap()
            .scale(&size.recip().unwrap());
        prop_assert_eq!(cwe(&c.dual(), 1).unwrap(), transformed);
    }

    #[test]
    fn collapse_drops_one_genus(c in code(), m in 1usize..=3) {
        let size = Rational::from(1i64 << c.dim());
        let collapsed = genus_collapse(&cwe(&c, m + 1).unwrap(), 2).unwrap();
        prop_assert_eq!(collapsed, cwe(&c, m).unwrap().scale(&size));
    }

    #[test]
    fn direct_sums_multiply(a in code(), b in code(), m in 1usize..=2) {
        prop_assume!(a.length() + b.length() <= 10);
        let sum = cwe(&a.direct_sum(&b).unwrap(), m).unwrap();
        prop_assert_eq!(sum, cwe(&a, m).unwrap().mul(&cwe(&b, m).unwrap()).unwrap());
    }

    #[test]
    fn full_enumerator_projects_to_cwe(c in code(), m in 1usize..=2) {
        prop_assert_eq!(project(m, &fwe(&c, m).unwrap()), cwe(&c, m).unwrap());
    }
}
