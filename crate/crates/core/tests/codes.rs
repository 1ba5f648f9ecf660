use clifford_invariants::codes::{
    canonical_form, enumerate_self_dual, enumerate_self_dual_prime, hamming8, named_code, parse_code_file,
    self_dual_supercodes, tetracode, AnyCode, BinaryCode, Shadow,
};
use proptest::prelude::*;
use std::sync::OnceLock;

/// Number of self-dual codes of length `n`, all of which contain `1`.
fn self_dual_mass(n: usize) -> usize {
    (1..n / 2).map(|i| (1usize << i) + 1).product()
}

/// Number of doubly-even self-dual codes of length `n ≡ 0 (mod 8)`.
fn doubly_even_mass(n: usize) -> usize {
    (0..n / 2 - 1).map(|i| (1usize << i) + 1).product()
}

#[test]
fn supercodes_of_the_repetition_code_match_the_mass_formula() {
    for n in (2..=10).step_by(2) {
        let supers = self_dual_supercodes(&BinaryCode::repetition(n), false).unwrap();
        assert_eq!(supers.len(), self_dual_mass(n), "n = {n}");
    }
    let de = self_dual_supercodes(&BinaryCode::repetition(8), true).unwrap();
    assert_eq!(de.len(), doubly_even_mass(8));
}

#[test]
fn class_counts() {
    let counts: Vec<usize> = (2..=12).step_by(2).map(|n| enumerate_self_dual(n, false).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 2, 3]);
    assert_eq!(enumerate_self_dual(8, true).unwrap().len(), 1);
    assert_eq!(enumerate_self_dual_prime(3, 8).unwrap().len(), 1);
}

#[test]
fn named_codes() {
    let AnyCode::Binary(h) = named_code("h8").unwrap() else { panic!("binary") };
    assert_eq!(h, hamming8());
    assert_eq!(h.weight_distribution().unwrap(), vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
    let AnyCode::Prime(t) = named_code("tetracode").unwrap() else { panic!("ternary") };
    assert_eq!(t, tetracode());
    assert_eq!(t.weight_distribution().unwrap(), vec![1, 0, 0, 8, 0]);
    assert!(named_code("no-such-code").is_err());
}

#[test]
fn code_files() {
    let AnyCode::Binary(c) = parse_code_file("1100\n0011\n", 2).unwrap() else { panic!("binary") };
    assert!(c.is_self_dual());
    let AnyCode::Prime(t) = parse_code_file("1110\n0121\n", 3).unwrap() else { panic!("ternary") };
    assert!(t.is_self_dual());
    assert!(parse_code_file("1102\n", 2).is_err());
}

fn code() -> impl Strategy<Value = BinaryCode> {
    (2usize..=10)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(0u64..(1 << n), 1..5)))
        .prop_map(|(n, rows)| BinaryCode::new(n, rows).unwrap())
}

fn length_twelve() -> &'static [BinaryCode] {
    static CODES: OnceLock<Vec<BinaryCode>> = OnceLock::new();
    CODES.get_or_init(|| enumerate_self_dual(12, false).unwrap().into_iter().map(|c| c.representative).collect())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn duality(c in code()) {
        let d = c.dual();
        prop_assert_eq!(c.dim() + d.dim(), c.length());
        prop_assert_eq!(d.dual(), c.clone());
        for u in c.rows() {
            for v in d.rows() {
                prop_assert_eq!((u & v).count_ones() % 2, 0);
            }
        }
    }

    #[test]
    fn canonical_form_ignores_coordinate_order((c, perm) in code().prop_flat_map(|c| {
        let n = c.length();
        (Just(c), permutation(n))
    })) {
        let a = canonical_form(&c).unwrap();
        let b = canonical_form(&c.permute(&perm).unwrap()).unwrap();
        prop_assert_eq!(a.key(), b.key());
        prop_assert_eq!(a.weight_distribution, c.weight_distribution().unwrap());
    }

    #[test]
    fn shadow_membership(idx in 0usize..3, perm in permutation(12), probes in prop::collection::vec(0u64..4096, 32)) {
        let c = length_twelve()[idx].permute(&perm).unwrap();
        let s = Shadow::new(&c).unwrap();
        for u in probes {
            prop_assert_eq!(s.contains(u), s.contains_brute_force(u).unwrap());
        }
    }
}
