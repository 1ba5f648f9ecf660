use clifford_invariants::codes::{self_orthogonal_classes, AnyCode, BinaryCode, PrimeFieldCode};
use clifford_invariants::exact::{RatPoly, Rational};
use clifford_invariants::groups::{Group, GroupSpec};
use clifford_invariants::invariants::{
    harmonic_degree8, harmonic_invariants, parabolic_basis, random_self_dual_prime, verify_averaging_theorem,
    verify_runge_odd_prime, verify_subcode_sum, verify_triangular, ProductRange, Variant,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn binomial(n: u64, k: u64) -> i64 {
    (1..=k).fold(1u64, |acc, i| acc * (n + 1 - i) / i) as i64
}

#[test]
fn parabolic_basis_sizes() {
    let expected = [(1, [1, 2, 2, 3]), (2, [1, 2, 3, 5])];
    for (m, sizes) in expected {
        for (n, size) in [2, 4, 6, 8].into_iter().zip(sizes) {
            let b = parabolic_basis(n, m).unwrap();
            assert!(b.ok(), "N = {n}, m = {m}");
            assert_eq!(b.entries.len(), size, "N = {n}, m = {m}");
        }
    }
}

#[test]
fn subcode_sums() {
    for n in [2, 4, 6, 8] {
        for level in self_orthogonal_classes(n, n / 2, false).unwrap() {
            for class in level {
                for m in 1..=2 {
                    assert!(verify_subcode_sum(&class.representative, m).unwrap());
                }
            }
        }
    }
}

#[test]
fn triangular_action() {
    for (n, m) in [(2, 1), (4, 1), (2, 2), (4, 2), (6, 2)] {
        assert!(verify_triangular(n, m).unwrap().ok(), "N = {n}, m = {m}");
    }
}

#[test]
fn genus_one_harmonic_is_the_real_part_of_a_power() {
    // Re (x + iy)^8 = Σ_k (−1)^k C(8, 2k) x^{8−2k} y^{2k}.
    let mut expected = RatPoly::zero(2, &());
    for k in 0..=4u16 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        expected.add_term(vec![8 - 2 * k, 2 * k], Rational::from(sign * binomial(8, 2 * k as u64)));
    }
    let r = harmonic_degree8(1).unwrap();
    assert!(r.ok());
    assert_eq!(r.poly.unwrap(), expected);
}

#[test]
fn genus_two_harmonics() {
    let r = harmonic_degree8(2).unwrap();
    assert!(r.ok());
    assert_eq!((r.degree8_harmonic, r.degree10_harmonic), (1, 0));
    let g = Group::cached(GroupSpec::real(2)).unwrap();
    assert_eq!(harmonic_invariants(&g, 12).unwrap().len(), 1);
}

#[test]
fn odd_prime_runge() {
    for n in [4, 8] {
        assert!(verify_runge_odd_prime(3, n, 1, 0, 0).unwrap().ok(), "N = {n}");
    }
    assert!(verify_runge_odd_prime(3, 12, 1, 12, 7).unwrap().ok());
}

fn subcode(top: &PrimeFieldCode, dim: usize) -> PrimeFieldCode {
    let mut c = PrimeFieldCode::repetition(top.p(), top.length());
    for row in top.rows() {
        if c.dim() == dim {
            break;
        }
        if !c.contains(row) {
            c = c.with_vector(row);
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn ternary_averaging(seed in any::<u64>(), r in 0usize..=2) {
        let top = random_self_dual_prime(3, 12, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap().unwrap();
        let c = subcode(&top, 6 - r);
        let report = verify_averaging_theorem(&AnyCode::Prime(c), 1, Variant::OddPrime).unwrap();
        prop_assert!(report.equal);
        if r > 0 {
            prop_assert_eq!(report.matching_range, Some(ProductRange::ZeroToRMinusOne));
        }
    }

    #[test]
    fn real_averaging_with_random_codes(rows in prop::collection::vec(0u64..64, 0..3), m in 1usize..=2) {
        // Self-orthogonal closure of 1 and random even vectors of length 6.
        let mut c = BinaryCode::repetition(6);
        for v in rows {
            let v = if v.count_ones() % 2 == 1 { v ^ 1 } else { v };
            let d = c.with_vector(v);
            if d.is_self_orthogonal() {
                c = d;
            }
        }
        let report = verify_averaging_theorem(&AnyCode::Binary(c), m, Variant::Real).unwrap();
        prop_assert!(report.equal);
    }
}
