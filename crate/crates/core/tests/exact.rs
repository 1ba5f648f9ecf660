use clifford_invariants::exact::hnf::{hnf, hnf_i64, HnfBuilder};
use clifford_invariants::exact::{Cyclotomic, Matrix, RatPoly, Rational, Series, SqrtTwo};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::frac(n, d))
}

fn sqrt_two() -> impl Strategy<Value = SqrtTwo> {
    (rational(), rational()).prop_map(|(a, b)| SqrtTwo::new(a, b))
}

fn zeta8() -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(-5i64..5, 4).prop_map(|c| Cyclotomic::from_int_coords(8, &c))
}

fn poly3() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec((prop::collection::vec(0u16..3, 3), -4i64..4), 0..6).prop_map(|terms| {
        let mut p = RatPoly::zero(3, &());
        for (e, c) in terms {
            p.add_term(e, Rational::from(c));
        }
        p
    })
}

proptest! {
    #[test]
    fn sqrt_two_is_a_field(x in sqrt_two(), y in sqrt_two(), z in sqrt_two()) {
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), SqrtTwo::one());
        }
    }

    #[test]
    fn sqrt_two_galois_and_norm(x in sqrt_two(), y in sqrt_two()) {
        prop_assert_eq!((&x * &y).galois(), &x.galois() * &y.galois());
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert!(((&x * &y).to_f64() - x.to_f64() * y.to_f64()).abs() < 1e-9);
    }

    #[test]
    fn cyclotomic_conjugation_and_norm(x in zeta8(), y in zeta8()) {
        let xy = x.try_mul(&y).unwrap();
        prop_assert_eq!(xy.conj(), x.conj().try_mul(&y.conj()).unwrap());
        prop_assert_eq!(xy.norm(), x.norm() * y.norm());
        let xx = x.try_mul(&x.conj()).unwrap();
        prop_assert_eq!(xx.conj(), xx);
    }

    #[test]
    fn poly_ring_laws(a in poly3(), b in poly3(), c in poly3()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        // Leibniz rule.
        let lhs = a.mul(&b).unwrap().derivative(1);
        let rhs = a.derivative(1).mul(&b).unwrap().add(&a.mul(&b.derivative(1)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hnf_is_invariant_under_unimodular_row_operations(
        rows in prop::collection::vec(prop::collection::vec(-9i64..9, 4), 1..5),
        k in -3i64..3,
    ) {
        let before = hnf_i64(&rows);
        let mut mixed = rows.clone();
        if mixed.len() > 1 {
            let r0 = mixed[0].clone();
            for (x, y) in mixed[1].iter_mut().zip(&r0) {
                *x += k * y;
            }
            mixed.swap(0, 1);
        }
        prop_assert_eq!(before, hnf_i64(&mixed));
    }

    #[test]
    fn hnf_membership(rows in prop::collection::vec(prop::collection::vec(-9i64..9, 3), 1..4), coeffs in prop::collection::vec(-4i64..4, 4)) {
        let mut b = HnfBuilder::new(3);
        for r in &rows {
            b.insert(r.iter().map(|&x| BigInt::from(x)).collect());
        }
        let combo: Vec<BigInt> = (0..3)
            .map(|j| rows.iter().zip(&coeffs).map(|(r, c)| BigInt::from(r[j] * c)).sum())
            .collect();
        prop_assert!(b.contains(&combo));
        let h = hnf(&b.finish());
        prop_assert_eq!(h, b.finish());
    }

    #[test]
    fn series_inverse(c in prop::collection::vec(-5i64..5, 1..6)) {
        let mut coeffs = vec![Rational::one()];
        coeffs.extend(c.iter().map(|&x| Rational::from(x)));
        let s = Series::new(coeffs, 12, &());
        let one = s.mul(&s.inverse().unwrap());
        let expected = Series::<Rational>::one(12, &());
        prop_assert_eq!(one.coeffs(), expected.coeffs());
    }

    #[test]
    fn matrix_inverse_round_trip(entries in prop::collection::vec(sqrt_two(), 9)) {
        let m = Matrix::from_rows(entries.chunks(3).map(|r| r.to_vec()).collect(), &()).unwrap();
        if !m.det().unwrap().is_zero() {
            prop_assert!(m.mul(&m.inverse().unwrap()).unwrap().is_identity());
            let d = m.det().unwrap();
            let dt = m.transpose().det().unwrap();
            prop_assert_eq!(d, dt);
        }
    }
}

#[test]
fn zeta8_basics() {
    let z = Cyclotomic::zeta_pow(8, 1).unwrap();
    let mut p = Cyclotomic::one(8).unwrap();
    for _ in 0..8 {
        p = p.try_mul(&z).unwrap();
    }
    assert_eq!(p, Cyclotomic::one(8).unwrap());
    // ζ + ζ⁻¹ = √2.
    assert_eq!(z.try_add(&z.conj()).unwrap(), Cyclotomic::sqrt2());
}
