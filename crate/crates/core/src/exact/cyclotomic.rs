use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_integer::Integer;

use super::{Rational, SqrtTwo};
use crate::error::{Error, Result};

/// Conductors with precomputed reduction tables.
pub const SUPPORTED_CONDUCTORS: [u32; 3] = [8, 12, 20];

/// Reduction data for ℚ(ζ_n) in the power basis `1, ζ, …, ζ^{φ(n)−1}`.
#[derive(Debug)]
pub struct CyclotomicTable {
    pub conductor: u32,
    pub degree: usize,
    /// `powers[k]` holds the integer coordinates of `ζ^k` for `0 ≤ k < max(n, 2φ − 1)`.
    pub powers: Vec<Vec<i64>>,
}

impl CyclotomicTable {
    fn build(n: u32) -> Self {
        // Coefficients of Φ_n from the constant term upwards (monic).
        let phi: Vec<i64> = match n {
            8 => vec![1, 0, 0, 0, 1],
            12 => vec![1, 0, -1, 0, 1],
            20 => vec![1, 0, -1, 0, 1, 0, -1, 0, 1],
            _ => unreachable!("conductor checked by caller"),
        };
        let degree = phi.len() - 1;
        let count = (n as usize).max(2 * degree - 1);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..count {
            powers.push(cur.clone());
            // Multiply by ζ and reduce the overflow coefficient with Φ_n.
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..degree {
                cur[i] -= top * phi[i];
            }
        }
        CyclotomicTable {
            conductor: n,
            degree,
            powers,
        }
    }

    /// Coordinates of `ζ^k` for any integer `k`.
    pub fn power(&self, k: i64) -> &[i64] {
        let n = self.conductor as i64;
        &self.powers[k.rem_euclid(n) as usize]
    }
}

/// Shared reduction table for a supported conductor.
pub fn table(n: u32) -> Result<&'static CyclotomicTable> {
    static T8: OnceLock<CyclotomicTable> = OnceLock::new();
    static T12: OnceLock<CyclotomicTable> = OnceLock::new();
    static T20: OnceLock<CyclotomicTable> = OnceLock::new();
    let cell = match n {
        8 => &T8,
        12 => &T12,
        20 => &T20,
        _ => return Err(Error::UnsupportedConductor(n)),
    };
    Ok(cell.get_or_init(|| CyclotomicTable::build(n)))
}

/// Element of ℚ(ζ_n) stored by its power-basis coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Result<Self> {
        let t = table(n)?;
        Ok(Cyclotomic {
            conductor: n,
            coeffs: vec![Rational::zero(); t.degree],
        })
    }

    pub fn from_rational(n: u32, q: Rational) -> Result<Self> {
        let mut z = Cyclotomic::zero(n)?;
        z.coeffs[0] = q;
        Ok(z)
    }

    pub fn one(n: u32) -> Result<Self> {
        Cyclotomic::from_rational(n, Rational::one())
    }

    /// `ζ_n^k`.
    pub fn zeta_pow(n: u32, k: i64) -> Result<Self> {
        let t = table(n)?;
        Ok(Cyclotomic::from_int_coords(n, t.power(k)))
    }

    /// The imaginary unit, available in every supported field.
    pub fn i(n: u32) -> Result<Self> {
        Cyclotomic::zeta_pow(n, n as i64 / 4)
    }

    /// `√2` inside ℚ(ζ_8) as `ζ + ζ^{-1}`.
    pub fn sqrt2() -> Self {
        let z = Cyclotomic::zeta_pow(8, 1).expect("conductor 8");
        let zi = Cyclotomic::zeta_pow(8, -1).expect("conductor 8");
        &z + &zi
    }

    /// Image of `a + b√2` under the embedding ℚ(√2) ⊂ ℚ(ζ_8).
    pub fn from_sqrt_two(x: &SqrtTwo) -> Self {
        let a = Cyclotomic::from_rational(8, x.a.clone()).expect("conductor 8");
        &a + &Cyclotomic::sqrt2().scale(&x.b)
    }

    /// Builds an element from coordinates in the power basis; reduces longer
    /// vectors modulo the cyclotomic polynomial.
    pub fn from_coords(n: u32, coords: &[Rational]) -> Result<Self> {
        let t = table(n)?;
        let mut out = vec![Rational::zero(); t.degree];
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(t.power(k as i64)) {
                if *p != 0 {
                    *o += &(c * &Rational::from(*p));
                }
            }
        }
        Ok(Cyclotomic {
            conductor: n,
            coeffs: out,
        })
    }

    pub fn from_int_coords(n: u32, coords: &[i64]) -> Self {
        let t = table(n).expect("supported conductor");
        assert_eq!(coords.len(), t.degree, "coordinate length must equal φ(n)");
        Cyclotomic {
            conductor: n,
            coeffs: coords.iter().map(|&c| Rational::from(c)).collect(),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Coordinates are integers, i.e. the value lies in ℤ[ζ_n].
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    fn check(&self, other: &Cyclotomic) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch(self.conductor, other.conductor));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Cyclotomic) -> Result<Self> {
        self.check(other)?;
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Cyclotomic) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Cyclotomic) -> Result<Self> {
        self.check(other)?;
        let t = table(self.conductor)?;
        let d = t.degree;
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += &(a * b);
                }
            }
        }
        Cyclotomic::from_coords(self.conductor, &prod)
    }

    pub fn try_div(&self, other: &Cyclotomic) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Galois automorphism `ζ ↦ ζ^j` for `j` coprime to the conductor.
    pub fn galois(&self, j: i64) -> Self {
        let n = self.conductor;
        let mut coords = vec![Rational::zero(); n as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            let idx = (j * k as i64).rem_euclid(n as i64) as usize;
            coords[idx] += c;
        }
        Cyclotomic::from_coords(n, &coords).expect("supported conductor")
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Field norm down to ℚ: the product of all Galois conjugates.
    pub fn norm(&self) -> Rational {
        (self * &self.conjugate_product())
            .to_rational()
            .expect("norm of a cyclotomic number is rational")
    }

    fn conjugate_product(&self) -> Cyclotomic {
        let n = self.conductor;
        let mut prod = Cyclotomic::one(n).expect("supported conductor");
        for j in 2..n as i64 {
            if j.gcd(&(n as i64)) == 1 {
                prod = &prod * &self.galois(j);
            }
        }
        prod
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let prod = self.conjugate_product();
        let norm = (self * &prod)
            .to_rational()
            .expect("norm of a cyclotomic number is rational");
        Ok(prod.scale(&norm.recip()?))
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n;
            let v = c.to_f64();
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }

    pub fn write_canonical(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.conductor.to_le_bytes());
        for c in &self.coeffs {
            c.write_canonical(out);
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z{}", self.conductor)?,
                _ => write!(f, "{c}*z{}^{k}", self.conductor)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Panics on a conductor mismatch; use [`Cyclotomic::try_add`] for a `Result`.
impl Add<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.try_add(rhs).expect("cyclotomic conductor mismatch")
    }
}

impl Sub<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.try_sub(rhs).expect("cyclotomic conductor mismatch")
    }
}

impl Mul<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.try_mul(rhs).expect("cyclotomic conductor mismatch")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta8_squared_is_i() {
        let z = Cyclotomic::zeta_pow(8, 1).unwrap();
        let i = &z * &z;
        assert_eq!(i, Cyclotomic::i(8).unwrap());
        assert_eq!(i.coeffs()[2], Rational::one());
        assert_eq!(&i * &i, Cyclotomic::from_rational(8, Rational::from(-1)).unwrap());
    }

    #[test]
    fn zeta_has_exact_order() {
        for n in SUPPORTED_CONDUCTORS {
            let z = Cyclotomic::zeta_pow(n, 1).unwrap();
            let mut p = Cyclotomic::one(n).unwrap();
            for k in 1..=n {
                p = &p * &z;
                assert_eq!(p.is_rational() && p.coeffs()[0] == Rational::one(), k == n);
            }
        }
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s = Cyclotomic::sqrt2();
        assert_eq!(&s * &s, Cyclotomic::from_rational(8, Rational::from(2)).unwrap());
    }

    #[test]
    fn conjugation_inverts_roots_of_unity() {
        for n in SUPPORTED_CONDUCTORS {
            for k in 0..n as i64 {
                let z = Cyclotomic::zeta_pow(n, k).unwrap();
                assert!((&z * &z.conj()).to_rational() == Some(Rational::one()));
            }
        }
    }

    #[test]
    fn inverse_and_errors() {
        let x = &Cyclotomic::zeta_pow(12, 1).unwrap()
            + &Cyclotomic::from_rational(12, Rational::from(3)).unwrap();
        let y = x.inv().unwrap();
        assert_eq!((&x * &y).to_rational(), Some(Rational::one()));
        assert_eq!(Cyclotomic::zero(20).unwrap().inv(), Err(Error::DivisionByZero));
        let a = Cyclotomic::one(8).unwrap();
        let b = Cyclotomic::one(12).unwrap();
        assert_eq!(a.try_add(&b), Err(Error::ConductorMismatch(8, 12)));
        assert_eq!(a.try_mul(&b), Err(Error::ConductorMismatch(8, 12)));
        assert_eq!(Cyclotomic::zero(7), Err(Error::UnsupportedConductor(7)));
    }

    #[test]
    fn complex_embedding() {
        let (re, im) = Cyclotomic::zeta_pow(20, 5).unwrap().to_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    }
}
