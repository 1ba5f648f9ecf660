use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::Rational;
use crate::error::{Error, Result};

/// An element `a + b·√2` of the field ℚ(√2).
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SqrtTwo {
    pub a: Rational,
    pub b: Rational,
}

impl SqrtTwo {
    pub fn new(a: Rational, b: Rational) -> Self {
        SqrtTwo { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        SqrtTwo::new(Rational::from(a), Rational::from(b))
    }

    pub fn rational(q: Rational) -> Self {
        SqrtTwo::new(q, Rational::zero())
    }

    pub fn zero() -> Self {
        SqrtTwo::default()
    }

    pub fn one() -> Self {
        SqrtTwo::from_ints(1, 0)
    }

    /// `√2` itself.
    pub fn root() -> Self {
        SqrtTwo::from_ints(0, 1)
    }

    /// `1/√2 = √2/2`.
    pub fn inv_root() -> Self {
        SqrtTwo::new(Rational::zero(), Rational::frac(1, 2))
    }

    /// `√2^k` for any integer `k`.
    pub fn root_pow(k: i32) -> Self {
        let half = k.div_euclid(2);
        let two_pow = Rational::from(2).pow(half);
        if k.rem_euclid(2) == 0 {
            SqrtTwo::rational(two_pow)
        } else {
            SqrtTwo::new(Rational::zero(), two_pow)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True when both coordinates are integers, i.e. the value lies in ℤ[√2].
    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// Galois conjugate `a − b√2`.
    pub fn galois(&self) -> Self {
        SqrtTwo::new(self.a.clone(), -&self.b)
    }

    /// Field norm `a² − 2b²`.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&Rational::from(2) * &(&self.b * &self.b))
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ni = n.recip()?;
        Ok(SqrtTwo::new(&self.a * &ni, -(&self.b * &ni)))
    }

    pub fn checked_div(&self, rhs: &SqrtTwo) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * std::f64::consts::SQRT_2
    }

    /// Nearest element of ℤ[√2] coordinate-wise.
    pub fn round(&self) -> (BigInt, BigInt) {
        (self.a.round(), self.b.round())
    }

    pub fn from_big_ints(a: BigInt, b: BigInt) -> Self {
        SqrtTwo::new(Rational::from(a), Rational::from(b))
    }

    pub fn write_canonical(&self, out: &mut Vec<u8>) {
        self.a.write_canonical(out);
        self.b.write_canonical(out);
    }

    /// Sign of the real number `a + b√2`, decided exactly.
    pub fn signum(&self) -> i32 {
        // Compare a against −b√2 by squaring, keeping track of signs.
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2 = &Rational::from(2) * &(&self.b * &self.b);
        match a2.cmp(&b2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }
}

fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.numer().is_negative() {
        -1
    } else {
        1
    }
}

impl fmt::Display for SqrtTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt2", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}*sqrt2", self.a, -&self.b)
                } else {
                    write!(f, "{}+{}*sqrt2", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for SqrtTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&SqrtTwo> for &SqrtTwo {
    type Output = SqrtTwo;
    fn add(self, rhs: &SqrtTwo) -> SqrtTwo {
        SqrtTwo::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&SqrtTwo> for &SqrtTwo {
    type Output = SqrtTwo;
    fn sub(self, rhs: &SqrtTwo) -> SqrtTwo {
        SqrtTwo::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&SqrtTwo> for &SqrtTwo {
    type Output = SqrtTwo;
    fn mul(self, rhs: &SqrtTwo) -> SqrtTwo {
        let two = Rational::from(2);
        SqrtTwo::new(
            &(&self.a * &rhs.a) + &(&two * &(&self.b * &rhs.b)),
            &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        )
    }
}

impl Neg for &SqrtTwo {
    type Output = SqrtTwo;
    fn neg(self) -> SqrtTwo {
        SqrtTwo::new(-&self.a, -&self.b)
    }
}

impl From<i64> for SqrtTwo {
    fn from(n: i64) -> Self {
        SqrtTwo::from_ints(n, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_of_unit() {
        let u = SqrtTwo::from_ints(1, 1);
        let v = SqrtTwo::from_ints(1, -1);
        assert_eq!(&u * &v, SqrtTwo::from_ints(-1, 0));
    }

    #[test]
    fn inverse_root_squared_is_half() {
        let r = SqrtTwo::inv_root();
        assert_eq!(&r * &r, SqrtTwo::rational(Rational::frac(1, 2)));
        assert_eq!(SqrtTwo::root().inv().unwrap(), r);
    }

    #[test]
    fn root_powers() {
        assert_eq!(SqrtTwo::root_pow(0), SqrtTwo::one());
        assert_eq!(SqrtTwo::root_pow(3), SqrtTwo::from_ints(0, 2));
        assert_eq!(SqrtTwo::root_pow(-2), SqrtTwo::rational(Rational::frac(1, 2)));
        assert_eq!(SqrtTwo::root_pow(-1), SqrtTwo::inv_root());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(SqrtTwo::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(SqrtTwo::from_ints(3, -2).signum(), 1); // 3 > 2.83
        assert_eq!(SqrtTwo::from_ints(-3, 2).signum(), -1);
        assert_eq!(SqrtTwo::from_ints(-1, 1).signum(), 1);
        assert_eq!(SqrtTwo::zero().signum(), 0);
    }
}
