use std::fmt::{Debug, Display};
use std::hash::Hash;

use serde_json::{json, Value};

use super::{Cyclotomic, Rational, SqrtTwo};
use crate::error::Result;

/// Exact field arithmetic shared by matrices, polynomials and series.
///
/// `Field` carries whatever is needed to build constants: nothing for ℚ and
/// ℚ(√2), the conductor for cyclotomic fields. Binary operations assume both
/// operands live in the same field; the cyclotomic type offers `try_*`
/// variants that report a mismatch instead of panicking.
pub trait Scalar: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync {
    type Field: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn field(&self) -> Self::Field;
    fn zero_in(field: &Self::Field) -> Self;
    fn one_in(field: &Self::Field) -> Self;
    fn from_rational(q: Rational, field: &Self::Field) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    /// Complex conjugation; the identity on real fields.
    fn conj(&self) -> Self;
    fn to_rational(&self) -> Option<Rational>;
    fn to_complex(&self) -> (f64, f64);
    /// Byte serialization that is equal exactly when the values are equal.
    fn write_canonical(&self, out: &mut Vec<u8>);
    fn to_json(&self) -> Value;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    fn is_one(&self) -> bool {
        self.to_rational().is_some_and(|q| q.is_one())
    }

    fn scale(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q.clone(), &self.field()))
    }

    fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.write_canonical(&mut out);
        out
    }
}

impl Scalar for Rational {
    type Field = ();

    fn field(&self) {}
    fn zero_in(_: &()) -> Self {
        Rational::zero()
    }
    fn one_in(_: &()) -> Self {
        Rational::one()
    }
    fn from_rational(q: Rational, _: &()) -> Self {
        q
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        self.recip()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn to_complex(&self) -> (f64, f64) {
        (self.to_f64(), 0.0)
    }
    fn write_canonical(&self, out: &mut Vec<u8>) {
        Rational::write_canonical(self, out)
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl Scalar for SqrtTwo {
    type Field = ();

    fn field(&self) {}
    fn zero_in(_: &()) -> Self {
        SqrtTwo::zero()
    }
    fn one_in(_: &()) -> Self {
        SqrtTwo::one()
    }
    fn from_rational(q: Rational, _: &()) -> Self {
        SqrtTwo::rational(q)
    }
    fn is_zero(&self) -> bool {
        SqrtTwo::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        SqrtTwo::inv(self)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }
    fn to_complex(&self) -> (f64, f64) {
        (self.to_f64(), 0.0)
    }
    fn write_canonical(&self, out: &mut Vec<u8>) {
        SqrtTwo::write_canonical(self, out)
    }
    fn to_json(&self) -> Value {
        json!({ "a": self.a.to_string(), "b": self.b.to_string() })
    }
}

impl Scalar for Cyclotomic {
    type Field = u32;

    fn field(&self) -> u32 {
        self.conductor()
    }
    fn zero_in(n: &u32) -> Self {
        Cyclotomic::zero(*n).expect("supported conductor")
    }
    fn one_in(n: &u32) -> Self {
        Cyclotomic::one(*n).expect("supported conductor")
    }
    fn from_rational(q: Rational, n: &u32) -> Self {
        Cyclotomic::from_rational(*n, q).expect("supported conductor")
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        Cyclotomic::inv(self)
    }
    fn conj(&self) -> Self {
        Cyclotomic::conj(self)
    }
    fn to_rational(&self) -> Option<Rational> {
        Cyclotomic::to_rational(self)
    }
    fn to_complex(&self) -> (f64, f64) {
        Cyclotomic::to_complex(self)
    }
    fn write_canonical(&self, out: &mut Vec<u8>) {
        Cyclotomic::write_canonical(self, out)
    }
    fn to_json(&self) -> Value {
        json!({
            "conductor": self.conductor(),
            "coeffs": self.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
    fn scale(&self, q: &Rational) -> Self {
        Cyclotomic::scale(self, q)
    }
}
