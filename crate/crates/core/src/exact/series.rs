use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// Univariate power series truncated after `λ^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Series<S> {
    /// Builds a series of the given truncation order, padding or cutting `coeffs`.
    pub fn new(mut coeffs: Vec<S>, order: usize, field: &S::Field) -> Self {
        coeffs.resize(order + 1, S::zero_in(field));
        Series { coeffs }
    }

    pub fn one(order: usize, field: &S::Field) -> Self {
        Series::new(vec![S::one_in(field)], order, field)
    }

    pub fn zero(order: usize, field: &S::Field) -> Self {
        Series::new(Vec::new(), order, field)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &S {
        &self.coeffs[k]
    }

    fn field(&self) -> S::Field {
        self.coeffs[0].field()
    }

    pub fn add(&self, other: &Series<S>) -> Series<S> {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..=n).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn mul(&self, other: &Series<S>) -> Series<S> {
        let n = self.order().min(other.order());
        let field = self.field();
        let mut out = vec![S::zero_in(&field); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse to the same truncation order.
    pub fn inverse(&self) -> Result<Series<S>> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let field = self.field();
        let inv0 = self.coeffs[0].inv()?;
        let n = self.order();
        let mut out: Vec<S> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut s = S::zero_in(&field);
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    s = s.add(&a.mul(&out[k - j]));
                }
            }
            out.push(s.mul(&inv0).neg());
        }
        Ok(Series { coeffs: out })
    }

    pub fn to_rational(&self) -> Option<Series<Rational>> {
        Some(Series {
            coeffs: self
                .coeffs
                .iter()
                .map(Scalar::to_rational)
                .collect::<Option<Vec<_>>>()?,
        })
    }
}

/// Truncated expansion of `1 / ∏ (1 − λ^{d_i})`.
pub fn inverse_product(degrees: &[usize], order: usize) -> Series<Rational> {
    let mut denom = Series::one(order, &());
    for &d in degrees {
        let mut f = vec![Rational::one()];
        f.resize(d + 1, Rational::zero());
        f[d] = Rational::from(-1);
        denom = denom.mul(&Series::new(f, order, &()));
    }
    denom.inverse().expect("constant term is one")
}

/// `numerator(λ) / ∏ (1 − λ^{d_i})` where `numerator` lists `(exponent, coefficient)` pairs.
pub fn rational_function(numerator: &[(usize, i64)], degrees: &[usize], order: usize) -> Series<Rational> {
    let mut num = vec![Rational::zero(); order + 1];
    for &(e, c) in numerator {
        if e <= order {
            num[e] += &Rational::from(c);
        }
    }
    Series::new(num, order, &()).mul(&inverse_product(degrees, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series<Rational>) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn geometric_series() {
        let s = Series::new(vec![Rational::one(), Rational::from(-1)], 4, &());
        assert_eq!(ints(&s.inverse().unwrap()), vec![1, 1, 1, 1, 1]);
        let t = Series::new(vec![Rational::one(), Rational::one()], 2, &());
        assert_eq!(ints(&t.inverse().unwrap()), vec![1, -1, 1]);
    }

    #[test]
    fn gleason_shape() {
        assert_eq!(ints(&inverse_product(&[2, 8], 10)), vec![1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2]);
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let s = Series::new(vec![Rational::zero(), Rational::one()], 3, &());
        assert_eq!(s.inverse(), Err(Error::ZeroConstantTerm));
    }
}
