use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable.
pub type Exponent = Vec<u16>;

/// Sparse multivariate polynomial keyed by exponent vectors. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<S: Scalar> {
    num_vars: usize,
    field: S::Field,
    terms: BTreeMap<Exponent, S>,
}

/// Polynomial with rational coefficients.
pub type RatPoly = Poly<Rational>;

impl<S: Scalar> Poly<S> {
    pub fn zero(num_vars: usize, field: &S::Field) -> Self {
        Poly {
            num_vars,
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: S) -> Self {
        let mut p = Poly::zero(num_vars, &c.field());
        p.add_term(vec![0; num_vars], c);
        p
    }

    pub fn one(num_vars: usize, field: &S::Field) -> Self {
        Poly::constant(num_vars, S::one_in(field))
    }

    pub fn var(num_vars: usize, i: usize, field: &S::Field) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Poly::monomial(e, S::one_in(field))
    }

    pub fn monomial(exponent: Exponent, c: S) -> Self {
        let mut p = Poly::zero(exponent.len(), &c.field());
        p.add_term(exponent, c);
        p
    }

    pub fn from_terms(num_vars: usize, field: &S::Field, terms: impl IntoIterator<Item = (Exponent, S)>) -> Result<Self> {
        let mut p = Poly::zero(num_vars, field);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    got: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u16]) -> S {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| S::zero_in(&self.field))
    }

    /// Adds `c·x^e`, dropping the term if it cancels.
    pub fn add_term(&mut self, e: Exponent, c: S) {
        debug_assert_eq!(e.len(), self.num_vars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn check_vars(&self, other: &Poly<S>) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly<S>) -> Result<Poly<S>> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly<S>) -> Result<Poly<S>> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly<S> {
        self.map_terms(|c| c.neg())
    }

    pub fn scale(&self, s: &S) -> Poly<S> {
        if s.is_zero() {
            return Poly::zero(self.num_vars, &self.field);
        }
        self.map_terms(|c| c.mul(s))
    }

    pub fn scale_rational(&self, q: &Rational) -> Poly<S> {
        self.scale(&S::from_rational(q.clone(), &self.field))
    }

    fn map_terms(&self, f: impl Fn(&S) -> S) -> Poly<S> {
        Poly {
            num_vars: self.num_vars,
            field: self.field.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), f(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Poly<S>) -> Result<Poly<S>> {
        self.check_vars(other)?;
        let mut out = Poly::zero(self.num_vars, &self.field);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Poly<S> {
        let mut out = Poly::one(self.num_vars, &self.field);
        for _ in 0..k {
            out = out.mul(self).expect("same variable count");
        }
        out
    }

    /// Total degree of the highest term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
    }

    /// Degree if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Substitutes `x_i ↦ forms[i]`.
    pub fn substitute(&self, forms: &[Poly<S>]) -> Result<Poly<S>> {
        if forms.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: forms.len(),
            });
        }
        let target = forms.first().map_or(self.num_vars, |f| f.num_vars);
        let mut powers: Vec<Vec<Poly<S>>> = forms
            .iter()
            .map(|f| vec![Poly::one(target, &self.field), f.clone()])
            .collect();
        let mut out = Poly::zero(target, &self.field);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&forms[i])?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][k as usize])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Poly<S> {
        let mut out = Poly::zero(self.num_vars, &self.field);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c.scale(&Rational::from(e[i] as i64)));
        }
        out
    }

    /// Euclidean Laplacian `Σ_i ∂²/∂x_i²`.
    pub fn laplacian(&self) -> Poly<S> {
        let mut out = Poly::zero(self.num_vars, &self.field);
        for (e, c) in &self.terms {
            for i in 0..self.num_vars {
                if e[i] >= 2 {
                    let mut e2 = e.clone();
                    e2[i] -= 2;
                    let f = (e[i] as i64) * (e[i] as i64 - 1);
                    out.add_term(e2, c.scale(&Rational::from(f)));
                }
            }
        }
        out
    }

    /// Coefficient-wise conversion to rationals; `None` if any coefficient is irrational.
    pub fn to_rational(&self) -> Option<RatPoly> {
        let mut out = RatPoly::zero(self.num_vars, &());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.to_rational()?);
        }
        Some(out)
    }

    pub fn map_coeffs<T: Scalar>(&self, field: &T::Field, f: impl Fn(&S) -> T) -> Poly<T> {
        let mut out = Poly::zero(self.num_vars, field);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Numerical evaluation at a real point.
    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.to_complex().0, |acc, (&k, &xi)| acc * xi.powi(k as i32))
            })
            .sum()
    }

    /// Deterministic text form such as `x00^2*x11^2 + 2*x01*x10`, with
    /// `name(i)` naming variable `i`.
    pub fn render_with(&self, name: impl Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{k}", name(i))),
                }
            }
            let mono = factors.join("*");
            let cs = c.to_string();
            let term = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono
            } else if c.neg().is_one() {
                format!("-{mono}")
            } else if cs.contains(['+', ' ']) || cs[1..].contains('-') {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }

    pub fn render(&self) -> String {
        self.render_with(|i| format!("x{i}"))
    }

    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = (self.num_vars as u32).to_le_bytes().to_vec();
        for (e, c) in &self.terms {
            for &k in e {
                out.extend_from_slice(&k.to_le_bytes());
            }
            c.write_canonical(&mut out);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "num_vars": self.num_vars,
            "terms": self
                .terms
                .iter()
                .map(|(e, c)| json!([e, c.to_json()]))
                .collect::<Vec<_>>(),
        })
    }
}

/// Names variable `i` of a genus-`m` polynomial by the bits of `i`, e.g. `x01`.
pub fn binary_var_name(m: usize) -> impl Fn(usize) -> String {
    move |i| {
        if m == 0 {
            "x".to_string()
        } else {
            format!("x{:0width$b}", i, width = m)
        }
    }
}

/// Names variable `i` of a polynomial on 𝔽_p^m by its base-`p` digits.
pub fn base_p_var_name(p: usize, m: usize) -> impl Fn(usize) -> String {
    move |i| {
        let mut digits = vec![0; m];
        let mut x = i;
        for d in digits.iter_mut().rev() {
            *d = x % p;
            x /= p;
        }
        format!("x{}", digits.iter().map(|d| d.to_string()).collect::<String>())
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in
/// lexicographically decreasing order.
pub fn monomials_of_degree(n: usize, d: u16) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(i: usize, left: u16, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let x = RatPoly::var(2, 0, &());
        let y = RatPoly::var(2, 1, &());
        let s = x.add(&y).unwrap();
        let d = x.sub(&y).unwrap();
        let p = s.mul(&d).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&[2, 0]), q(1));
        assert_eq!(p.coeff(&[0, 2]), q(-1));
        assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn substitution_and_laplacian() {
        // (x+y)^2 − (x−y)^2 = 4xy
        let x = RatPoly::var(2, 0, &());
        let y = RatPoly::var(2, 1, &());
        let sq = x.pow(2);
        let a = sq.substitute(&[x.add(&y).unwrap(), y.clone()]).unwrap();
        let b = sq.substitute(&[x.sub(&y).unwrap(), y.clone()]).unwrap();
        let r = a.sub(&b).unwrap();
        assert_eq!(r, RatPoly::monomial(vec![1, 1], q(4)));
        let q2 = x.pow(2).add(&y.pow(2)).unwrap();
        assert_eq!(q2.laplacian(), RatPoly::constant(2, q(4)));
        assert!(!q2.pow(4).laplacian().is_zero());
    }

    #[test]
    fn rendering() {
        let p = RatPoly::from_terms(4, &(), [(vec![2, 0, 0, 2], q(1)), (vec![0, 1, 1, 0], q(-2))]).unwrap();
        assert_eq!(p.render_with(binary_var_name(2)), "x00^2*x11^2 - 2*x01*x10");
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(4, 8).len(), 165);
        assert_eq!(monomials_of_degree(2, 3), vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
    }
}
