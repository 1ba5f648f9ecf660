use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use super::compact::{CompactMatrix, Ring};
use super::group::Group;
use crate::error::{Error, Result};
use crate::exact::{linalg, monomials_of_degree, Cyclotomic, Exponent, Poly, RatPoly, Rational};

/// Largest monomial space the fixed-space computation will attempt.
pub const DEFAULT_MONOMIAL_BUDGET: usize = 20_000;

/// Polynomial with integral ring coordinates as coefficients.
type RingPoly = HashMap<Exponent, Vec<i128>>;

fn overflow() -> Error {
    Error::budget("integer overflow in Reynolds averaging")
}

fn add_into(acc: &mut RingPoly, e: Exponent, c: &[i128]) -> Result<()> {
    let slot = acc.entry(e).or_insert_with(|| vec![0; c.len()]);
    for (a, b) in slot.iter_mut().zip(c) {
        *a = a.checked_add(*b).ok_or_else(overflow)?;
    }
    Ok(())
}

fn poly_mul(ring: &Ring, a: &RingPoly, b: &RingPoly) -> Result<RingPoly> {
    let mut out = RingPoly::with_capacity(a.len() * b.len() / 2 + 1);
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = ring.mul_i128(ca, cb)?;
            add_into(&mut out, e, &c)?;
        }
    }
    out.retain(|_, c| c.iter().any(|&x| x != 0));
    Ok(out)
}

/// Reynolds operator of a group stored as transversal × monomial subgroup,
/// restricted to homogeneous polynomials of one degree.
///
/// The average is split as `(1/|G|) Σ_t t·(Σ_h h·f)`. The inner sum only
/// permutes monomials and multiplies by roots of unity; the outer sum
/// substitutes the columns of each `t`. Everything runs in integer ring
/// coordinates and is divided out once at the end.
pub struct ReynoldsOperator<'a> {
    group: &'a Group,
    degree: usize,
    /// For each `t`: `den_t` and `powers[i][k] = (den_t·column_i(t))^k`.
    powers: Vec<(i64, Vec<Vec<RingPoly>>)>,
    /// For each `h`: target variable of each column and its phase.
    monomials: Vec<(Vec<usize>, Vec<Vec<i64>>)>,
    /// Least common multiple of the transversal denominators.
    common_den: i64,
}

impl<'a> ReynoldsOperator<'a> {
    pub fn new(group: &'a Group, degree: usize) -> Result<Self> {
        let ring = group.ring();
        let n = group.dim();
        let r = ring.rank();
        let mut monomials = Vec::with_capacity(group.subgroup().len());
        for h in group.subgroup() {
            let rows = h
                .monomial_rows()
                .ok_or_else(|| Error::invalid("subgroup element is not monomial"))?;
            if h.den() != 1 {
                return Err(Error::invalid("monomial subgroup element has a denominator"));
            }
            let phases = rows.iter().enumerate().map(|(j, &i)| h.entry(i, j).to_vec()).collect();
            monomials.push((rows, phases));
        }
        let powers = group
            .transversal()
            .iter()
            .map(|t| {
                let cols = (0..n)
                    .map(|i| {
                        let mut lin = RingPoly::new();
                        for j in 0..n {
                            let c = t.entry(j, i);
                            if c.iter().any(|&x| x != 0) {
                                let mut e = vec![0u16; n];
                                e[j] = 1;
                                lin.insert(e, c.iter().map(|&x| x as i128).collect());
                            }
                        }
                        let mut one = vec![0i128; r];
                        one[0] = 1;
                        let mut pw = vec![RingPoly::from([(vec![0u16; n], one)])];
                        for k in 1..=degree {
                            let next = poly_mul(ring, &pw[k - 1], &lin)?;
                            pw.push(next);
                        }
                        Ok(pw)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((t.den(), cols))
            })
            .collect::<Result<Vec<_>>>()?;
        let common_den = group.transversal().iter().fold(1i64, |l, t| l.lcm(&t.den()));
        Ok(ReynoldsOperator {
            group,
            degree,
            powers,
            monomials,
            common_den,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `Σ_h h·x^e` in ring coordinates.
    fn subgroup_sum(&self, e: &[u16]) -> RingPoly {
        let ring = self.group.ring();
        let mut acc: HashMap<Exponent, Vec<i64>> = HashMap::new();
        for (rows, phases) in &self.monomials {
            let mut img = vec![0u16; e.len()];
            let mut c = ring.one();
            for (j, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                img[rows[j]] += k;
                for _ in 0..k {
                    c = ring.mul(&c, &phases[j]);
                }
            }
            let slot = acc.entry(img).or_insert_with(|| vec![0; c.len()]);
            for (a, b) in slot.iter_mut().zip(&c) {
                *a += b;
            }
        }
        acc.into_iter()
            .filter(|(_, c)| c.iter().any(|&x| x != 0))
            .map(|(e, c)| (e, c.into_iter().map(|x| x as i128).collect()))
            .collect()
    }

    /// `Σ_t (D/den_t)^d · (den_t t)·f` where `D` is the common denominator.
    fn transversal_sum(&self, f: &RingPoly) -> Result<RingPoly> {
        let ring = self.group.ring();
        let d = self.degree as u32;
        let mut total = RingPoly::new();
        for (den, pw) in &self.powers {
            let factor = ((self.common_den / den) as i128).checked_pow(d).ok_or_else(overflow)?;
            for (e, c) in f {
                let mut term: Option<RingPoly> = None;
                for (i, &k) in e.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    let p = &pw[i][k as usize];
                    term = Some(match term {
                        None => p.clone(),
                        Some(t) => poly_mul(ring, &t, p)?,
                    });
                }
                let term = term.unwrap_or_else(|| pw[0][0].clone());
                let scaled: Vec<i128> = c.iter().map(|x| x.checked_mul(factor)).collect::<Option<_>>().ok_or_else(overflow)?;
                for (te, tc) in term {
                    let prod = ring.mul_i128(&tc, &scaled)?;
                    add_into(&mut total, te, &prod)?;
                }
            }
        }
        total.retain(|_, c| c.iter().any(|&x| x != 0));
        Ok(total)
    }

    fn check_input(&self, p: &RatPoly) -> Result<()> {
        if p.num_vars() != self.group.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.group.dim(),
                got: p.num_vars(),
            });
        }
        if !p.is_zero() && p.homogeneous_degree() != Some(self.degree as u32) {
            return Err(Error::invalid(format!("polynomial is not homogeneous of degree {}", self.degree)));
        }
        Ok(())
    }

    /// Integer numerators of `p` over a common denominator.
    fn integerize(p: &RatPoly) -> (BigInt, Vec<(Exponent, i128)>) {
        let l = Rational::lcm_denominators(p.terms().map(|(_, c)| c));
        let lq = Rational::from_int(l.clone());
        let terms = p
            .terms()
            .map(|(e, c)| {
                let n = (c * &lq).numer().clone();
                (e.clone(), i128::try_from(n).unwrap_or(i128::MAX))
            })
            .collect();
        (l, terms)
    }

    fn finish(&self, acc: &RingPoly, denom: BigInt) -> Result<RatPoly> {
        let ring = self.group.ring();
        let den = Rational::from_int(denom);
        let mut out = RatPoly::zero(self.group.dim(), &());
        let mut terms: BTreeMap<&Exponent, &Vec<i128>> = BTreeMap::new();
        terms.extend(acc.iter());
        for (e, c) in terms {
            let q = ring
                .to_rational(c, &den)
                .ok_or_else(|| Error::NotRational(format!("Reynolds average coefficient at {e:?}")))?;
            out.add_term(e.clone(), q);
        }
        Ok(out)
    }

    /// The full average `(1/|G|) Σ_g g·p`.
    pub fn apply(&self, p: &RatPoly) -> Result<RatPoly> {
        self.check_input(p)?;
        let (l, terms) = Self::integerize(p);
        if terms.iter().any(|(_, c)| *c == i128::MAX) {
            return Err(overflow());
        }
        let mut inner = RingPoly::new();
        for (e, c) in &terms {
            for (e2, v) in self.subgroup_sum(e) {
                let scaled: Vec<i128> = v.iter().map(|x| x.checked_mul(*c)).collect::<Option<_>>().ok_or_else(overflow)?;
                add_into(&mut inner, e2, &scaled)?;
            }
        }
        inner.retain(|_, c| c.iter().any(|&x| x != 0));
        let acc = self.transversal_sum(&inner)?;
        let denom = l * BigInt::from(self.common_den).pow(self.degree as u32) * BigInt::from(self.group.order());
        self.finish(&acc, denom)
    }

    /// Average over the monomial subgroup only, `(1/|H|) Σ_h h·p`.
    pub fn subgroup_average(&self, p: &RatPoly) -> Result<RatPoly> {
        self.check_input(p)?;
        let (l, terms) = Self::integerize(p);
        let mut inner = RingPoly::new();
        for (e, c) in &terms {
            for (e2, v) in self.subgroup_sum(e) {
                let scaled: Vec<i128> = v.iter().map(|x| x.checked_mul(*c)).collect::<Option<_>>().ok_or_else(overflow)?;
                add_into(&mut inner, e2, &scaled)?;
            }
        }
        inner.retain(|_, c| c.iter().any(|&x| x != 0));
        let denom = l * BigInt::from(self.monomials.len());
        self.finish(&inner, denom)
    }

    /// Orbit of the exponent `e` under the monomial subgroup (ignoring phases).
    pub fn monomial_orbit(&self, e: &[u16]) -> HashSet<Exponent> {
        self.monomials
            .iter()
            .map(|(rows, _)| {
                let mut img = vec![0u16; e.len()];
                for (j, &k) in e.iter().enumerate() {
                    img[rows[j]] += k;
                }
                img
            })
            .collect()
    }
}

/// `(1/|G|) Σ_g g·p` for any (not necessarily homogeneous) rational `p`.
pub fn reynolds_average(group: &Group, p: &RatPoly) -> Result<RatPoly> {
    if p.num_vars() != group.dim() {
        return Err(Error::DimensionMismatch {
            expected: group.dim(),
            got: p.num_vars(),
        });
    }
    let mut by_degree: BTreeMap<u32, RatPoly> = BTreeMap::new();
    for (e, c) in p.terms() {
        let d: u32 = e.iter().map(|&x| x as u32).sum();
        by_degree
            .entry(d)
            .or_insert_with(|| RatPoly::zero(p.num_vars(), &()))
            .add_term(e.clone(), c.clone());
    }
    let mut out = RatPoly::zero(p.num_vars(), &());
    for (d, part) in by_degree {
        let op = ReynoldsOperator::new(group, d as usize)?;
        out = out.add(&op.apply(&part)?)?;
    }
    Ok(out)
}

/// Basis (in reduced echelon form) of the degree-`degree` invariants of `group`,
/// obtained by averaging one monomial from each orbit of the monomial subgroup.
pub fn invariant_space(group: &Group, degree: usize, monomial_budget: usize) -> Result<Vec<RatPoly>> {
    let n = group.dim();
    let count = binomial(degree + n - 1, n - 1);
    if count > monomial_budget as u128 {
        return Err(Error::budget(format!(
            "{count} monomials of degree {degree} in {n} variables exceed the budget {monomial_budget}"
        )));
    }
    let monos = monomials_of_degree(n, degree as u16);
    let index: HashMap<&Exponent, usize> = monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let op = ReynoldsOperator::new(group, degree)?;
    let mut seen = vec![false; monos.len()];
    let mut reps = Vec::new();
    for (i, e) in monos.iter().enumerate() {
        if seen[i] {
            continue;
        }
        for o in op.monomial_orbit(e) {
            seen[index[&o]] = true;
        }
        reps.push(e.clone());
    }
    let averaged: Vec<RatPoly> = reps
        .par_iter()
        .map(|e| op.apply(&RatPoly::monomial(e.clone(), Rational::one())))
        .collect::<Result<Vec<_>>>()?;
    let mut rows: Vec<Vec<Rational>> = averaged
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| monos.iter().map(|e| p.coeff(e)).collect())
        .collect();
    linalg::rref(&mut rows);
    Ok(rows
        .into_iter()
        .map(|row| {
            let mut p = RatPoly::zero(n, &());
            for (e, c) in monos.iter().zip(row) {
                p.add_term(e.clone(), c);
            }
            p
        })
        .collect())
}

/// `g·p`, i.e. `p(gᵗx)`, with exact cyclotomic coefficients.
pub fn act(ring: &Ring, g: &CompactMatrix, p: &RatPoly) -> Result<Poly<Cyclotomic>> {
    let n = g.dim();
    if p.num_vars() != n {
        return Err(Error::DimensionMismatch { expected: n, got: p.num_vars() });
    }
    let cond = ring.conductor();
    let forms: Vec<Poly<Cyclotomic>> = (0..n)
        .map(|i| {
            let mut f = Poly::zero(n, &cond);
            for j in 0..n {
                let mut e = vec![0u16; n];
                e[j] = 1;
                f.add_term(e, ring.to_cyclotomic(g.entry(j, i), g.den() as i128));
            }
            f
        })
        .collect();
    let pc = p.map_coeffs(&cond, |c| Cyclotomic::from_rational(cond, c.clone()).expect("supported conductor"));
    pc.substitute(&forms)
}

/// Whether `g·p = p` exactly.
pub fn is_invariant(ring: &Ring, g: &CompactMatrix, p: &RatPoly) -> Result<bool> {
    let img = act(ring, g, p)?;
    let cond = ring.conductor();
    let pc = p.map_coeffs(&cond, |c| Cyclotomic::from_rational(cond, c.clone()).expect("supported conductor"));
    Ok(img == pc)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}
