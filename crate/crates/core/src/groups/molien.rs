use std::collections::HashMap;

use rayon::prelude::*;

use super::compact::{CompactMatrix, Ring};
use super::group::Group;
use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, Rational, Series};

type CharPolyKey = (i64, Vec<i128>);

/// Berkowitz recurrence over the integral ring; returns ascending
/// coefficients of `det(λI − B)` as flattened ring coordinates.
fn ring_berkowitz(ring: &Ring, b: &[Vec<Vec<i128>>]) -> Result<Vec<Vec<i128>>> {
    let n = b.len();
    let r = ring.rank();
    let zero = vec![0i128; r];
    let mut one = zero.clone();
    one[0] = 1;
    let neg = |x: &[i128]| -> Vec<i128> { x.iter().map(|v| -v).collect() };
    let mut v: Vec<Vec<i128>> = vec![one.clone()];
    for k in 0..n {
        let mut t = Vec::with_capacity(k + 2);
        t.push(one.clone());
        t.push(neg(&b[k][k]));
        let mut mc: Vec<Vec<i128>> = (0..k).map(|i| b[i][k].clone()).collect();
        for _ in 0..k {
            let mut rc = zero.clone();
            for j in 0..k {
                ring.mul_acc_i128(&mut rc, &b[k][j], &mc[j])?;
            }
            t.push(neg(&rc));
            let mut next = Vec::with_capacity(k);
            for row in b.iter().take(k) {
                let mut s = zero.clone();
                for j in 0..k {
                    ring.mul_acc_i128(&mut s, &row[j], &mc[j])?;
                }
                next.push(s);
            }
            mc = next;
        }
        let mut next = Vec::with_capacity(k + 2);
        for i in 0..k + 2 {
            let mut s = zero.clone();
            for (j, vj) in v.iter().enumerate().take(i + 1) {
                ring.mul_acc_i128(&mut s, &t[i - j], vj)?;
            }
            next.push(s);
        }
        v = next;
    }
    v.reverse();
    Ok(v)
}

fn char_poly_key(ring: &Ring, g: &CompactMatrix) -> Result<CharPolyKey> {
    let n = g.dim();
    let b: Vec<Vec<Vec<i128>>> = (0..n)
        .map(|i| (0..n).map(|j| g.entry(i, j).iter().map(|&x| x as i128).collect()).collect())
        .collect();
    let cp = ring_berkowitz(ring, &b)?;
    Ok((g.den(), cp.into_iter().flatten().collect()))
}

fn merge(mut a: HashMap<CharPolyKey, u64>, b: HashMap<CharPolyKey, u64>) -> HashMap<CharPolyKey, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Turns characteristic-polynomial class counts into `(1/|G|) Σ 1/det(I − λg)`.
fn series_from_classes(
    ring: &Ring,
    dim: usize,
    classes: HashMap<CharPolyKey, u64>,
    group_order: u128,
    order: usize,
) -> Result<Series<Rational>> {
    let n = ring.conductor();
    let r = ring.rank();
    let mut keys: Vec<_> = classes.into_iter().collect();
    keys.sort();
    let parts = keys
        .par_iter()
        .map(|((den, flat), count)| {
            // c_k(A) = c_k(B) / den^{n−k} for A = B/den; det(I − λA) = Σ_k c_k λ^{n−k}.
            let mut det = vec![Cyclotomic::zero(n)?; dim + 1];
            for k in 0..=dim {
                let coords = &flat[k * r..(k + 1) * r];
                let scale = (*den as i128)
                    .checked_pow((dim - k) as u32)
                    .ok_or_else(|| Error::budget("denominator overflow"))?;
                det[dim - k] = ring.to_cyclotomic(coords, scale);
            }
            let s = Series::new(det, order, &n).inverse()?;
            Ok(s.scale(&Cyclotomic::from_rational(n, Rational::from(*count as i64))?))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = Series::zero(order, &n);
    for p in &parts {
        total = total.add(p);
    }
    let inv_order = Rational::new(1, num_bigint::BigInt::from(group_order))?;
    let total = total.scale(&Cyclotomic::from_rational(n, inv_order)?);
    let rational = total
        .to_rational()
        .ok_or_else(|| Error::NotRational("Molien series coefficient".into()))?;
    for (k, c) in rational.coeffs().iter().enumerate() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::invalid(format!(
                "Molien coefficient at degree {k} is {c}, not a non-negative integer"
            )));
        }
    }
    Ok(rational)
}

/// Molien series `Φ(λ) = (1/|G|) Σ_g 1/det(I − λg)` to `λ^order`, summed
/// exactly over the elements grouped by characteristic polynomial.
pub fn molien_series(group: &Group, order: usize) -> Result<Series<Rational>> {
    let ring = group.ring();
    let classes = group.fold_elements(
        HashMap::new,
        |mut acc, g| {
            *acc.entry(char_poly_key(ring, g)?).or_insert(0u64) += 1;
            Ok(acc)
        },
        merge,
    )?;
    series_from_classes(ring, group.dim(), classes, group.order(), order)
}

/// Molien series of an explicitly listed group.
pub fn molien_series_of_elements(ring: &Ring, elements: &[CompactMatrix], order: usize) -> Result<Series<Rational>> {
    let Some(first) = elements.first() else {
        return Err(Error::invalid("empty element list"));
    };
    let classes = elements
        .par_iter()
        .map(|g| char_poly_key(ring, g))
        .try_fold(HashMap::new, |mut acc, k| {
            *acc.entry(k?).or_insert(0u64) += 1;
            Ok::<_, Error>(acc)
        })
        .try_reduce(HashMap::new, |a, b| Ok(merge(a, b)))?;
    series_from_classes(ring, first.dim(), classes, elements.len() as u128, order)
}

/// `(1 + c λ^d)^{−k}` to `λ^order`.
fn binomial_inverse(c: i64, d: usize, k: usize, order: usize) -> Series<Rational> {
    let mut f = vec![Rational::one()];
    f.resize(d + 1, Rational::zero());
    f[d] = Rational::from(c);
    let base = Series::new(f, order, &()).inverse().expect("constant term is one");
    (0..k).fold(Series::one(order, &()), |acc, _| acc.mul(&base))
}

/// Closed form for the Molien series of `E(m)` with `n = 2^m`:
/// `(1/2n²) [ (1−λ)^{−n} + (1+λ)^{−n} + (n²+n−2)(1−λ²)^{−n/2} + (n²−n)(1+λ²)^{−n/2} ]`.
pub fn extraspecial_molien_formula(m: u32, order: usize) -> Series<Rational> {
    let n = 1usize << m;
    let n2 = (n * n) as i64;
    let total = binomial_inverse(-1, 1, n, order)
        .add(&binomial_inverse(1, 1, n, order))
        .add(&binomial_inverse(-1, 2, n / 2, order).scale(&Rational::from(n2 + n as i64 - 2)))
        .add(&binomial_inverse(1, 2, n / 2, order).scale(&Rational::from(n2 - n as i64)));
    total.scale(&Rational::frac(1, 2 * n2))
}
