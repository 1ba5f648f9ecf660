//! Hermite normal form of integer row lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-style Hermite normal form: upper echelon, positive pivots, entries
/// above each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hnf(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut b = HnfBuilder::new(ncols);
    for r in rows {
        b.insert(r.clone());
    }
    b.finish()
}

pub fn hnf_i64(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    hnf(&big)
}

/// Incremental HNF: vectors are inserted one at a time and the echelon
/// basis is kept up to date.
#[derive(Clone, Debug)]
pub struct HnfBuilder {
    ncols: usize,
    /// `pivots[c]` holds the basis row whose leading column is `c`.
    pivots: Vec<Option<Vec<BigInt>>>,
    rank: usize,
}

impl HnfBuilder {
    pub fn new(ncols: usize) -> Self {
        HnfBuilder {
            ncols,
            pivots: vec![None; ncols],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Product of the pivots; equals the index in `ℤ^n` at full rank.
    pub fn pivot_product(&self) -> BigInt {
        self.pivots
            .iter()
            .flatten()
            .zip(0..)
            .fold(BigInt::one(), |acc, (row, _)| {
                let lead = row.iter().find(|x| !x.is_zero()).expect("nonzero row");
                acc * lead
            })
    }

    /// Inserts `v`; returns `true` if the lattice grew.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.ncols, "vector length");
        let mut changed = false;
        for c in 0..self.ncols {
            if v[c].is_zero() {
                continue;
            }
            match self.pivots[c].take() {
                None => {
                    if v[c].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                    }
                    self.reduce_tail(&mut v, c);
                    self.pivots[c] = Some(v);
                    self.rank += 1;
                    return true;
                }
                Some(row) => {
                    let a = row[c].clone();
                    let b = v[c].clone();
                    if (&b % &a).is_zero() {
                        let q = &b / &a;
                        for (x, y) in v.iter_mut().zip(&row).skip(c) {
                            *x -= &q * y;
                        }
                        self.pivots[c] = Some(row);
                        continue;
                    }
                    let e = a.extended_gcd(&b);
                    let (g, x, y) = (e.gcd, e.x, e.y);
                    let ag = &a / &g;
                    let bg = &b / &g;
                    let mut new_row: Vec<BigInt> = row.iter().zip(&v).map(|(r, s)| &x * r + &y * s).collect();
                    let new_v: Vec<BigInt> = row.iter().zip(&v).map(|(r, s)| &bg * r - &ag * s).collect();
                    if new_row[c].is_negative() {
                        new_row.iter_mut().for_each(|t| *t = -&*t);
                    }
                    self.reduce_tail(&mut new_row, c);
                    self.pivots[c] = Some(new_row);
                    v = new_v;
                    changed = true;
                }
            }
        }
        changed
    }

    /// Reduces entries of `v` after column `c` modulo the later pivots.
    fn reduce_tail(&self, v: &mut [BigInt], c: usize) {
        for d in c + 1..self.ncols {
            if let Some(row) = &self.pivots[d] {
                let q = v[d].div_floor(&row[d]);
                if !q.is_zero() {
                    for (x, y) in v.iter_mut().zip(row).skip(d) {
                        *x -= &q * y;
                    }
                }
            }
        }
    }

    /// Whether `v` lies in the current lattice.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for c in 0..self.ncols {
            if v[c].is_zero() {
                continue;
            }
            let Some(row) = &self.pivots[c] else {
                return false;
            };
            let (q, r) = v[c].div_rem(&row[c]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row).skip(c) {
                *x -= &q * y;
            }
        }
        true
    }

    /// The reduced echelon basis, top to bottom.
    pub fn finish(&self) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<(usize, Vec<BigInt>)> = self
            .pivots
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.clone().map(|r| (c, r)))
            .collect();
        // Left to right: reducing by pivot `i` only touches columns `≥ c_i`.
        for i in 0..rows.len() {
            let (ci, row_i) = rows[i].clone();
            for (_, row_j) in rows.iter_mut().take(i) {
                let q = row_j[ci].div_floor(&row_i[ci]);
                if !q.is_zero() {
                    for (x, y) in row_j.iter_mut().zip(&row_i).skip(ci) {
                        *x -= &q * y;
                    }
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// Absolute determinant of a full-rank lattice given by an HNF basis.
pub fn hnf_index(basis: &[Vec<BigInt>]) -> BigInt {
    basis
        .iter()
        .map(|r| r.iter().find(|x| !x.is_zero()).cloned().unwrap_or_default())
        .fold(BigInt::one(), |a, b| a * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_examples() {
        let h = hnf_i64(&[vec![2, 4], vec![3, 5]]);
        assert_eq!(h, big(&[&[1, 1], &[0, 2]]));
        assert_eq!(hnf_index(&h), BigInt::from(2));
        let h = hnf_i64(&[vec![4, 6], vec![6, 9], vec![0, 0]]);
        assert_eq!(h, big(&[&[2, 3]]));
    }

    #[test]
    fn membership() {
        let mut b = HnfBuilder::new(2);
        b.insert(vec![BigInt::from(1), BigInt::from(1)]);
        b.insert(vec![BigInt::from(0), BigInt::from(2)]);
        assert!(b.contains(&[BigInt::from(3), BigInt::from(5)]));
        assert!(!b.contains(&[BigInt::from(1), BigInt::from(0)]));
        assert_eq!(b.pivot_product(), BigInt::from(2));
    }
}
