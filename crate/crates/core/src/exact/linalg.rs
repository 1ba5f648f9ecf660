//! Row reduction over exact fields.

use super::Scalar;
use crate::error::{Error, Result};

/// Reduced row echelon form in place. Returns the pivot columns.
pub fn rref<S: Scalar>(rows: &mut Vec<Vec<S>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !rows[r][c].is_one() {
            for x in rows[r].iter_mut() {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace<S: Scalar>(rows: &[Vec<S>], ncols: usize, field: &S::Field) -> Vec<Vec<S>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero_in(field); ncols];
            v[f] = S::one_in(field);
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = row[f].neg();
            }
            v
        })
        .collect()
}

/// Solves `x A = b` for a row vector `x`, where `A` has the given rows.
pub fn solve_left<S: Scalar>(rows: &[Vec<S>], b: &[S], field: &S::Field) -> Result<Option<Vec<S>>> {
    let n = rows.len();
    let d = b.len();
    if rows.iter().any(|r| r.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: rows.iter().map(Vec::len).find(|&l| l != d).unwrap_or(d),
        });
    }
    // Columns of the augmented system: equation j is Σ_i x_i A[i][j] = b[j].
    let mut sys: Vec<Vec<S>> = (0..d)
        .map(|j| {
            let mut eq: Vec<S> = rows.iter().map(|r| r[j].clone()).collect();
            eq.push(b[j].clone());
            eq
        })
        .collect();
    let pivots = rref(&mut sys);
    if pivots.contains(&n) {
        return Ok(None);
    }
    let mut x = vec![S::zero_in(field); n];
    for (row, &p) in sys.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = vec![q(&[1, 2, 3]), q(&[2, 4, 6]), q(&[1, 0, 1])];
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3, &());
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot = row.iter().zip(&ns[0]).fold(Rational::zero(), |s, (x, y)| &s + &(x * y));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn left_solve() {
        let a = vec![q(&[1, 1]), q(&[0, 2])];
        let x = solve_left(&a, &q(&[3, 7]), &()).unwrap().unwrap();
        assert_eq!(x, q(&[3, 2]));
        let none = solve_left(&[q(&[1, 1])], &q(&[1, 2]), &()).unwrap();
        assert!(none.is_none());
    }
}
