use serde_json::Value;

use super::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    field: S::Field,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize, field: &S::Field) -> Self {
        Matrix {
            rows,
            cols,
            field: field.clone(),
            data: vec![S::zero_in(field); rows * cols],
        }
    }

    pub fn identity(n: usize, field: &S::Field) -> Self {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.data[i * n + i] = S::one_in(field);
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<S>>, field: &S::Field) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            field: field.clone(),
            data,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, field: &S::Field, f: impl Fn(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            field: field.clone(),
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn map<T: Scalar>(&self, field: &T::Field, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: field.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::<S>::zeros(self.rows, other.cols, &self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix<S>) -> Result<Matrix<S>> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let mut out = self.clone();
        for (o, b) in out.data.iter_mut().zip(&other.data) {
            *o = o.add(b);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &S) -> Matrix<S> {
        let mut out = self.clone();
        for o in out.data.iter_mut() {
            *o = o.mul(s);
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(S::zero_in(&self.field), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect())
    }

    pub fn transpose(&self) -> Matrix<S> {
        Matrix::from_fn(self.cols, self.rows, &self.field, |i, j| self.get(j, i).clone())
    }

    pub fn conj_transpose(&self) -> Matrix<S> {
        Matrix::from_fn(self.cols, self.rows, &self.field, |i, j| self.get(j, i).conj())
    }

    /// Kronecker product `self ⊗ other`: block `(i, j)` is `self[i][j]·other`.
    pub fn kron(&self, other: &Matrix<S>) -> Matrix<S> {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        Matrix::from_fn(r, c, &self.field, |i, j| {
            self.get(i / other.rows, j / other.cols)
                .mul(other.get(i % other.rows, j % other.cols))
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// `M·M* = I`, with `*` the conjugate transpose under the field's conjugation.
    pub fn is_unitary(&self) -> bool {
        self.mul(&self.conj_transpose()).is_ok_and(|p| p.is_identity())
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix<S>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n, &self.field);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).inv()?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.sub_row_multiple(r, col, &f);
                    inv.sub_row_multiple(r, col, &f);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &S) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = self.data[idx].mul(s);
        }
    }

    /// `row[target] -= f · row[source]`.
    fn sub_row_multiple(&mut self, target: usize, source: usize, f: &S) {
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j].clone();
            if !s.is_zero() {
                let idx = target * self.cols + j;
                self.data[idx] = self.data[idx].sub(&f.mul(&s));
            }
        }
    }

    /// Coefficients of `det(λI − A)`, index `k` holding the coefficient of
    /// `λ^k`, computed with Berkowitz's division-free recurrence.
    pub fn char_poly(&self) -> Result<Vec<S>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let rows: Vec<Vec<S>> = self.to_rows();
        Ok(berkowitz(&rows, &self.field))
    }

    pub fn det(&self) -> Result<S> {
        let cp = self.char_poly()?;
        let c0 = cp[0].clone();
        Ok(if self.rows.is_multiple_of(2) { c0 } else { c0.neg() })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(Scalar::to_json).collect()))
                .collect(),
        )
    }
}

/// Berkowitz recurrence over any commutative ring expressed through
/// [`Scalar`] (only `add`, `sub`, `mul` are used). Returns ascending
/// coefficients of `det(λI − A)`.
pub fn berkowitz<S: Scalar>(a: &[Vec<S>], field: &S::Field) -> Vec<S> {
    let n = a.len();
    let zero = S::zero_in(field);
    // Descending coefficients of the characteristic polynomial of the leading
    // r×r block.
    let mut v: Vec<S> = vec![S::one_in(field)];
    for r in 0..n {
        // Toeplitz column: 1, −a_rr, −R·C, −R·M·C, …, −R·M^{r−1}·C.
        let mut t = Vec::with_capacity(r + 2);
        t.push(S::one_in(field));
        t.push(a[r][r].neg());
        let mut mc: Vec<S> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(zero.clone(), |acc, j| acc.add(&a[r][j].mul(&mc[j])));
            t.push(rc.neg());
            mc = (0..r)
                .map(|i| (0..r).fold(zero.clone(), |acc, j| acc.add(&a[i][j].mul(&mc[j]))))
                .collect();
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut s = zero.clone();
            for (j, vj) in v.iter().enumerate() {
                if j <= i {
                    s = s.add(&t[i - j].mul(vj));
                }
            }
            next.push(s);
        }
        v = next;
    }
    v.reverse();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Rational, SqrtTwo};

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn hadamard_is_involution() {
        let r = SqrtTwo::inv_root();
        let h = Matrix::from_rows(vec![vec![r.clone(), r.clone()], vec![r.clone(), -&r]], &()).unwrap();
        assert!(h.mul(&h).unwrap().is_identity());
        assert!(h.is_unitary());
    }

    #[test]
    fn det_and_char_poly_of_paulis() {
        let s1 = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]], &()).unwrap();
        assert_eq!(s1.det().unwrap(), q(-1));
        let s2 = Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(-1)]], &()).unwrap();
        assert_eq!(s2.char_poly().unwrap(), vec![q(-1), q(0), q(1)]);
    }

    #[test]
    fn char_poly_matches_cofactor_expansion() {
        let m = Matrix::from_rows(
            vec![
                vec![q(2), q(-1), q(0)],
                vec![q(3), q(1), q(4)],
                vec![q(-2), q(5), q(1)],
            ],
            &(),
        )
        .unwrap();
        // det(λI − A) = λ³ − 4λ² + (2+3 + 2−0 + 1−20)λ − det A
        let det = q(2) * (q(1) - q(20)) + q(1) * (q(3) + q(8));
        assert_eq!(m.det().unwrap(), det.clone());
        let cp = m.char_poly().unwrap();
        assert_eq!(cp[3], q(1));
        assert_eq!(cp[2], q(-4));
        assert_eq!(cp[1], q(5) + q(2) + q(-19));
        assert_eq!(cp[0], -det);
    }

    #[test]
    fn inverse_round_trip_and_singular() {
        let m = Matrix::from_rows(vec![vec![q(2), q(1)], vec![q(7), q(4)]], &()).unwrap();
        assert!(m.mul(&m.inverse().unwrap()).unwrap().is_identity());
        let s = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]], &()).unwrap();
        assert_eq!(s.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn kron_layout() {
        let a = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(4)]], &()).unwrap();
        let i = Matrix::<Rational>::identity(2, &());
        let k = a.kron(&i);
        assert_eq!(k.get(0, 2), &q(2));
        assert_eq!(k.get(1, 3), &q(2));
        assert_eq!(k.get(2, 0), &q(3));
        assert_eq!(k.get(0, 1), &q(0));
    }
}
