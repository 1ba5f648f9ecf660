//! Integer encodings of group elements.
//!
//! Every matrix produced by the generators has entries of the form
//! `(integral ring element) / den`, where the ring is ℤ[√2] or ℤ[ζ_n] in its
//! power basis. Storing `den` plus the integer coordinates gives a compact,
//! exactly hashable key and products computed with machine integers.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::{cyclotomic_table, Cyclotomic, Matrix, Rational, SqrtTwo};

/// Which integral ring the coordinates refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// ℤ[√2] with basis `1, √2`.
    SqrtTwo,
    /// ℤ[ζ_n] with the power basis.
    Cyclotomic(u32),
}

/// Structure constants of a rank-`r` integral ring.
#[derive(Clone, Debug)]
pub struct Ring {
    kind: RingKind,
    rank: usize,
    /// Nonzero structure constants `(i, j, k, c)`: `e_i·e_j` has `c` at `e_k`.
    products: Vec<(usize, usize, usize, i64)>,
    /// `conj[k]` holds the coordinates of the complex conjugate of `e_k`.
    conj: Vec<Vec<i64>>,
}

impl Ring {
    pub fn sqrt2() -> Self {
        Ring {
            kind: RingKind::SqrtTwo,
            rank: 2,
            products: vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 2)],
            conj: vec![vec![1, 0], vec![0, 1]],
        }
    }

    pub fn cyclotomic(n: u32) -> Result<Self> {
        let t = cyclotomic_table(n)?;
        let r = t.degree;
        let mut products = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for (k, &c) in t.power((i + j) as i64).iter().enumerate() {
                    if c != 0 {
                        products.push((i, j, k, c));
                    }
                }
            }
        }
        let conj = (0..r).map(|k| t.power(-(k as i64)).to_vec()).collect();
        Ok(Ring {
            kind: RingKind::Cyclotomic(n),
            rank: r,
            products,
            conj,
        })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Conductor of the cyclotomic field used to hold exact values; ℤ[√2] embeds in ℚ(ζ_8).
    pub fn conductor(&self) -> u32 {
        match self.kind {
            RingKind::SqrtTwo => 8,
            RingKind::Cyclotomic(n) => n,
        }
    }

    pub fn one(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        v[0] = 1;
        v
    }

    /// Coordinates of `ζ_n^k`; on ℤ[√2] only `±1` are available.
    pub fn root_of_unity(&self, k: i64) -> Vec<i64> {
        match self.kind {
            RingKind::SqrtTwo => {
                let mut v = self.one();
                if k.rem_euclid(2) == 1 {
                    v[0] = -1;
                }
                v
            }
            RingKind::Cyclotomic(n) => cyclotomic_table(n).expect("supported").power(k).to_vec(),
        }
    }

    /// Coordinates of `√2`.
    pub fn sqrt2_coords(&self) -> Result<Vec<i64>> {
        match self.kind {
            RingKind::SqrtTwo => Ok(vec![0, 1]),
            RingKind::Cyclotomic(8) => Ok(vec![0, 1, 0, -1]),
            RingKind::Cyclotomic(n) => Err(Error::unsupported(format!("√2 is not in ℤ[ζ_{n}]"))),
        }
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.rank];
        for &(i, j, k, c) in &self.products {
            if a[i] != 0 && b[j] != 0 {
                out[k] += a[i] * b[j] * c;
            }
        }
        out
    }

    /// Accumulates `a·b` into `acc` with overflow checking.
    pub fn mul_acc_i128(&self, acc: &mut [i128], a: &[i128], b: &[i128]) -> Result<()> {
        for &(i, j, k, c) in &self.products {
            if a[i] != 0 && b[j] != 0 {
                let t = a[i]
                    .checked_mul(b[j])
                    .and_then(|x| x.checked_mul(c as i128))
                    .and_then(|x| x.checked_add(acc[k]))
                    .ok_or_else(overflow)?;
                acc[k] = t;
            }
        }
        Ok(())
    }

    pub fn mul_i128(&self, a: &[i128], b: &[i128]) -> Result<Vec<i128>> {
        let mut out = vec![0i128; self.rank];
        self.mul_acc_i128(&mut out, a, b)?;
        Ok(out)
    }

    pub fn conj(&self, a: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.rank];
        for (k, &x) in a.iter().enumerate() {
            if x != 0 {
                for (o, &c) in out.iter_mut().zip(&self.conj[k]) {
                    *o += x * c;
                }
            }
        }
        out
    }

    /// Exact value of `coords / den` in ℚ(ζ_conductor).
    pub fn to_cyclotomic<T: Copy + Into<i128>>(&self, coords: &[T], den: i128) -> Cyclotomic {
        let n = self.conductor();
        let scale = Rational::new(1, den).expect("nonzero denominator");
        match self.kind {
            RingKind::SqrtTwo => {
                let a = Rational::from_int(coords[0].into());
                let b = Rational::from_int(coords[1].into());
                Cyclotomic::from_sqrt_two(&SqrtTwo::new(&a * &scale, &b * &scale))
            }
            RingKind::Cyclotomic(_) => {
                let q: Vec<Rational> = coords
                    .iter()
                    .map(|&c| &Rational::from_int(c.into()) * &scale)
                    .collect();
                Cyclotomic::from_coords(n, &q).expect("supported conductor")
            }
        }
    }

    /// Exact value of `coords / den` in ℚ(√2); only valid for the ℤ[√2] ring.
    pub fn to_sqrt2<T: Copy + Into<i128>>(&self, coords: &[T], den: i128) -> Result<SqrtTwo> {
        if self.kind != RingKind::SqrtTwo {
            return Err(Error::unsupported("entries are not in ℚ(√2)"));
        }
        let scale = Rational::new(1, den)?;
        Ok(SqrtTwo::new(
            &Rational::from_int(coords[0].into()) * &scale,
            &Rational::from_int(coords[1].into()) * &scale,
        ))
    }

    /// Rational value of `coords / den`, or `None` if irrational.
    pub fn to_rational(&self, coords: &[i128], den: &Rational) -> Option<Rational> {
        if coords[1..].iter().any(|&c| c != 0) {
            return None;
        }
        Some(&Rational::from_int(coords[0]) / den)
    }

    /// Numerical complex value of `coords`.
    pub fn to_complex(&self, coords: &[i64]) -> (f64, f64) {
        match self.kind {
            RingKind::SqrtTwo => (coords[0] as f64 + coords[1] as f64 * std::f64::consts::SQRT_2, 0.0),
            RingKind::Cyclotomic(n) => coords.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
                let th = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                (re + c as f64 * th.cos(), im + c as f64 * th.sin())
            }),
        }
    }
}

fn overflow() -> Error {
    Error::budget("integer overflow in compact group arithmetic")
}

/// A `dim × dim` matrix `data / den` with integer ring coordinates, in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CompactMatrix {
    dim: usize,
    den: i64,
    data: Vec<i64>,
}

impl fmt::Debug for CompactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CompactMatrix(dim={}, den={}, data={:?})", self.dim, self.den, self.data)
    }
}

impl CompactMatrix {
    /// Builds from per-entry coordinates `entries[i][j]` and a common denominator.
    pub fn from_entries(ring: &Ring, den: i64, entries: &[Vec<Vec<i64>>]) -> Result<Self> {
        let dim = entries.len();
        let r = ring.rank();
        let mut data = Vec::with_capacity(dim * dim * r);
        for row in entries {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            for e in row {
                if e.len() != r {
                    return Err(Error::DimensionMismatch { expected: r, got: e.len() });
                }
                data.extend_from_slice(e);
            }
        }
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(CompactMatrix { dim, den, data }.normalized())
    }

    pub fn identity(ring: &Ring, dim: usize) -> Self {
        let r = ring.rank();
        let mut data = vec![0; dim * dim * r];
        for i in 0..dim {
            data[(i * dim + i) * r] = 1;
        }
        CompactMatrix { dim, den: 1, data }
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`, with unit
    /// coefficients `phases[j]` (ring coordinates).
    pub fn monomial(ring: &Ring, perm: &[usize], phases: &[Vec<i64>]) -> Self {
        let dim = perm.len();
        let r = ring.rank();
        let mut data = vec![0; dim * dim * r];
        for (j, (&i, ph)) in perm.iter().zip(phases).enumerate() {
            data[(i * dim + j) * r..(i * dim + j + 1) * r].copy_from_slice(ph);
        }
        CompactMatrix { dim, den: 1, data }.normalized()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    fn rank_of(&self) -> usize {
        self.data.len() / (self.dim * self.dim)
    }

    /// Coordinates of entry `(i, j)` scaled by `den`.
    pub fn entry(&self, i: usize, j: usize) -> &[i64] {
        let r = self.rank_of();
        &self.data[(i * self.dim + j) * r..(i * self.dim + j + 1) * r]
    }

    pub fn is_entry_zero(&self, i: usize, j: usize) -> bool {
        self.entry(i, j).iter().all(|&x| x == 0)
    }

    fn normalized(mut self) -> Self {
        let g = self.data.iter().fold(self.den, |g, &x| g.gcd(&x));
        let g = if self.den < 0 { -g.abs() } else { g.abs() };
        if g != 1 && g != 0 {
            self.den /= g;
            self.data.iter_mut().for_each(|x| *x /= g);
        }
        self
    }

    pub fn mul(&self, other: &CompactMatrix, ring: &Ring) -> Result<CompactMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let n = self.dim;
        let r = ring.rank();
        let mut acc = vec![0i128; n * n * r];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.iter().all(|&x| x == 0) {
                    continue;
                }
                let a128: Vec<i128> = a.iter().map(|&x| x as i128).collect();
                for j in 0..n {
                    let b = other.entry(k, j);
                    if b.iter().all(|&x| x == 0) {
                        continue;
                    }
                    let b128: Vec<i128> = b.iter().map(|&x| x as i128).collect();
                    let off = (i * n + j) * r;
                    ring.mul_acc_i128(&mut acc[off..off + r], &a128, &b128)?;
                }
            }
        }
        let den = (self.den as i128).checked_mul(other.den as i128).ok_or_else(overflow)?;
        let g = acc.iter().fold(den, |g, &x| g.gcd(&x));
        let data = acc
            .iter()
            .map(|&x| i64::try_from(x / g).map_err(|_| overflow()))
            .collect::<Result<Vec<_>>>()?;
        let den = i64::try_from(den / g).map_err(|_| overflow())?;
        Ok(CompactMatrix { dim: n, den, data }.normalized())
    }

    /// Conjugate transpose; the inverse of a unitary element.
    pub fn conj_transpose(&self, ring: &Ring) -> CompactMatrix {
        let n = self.dim;
        let r = ring.rank();
        let mut data = vec![0; n * n * r];
        for i in 0..n {
            for j in 0..n {
                let c = ring.conj(self.entry(j, i));
                data[(i * n + j) * r..(i * n + j + 1) * r].copy_from_slice(&c);
            }
        }
        CompactMatrix { dim: n, den: self.den, data }
    }

    pub fn is_identity(&self) -> bool {
        let r = self.rank_of();
        self.den == 1
            && (0..self.dim).all(|i| {
                (0..self.dim).all(|j| {
                    let e = self.entry(i, j);
                    e.iter()
                        .enumerate()
                        .all(|(k, &x)| x == if i == j && k == 0 { 1 } else { 0 })
                })
            })
            && r > 0
    }

    /// Whether every column has exactly one nonzero entry.
    pub fn is_monomial(&self) -> bool {
        (0..self.dim).all(|j| (0..self.dim).filter(|&i| !self.is_entry_zero(i, j)).count() == 1)
    }

    /// For a monomial matrix: for column `j`, the row of its nonzero entry.
    pub fn monomial_rows(&self) -> Option<Vec<usize>> {
        (0..self.dim)
            .map(|j| {
                let mut it = (0..self.dim).filter(|&i| !self.is_entry_zero(i, j));
                let i = it.next()?;
                it.next().is_none().then_some(i)
            })
            .collect()
    }

    pub fn to_sqrt2_matrix(&self, ring: &Ring) -> Result<Matrix<SqrtTwo>> {
        let mut rows = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let row = (0..self.dim)
                .map(|j| ring.to_sqrt2(self.entry(i, j), self.den as i128))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Matrix::from_rows(rows, &())
    }

    pub fn to_cyclotomic_matrix(&self, ring: &Ring) -> Matrix<Cyclotomic> {
        let n = ring.conductor();
        Matrix::from_fn(self.dim, self.dim, &n, |i, j| ring.to_cyclotomic(self.entry(i, j), self.den as i128))
    }

    /// Numerical real matrix; imaginary parts are dropped.
    pub fn to_f64(&self, ring: &Ring) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| ring.to_complex(self.entry(i, j)).0 / self.den as f64)
                    .collect()
            })
            .collect()
    }

    /// Byte key used for deterministic ordering (zigzag varints of den and data).
    pub fn sort_key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.data.len() + 4);
        for &x in std::iter::once(&self.den).chain(&self.data) {
            let mut z = ((x << 1) ^ (x >> 63)) as u64;
            loop {
                let b = (z & 0x7f) as u8;
                z >>= 7;
                if z == 0 {
                    out.push(b);
                    break;
                }
                out.push(b | 0x80);
            }
        }
        out
    }
}

/// Converts an exact scalar matrix into compact form; entries must be integral after scaling by `den`.
pub fn compact_from_cyclotomic(ring: &Ring, m: &Matrix<Cyclotomic>) -> Result<CompactMatrix> {
    let n = m.rows();
    let den = Rational::lcm_denominators(m.entries().iter().flat_map(|c| c.coeffs().iter()));
    let den = i64::try_from(den).map_err(|_| overflow())?;
    let dq = Rational::from(den);
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    m.get(i, j)
                        .coeffs()
                        .iter()
                        .map(|c| (c * &dq).to_i64().ok_or_else(overflow))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if ring.rank() != m.get(0, 0).degree() {
        return Err(Error::ConductorMismatch(ring.conductor(), m.field().to_owned()));
    }
    CompactMatrix::from_entries(ring, den, &entries)
}

/// Scalar check used by tests: the matrix value as exact cyclotomic entries is unitary.
pub fn is_unitary(ring: &Ring, g: &CompactMatrix) -> bool {
    g.to_cyclotomic_matrix(ring).is_unitary()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_makes_keys_unique() {
        let ring = Ring::sqrt2();
        let a = CompactMatrix::from_entries(&ring, 2, &[vec![vec![2, 0]]]).unwrap();
        let b = CompactMatrix::from_entries(&ring, 1, &[vec![vec![1, 0]]]).unwrap();
        assert_eq!(a, b);
        assert!(a.is_identity());
    }

    #[test]
    fn hadamard_squares_to_identity() {
        let ring = Ring::sqrt2();
        let s = vec![0, 1];
        let ms = vec![0, -1];
        let h = CompactMatrix::from_entries(&ring, 2, &[vec![s.clone(), s.clone()], vec![s, ms]]).unwrap();
        assert!(h.mul(&h, &ring).unwrap().is_identity());
        assert_eq!(h.conj_transpose(&ring), h);
    }

    #[test]
    fn cyclotomic_conjugation_inverts_roots() {
        let ring = Ring::cyclotomic(8).unwrap();
        let z = ring.root_of_unity(1);
        let zc = ring.conj(&z);
        assert_eq!(ring.mul(&z, &zc), ring.one());
        assert_eq!(ring.root_of_unity(4), vec![-1, 0, 0, 0]);
    }
}
