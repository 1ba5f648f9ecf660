use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Budget on the number of codewords listed.
pub const MAX_CODEWORDS: usize = 1 << 22;

/// Linear code over 𝔽_p for an odd prime `p`, stored as a reduced row
/// echelon generator matrix with entries in `0..p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldCode {
    p: u8,
    n: usize,
    rows: Vec<Vec<u8>>,
}

pub fn inv_mod(a: u8, p: u8) -> u8 {
    (1..p).find(|&x| (x as u32 * a as u32) % p as u32 == 1).expect("nonzero residue")
}

pub fn dot(u: &[u8], v: &[u8], p: u8) -> u8 {
    (u.iter().zip(v).map(|(&a, &b)| a as u32 * b as u32).sum::<u32>() % p as u32) as u8
}

fn axpy(y: &mut [u8], a: u8, x: &[u8], p: u8) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = ((*yi as u32 + a as u32 * xi as u32) % p as u32) as u8;
    }
}

fn rref(rows: &mut Vec<Vec<u8>>, p: u8) {
    let n = rows.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<u8>> = Vec::new();
    let mut r = 0;
    let mut m = std::mem::take(rows);
    for c in 0..n {
        let Some(i) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, i);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = ((*x as u32 * inv as u32) % p as u32) as u8;
        }
        let piv = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k != r && row[c] != 0 {
                let a = p - row[c];
                axpy(row, a, &piv, p);
            }
        }
        r += 1;
    }
    m.truncate(r);
    out.extend(m);
    *rows = out;
}

impl PrimeFieldCode {
    pub fn new(p: u8, n: usize, generators: Vec<Vec<u8>>) -> Result<Self> {
        if p < 3 || !(2..p).all(|d| !p.is_multiple_of(d)) {
            return Err(Error::invalid(format!("{p} is not an odd prime")));
        }
        if let Some(r) = generators.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: r.len() });
        }
        let mut rows: Vec<Vec<u8>> = generators.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
        rref(&mut rows, p);
        Ok(PrimeFieldCode { p, n, rows })
    }

    /// Rows written as digit strings such as `"1110"`.
    pub fn from_strings<S: AsRef<str>>(p: u8, rows: &[S]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        let gens = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .chars()
                    .map(|ch| {
                        ch.to_digit(10)
                            .filter(|&d| d < p as u32)
                            .map(|d| d as u8)
                            .ok_or_else(|| Error::invalid(format!("invalid digit {ch:?} for p = {p}")))
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PrimeFieldCode::new(p, n, gens)
    }

    pub fn zero(p: u8, n: usize) -> Self {
        PrimeFieldCode { p, n, rows: Vec::new() }
    }

    pub fn repetition(p: u8, n: usize) -> Self {
        PrimeFieldCode::new(p, n, vec![vec![1; n]]).expect("valid")
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let mut v = v.to_vec();
        for r in &self.rows {
            let c = r.iter().position(|&x| x != 0).expect("nonzero row");
            if v[c] != 0 {
                let a = self.p - v[c];
                axpy(&mut v, a, r, self.p);
            }
        }
        v
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_all_ones(&self) -> bool {
        self.contains(&vec![1; self.n])
    }

    pub fn is_subcode_of(&self, other: &PrimeFieldCode) -> bool {
        self.p == other.p && self.n == other.n && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn with_vector(&self, v: &[u8]) -> PrimeFieldCode {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        PrimeFieldCode::new(self.p, self.n, rows).expect("same length")
    }

    pub fn codewords(&self) -> Result<Vec<Vec<u8>>> {
        let count = (self.p as usize)
            .checked_pow(self.dim() as u32)
            .filter(|&c| c <= MAX_CODEWORDS)
            .ok_or_else(|| Error::budget(format!("{}^{} codewords exceed the listing budget", self.p, self.dim())))?;
        let mut out = Vec::with_capacity(count);
        for idx in 0..count {
            let mut v = vec![0u8; self.n];
            let mut x = idx;
            for r in &self.rows {
                let a = (x % self.p as usize) as u8;
                x /= self.p as usize;
                if a != 0 {
                    axpy(&mut v, a, r, self.p);
                }
            }
            out.push(v);
        }
        Ok(out)
    }

    pub fn dual(&self) -> PrimeFieldCode {
        let pivots: Vec<usize> = self
            .rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
            .collect();
        let mut gens = Vec::new();
        for f in 0..self.n {
            if pivots.contains(&f) {
                continue;
            }
            let mut d = vec![0u8; self.n];
            d[f] = 1;
            for (r, &pc) in self.rows.iter().zip(&pivots) {
                d[pc] = (self.p - r[f]) % self.p;
            }
            gens.push(d);
        }
        PrimeFieldCode::new(self.p, self.n, gens).expect("same length")
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, a)| self.rows[i..].iter().all(|b| dot(a, b, self.p) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dim() == self.n && self.is_self_orthogonal()
    }

    /// Hamming weight distribution `A_w`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.n + 1];
        for c in self.codewords()? {
            dist[c.iter().filter(|&&x| x != 0).count()] += 1;
        }
        Ok(dist)
    }

    /// Moves coordinate `j` to `perm[j]` and multiplies it by `signs[j] ∈ {1, p−1}`.
    pub fn signed_permute(&self, perm: &[usize], signs: &[u8]) -> Result<PrimeFieldCode> {
        if perm.len() != self.n || signs.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: perm.len() });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = vec![0u8; self.n];
                for j in 0..self.n {
                    out[perm[j]] = ((r[j] as u32 * signs[j] as u32) % self.p as u32) as u8;
                }
                out
            })
            .collect();
        PrimeFieldCode::new(self.p, self.n, rows)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|d| char::from(b'0' + d)).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "length": self.n,
            "dimension": self.dim(),
            "generators": self.to_strings(),
        })
    }
}

impl fmt::Debug for PrimeFieldCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeFieldCode<{}>[{}, {}]{:?}", self.p, self.n, self.dim(), self.to_strings())
    }
}

/// The ternary tetracode `[4,2,3]`.
pub fn tetracode() -> PrimeFieldCode {
    PrimeFieldCode::from_strings(3, &["1110", "0121"]).expect("valid rows")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetracode_is_self_dual_without_ones() {
        let t = tetracode();
        assert!(t.is_self_dual());
        assert_eq!(t.dual(), t);
        assert!(!t.contains_all_ones());
        assert_eq!(t.weight_distribution().unwrap(), vec![1, 0, 0, 8, 0]);
    }

    #[test]
    fn dual_dimension() {
        let c = PrimeFieldCode::from_strings(5, &["12340", "01111"]).unwrap();
        let d = c.dual();
        assert_eq!(c.dim() + d.dim(), 5);
        for a in c.rows() {
            for b in d.rows() {
                assert_eq!(dot(a, b, 5), 0);
            }
        }
        assert_eq!(d.dual(), c);
    }
}
