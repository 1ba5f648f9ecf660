use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Largest code length stored in a machine word.
pub const MAX_LENGTH: usize = 64;

/// Budget on `2^dim` when listing codewords.
pub const MAX_CODEWORD_BITS: usize = 24;

/// Binary linear code of length `n ≤ 64`. Coordinate `j` is bit `j`.
///
/// The basis is kept in reduced row echelon form (pivot = lowest set bit,
/// rows ordered by pivot), so equal codes have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<u64>,
}

pub fn weight(v: u64) -> u32 {
    v.count_ones()
}

pub fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Parses a word such as `"0011"`; character `j` is coordinate `j`.
pub fn parse_word(s: &str) -> Result<u64> {
    if s.len() > MAX_LENGTH {
        return Err(Error::budget(format!("word length {} exceeds {MAX_LENGTH}", s.len())));
    }
    s.chars().enumerate().try_fold(0u64, |acc, (j, ch)| match ch {
        '0' => Ok(acc),
        '1' => Ok(acc | (1 << j)),
        _ => Err(Error::invalid(format!("invalid bit {ch:?} in {s:?}"))),
    })
}

pub fn format_word(v: u64, n: usize) -> String {
    (0..n).map(|j| if v >> j & 1 == 1 { '1' } else { '0' }).collect()
}

/// Reduces `rows` to RREF in place and drops zero rows.
fn rref(rows: &mut Vec<u64>) {
    let mut out: Vec<u64> = Vec::with_capacity(rows.len());
    for &r in rows.iter() {
        let mut v = r;
        for &b in &out {
            let p = b.trailing_zeros();
            if v >> p & 1 == 1 {
                v ^= b;
            }
        }
        if v == 0 {
            continue;
        }
        let p = v.trailing_zeros();
        for b in out.iter_mut() {
            if *b >> p & 1 == 1 {
                *b ^= v;
            }
        }
        out.push(v);
    }
    out.sort_by_key(|b| b.trailing_zeros());
    *rows = out;
}

impl BinaryCode {
    pub fn new(n: usize, generators: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n > MAX_LENGTH {
            return Err(Error::budget(format!("length {n} exceeds {MAX_LENGTH}")));
        }
        let mut rows: Vec<u64> = generators.into_iter().collect();
        if let Some(r) = rows.iter().find(|&&r| r & !mask(n) != 0) {
            return Err(Error::invalid(format!("generator {r:#x} has bits beyond length {n}")));
        }
        rref(&mut rows);
        Ok(BinaryCode { n, rows })
    }

    /// Builds a code from rows such as `["1100", "0011"]`.
    pub fn from_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != n) {
            return Err(Error::invalid("generator rows have different lengths"));
        }
        let words = rows.iter().map(|r| parse_word(r.as_ref())).collect::<Result<Vec<_>>>()?;
        BinaryCode::new(n, words)
    }

    pub fn zero(n: usize) -> Self {
        BinaryCode { n, rows: Vec::new() }
    }

    /// The repetition code `⟨1⟩`.
    pub fn repetition(n: usize) -> Self {
        BinaryCode::new(n, [mask(n)]).expect("valid length")
    }

    pub fn full(n: usize) -> Self {
        BinaryCode::new(n, (0..n).map(|j| 1u64 << j)).expect("valid length")
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn all_ones(&self) -> u64 {
        mask(self.n)
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Reduction of `v` modulo the code (a canonical coset representative).
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &b in &self.rows {
            if v >> b.trailing_zeros() & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    pub fn contains_all_ones(&self) -> bool {
        self.contains(self.all_ones())
    }

    pub fn is_subcode_of(&self, other: &BinaryCode) -> bool {
        self.n == other.n && self.rows.iter().all(|&r| other.contains(r))
    }

    pub fn with_vector(&self, v: u64) -> BinaryCode {
        BinaryCode::new(self.n, self.rows.iter().copied().chain([v])).expect("same length")
    }

    /// All `2^dim` codewords in Gray-code order.
    pub fn codewords(&self) -> Result<Vec<u64>> {
        let k = self.dim();
        if k > MAX_CODEWORD_BITS {
            return Err(Error::budget(format!("2^{k} codewords exceed the listing budget")));
        }
        let mut out = Vec::with_capacity(1 << k);
        let mut v = 0u64;
        out.push(v);
        for i in 1u64..(1 << k) {
            v ^= self.rows[i.trailing_zeros() as usize];
            out.push(v);
        }
        Ok(out)
    }

    pub fn dual(&self) -> BinaryCode {
        let pivots: Vec<u32> = self.rows.iter().map(|r| r.trailing_zeros()).collect();
        let mut gens = Vec::with_capacity(self.n - self.dim());
        for f in 0..self.n as u32 {
            if pivots.contains(&f) {
                continue;
            }
            let mut d = 1u64 << f;
            for (r, &p) in self.rows.iter().zip(&pivots) {
                if r >> f & 1 == 1 {
                    d |= 1 << p;
                }
            }
            gens.push(d);
        }
        BinaryCode::new(self.n, gens).expect("same length")
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &a)| self.rows[i..].iter().all(|&b| weight(a & b).is_multiple_of(2)))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dim() == self.n && self.is_self_orthogonal()
    }

    /// All weights divisible by 4: rows of weight `≡ 0 (mod 4)` with pairwise even overlaps.
    pub fn is_doubly_even(&self) -> bool {
        self.rows.iter().all(|&r| weight(r).is_multiple_of(4)) && self.is_self_orthogonal()
    }

    /// `A_w` for `w = 0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.n + 1];
        for c in self.codewords()? {
            dist[weight(c) as usize] += 1;
        }
        Ok(dist)
    }

    /// Moves coordinate `j` to `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> Result<BinaryCode> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: perm.len() });
        }
        let rows = self.rows.iter().map(|&r| {
            (0..self.n).fold(0u64, |acc, j| if r >> j & 1 == 1 { acc | 1 << perm[j] } else { acc })
        });
        BinaryCode::new(self.n, rows)
    }

    /// Direct sum `C ⊕ D`, with `D` on the higher coordinates.
    pub fn direct_sum(&self, other: &BinaryCode) -> Result<BinaryCode> {
        let n = self.n + other.n;
        let rows = self.rows.iter().copied().chain(other.rows.iter().map(|&r| r << self.n));
        BinaryCode::new(n, rows)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.rows.iter().map(|&r| format_word(r, self.n)).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": 2,
            "length": self.n,
            "dimension": self.dim(),
            "generators": self.to_strings(),
        })
    }
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryCode[{}, {}]{:?}", self.n, self.dim(), self.to_strings())
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩", self.to_strings().join(", "))
    }
}

/// The `[8,4,4]` Hamming code.
pub fn hamming8() -> BinaryCode {
    BinaryCode::from_strings(&["00001111", "00110011", "01010101", "11111111"]).expect("valid rows")
}

/// `i_2^k = ⟨11⟩^{⊕k}`, length `2k`.
pub fn i2_power(k: usize) -> BinaryCode {
    let rows = (0..k).map(|i| 0b11u64 << (2 * i));
    BinaryCode::new(2 * k, rows).expect("valid length")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_is_canonical() {
        let a = BinaryCode::from_strings(&["1100", "0110"]).unwrap();
        let b = BinaryCode::from_strings(&["1010", "1100"]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn duals() {
        let c = BinaryCode::from_strings(&["11"]).unwrap();
        assert_eq!(c.dual(), c);
        assert_eq!(hamming8().dual(), hamming8());
        assert_eq!(BinaryCode::zero(4).dual(), BinaryCode::full(4));
        let d = BinaryCode::from_strings(&["11010", "01101"]).unwrap();
        assert_eq!(d.dim() + d.dual().dim(), 5);
        assert_eq!(d.dual().dual(), d);
    }

    #[test]
    fn doubly_even() {
        assert!(hamming8().is_doubly_even());
        assert!(!BinaryCode::from_strings(&["11"]).unwrap().is_doubly_even());
        assert!(!i2_power(4).is_doubly_even());
        assert_eq!(hamming8().weight_distribution().unwrap(), vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
    }
}
