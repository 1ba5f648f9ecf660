//! Canonical forms under coordinate permutations (binary) and signed
//! permutations (odd p).
//!
//! For an ordered basis `b_1, …, b_k` of `C`, sort the columns of the
//! generator matrix lexicographically with row 1 most significant (over 𝔽_p
//! each column is first scaled by ±1 so its leading nonzero entry is at most
//! `(p−1)/2`). The canonical key is the smallest such sorted matrix over all
//! ordered bases. Row `i` of the sorted matrix depends only on `b_1, …, b_i`,
//! so the minimum is found level by level, keeping every partial basis that
//! ties for the smallest prefix.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::binary::{BinaryCode, MAX_CODEWORD_BITS};
use super::prime::PrimeFieldCode;
use crate::error::{Error, Result};

/// Longest code the canonicalizer accepts.
pub const MAX_CANONICAL_LENGTH: usize = 16;

/// Largest number of tied partial bases kept at one level.
pub const MAX_TIED_STATES: usize = 2_000_000;

/// Permutation class of a binary code.
#[derive(Clone, Debug)]
pub struct CodeClass {
    /// The code generated by the rows of the canonical matrix.
    pub representative: BinaryCode,
    pub weight_distribution: Vec<u64>,
    key: Vec<u64>,
}

impl CodeClass {
    pub fn key(&self) -> &[u64] {
        &self.key
    }
}

impl PartialEq for CodeClass {
    fn eq(&self, other: &Self) -> bool {
        self.representative.length() == other.representative.length() && self.key == other.key
    }
}

impl Eq for CodeClass {}

impl Hash for CodeClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.representative.length().hash(state);
        self.key.hash(state);
    }
}

impl PartialOrd for CodeClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CodeClass {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.representative.length(), self.key.len(), &self.key).cmp(&(
            other.representative.length(),
            other.key.len(),
            &other.key,
        ))
    }
}

struct BinaryState {
    /// Chosen codewords, kept reduced for independence tests.
    span: Vec<u64>,
    /// Columns grouped by their prefix, groups in sorted order.
    classes: Vec<Vec<u8>>,
}

fn independent(span: &[u64], mut v: u64) -> bool {
    for &b in span {
        let p = 63 - b.leading_zeros();
        if v >> p & 1 == 1 {
            v ^= b;
        }
    }
    v != 0
}

fn insert_reduced(span: &[u64], mut v: u64) -> Vec<u64> {
    for &b in span {
        let p = 63 - b.leading_zeros();
        if v >> p & 1 == 1 {
            v ^= b;
        }
    }
    let mut out = span.to_vec();
    out.push(v);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Canonical class of a binary code under coordinate permutations.
pub fn canonical_form(code: &BinaryCode) -> Result<CodeClass> {
    let n = code.length();
    if n > MAX_CANONICAL_LENGTH {
        return Err(Error::budget(format!(
            "canonical form limited to length {MAX_CANONICAL_LENGTH}, got {n}"
        )));
    }
    if code.dim() > MAX_CODEWORD_BITS {
        return Err(Error::budget("code dimension too large"));
    }
    let words = code.codewords()?;
    let mut states = vec![BinaryState {
        span: Vec::new(),
        classes: if n == 0 { Vec::new() } else { vec![(0..n as u8).collect()] },
    }];
    let mut key = Vec::with_capacity(code.dim());
    for _ in 0..code.dim() {
        let mut best: Option<u64> = None;
        let mut next: Vec<BinaryState> = Vec::new();
        for st in &states {
            for &c in &words[1..] {
                if !independent(&st.span, c) {
                    continue;
                }
                // Row key: position `pos` of the sorted row is bit 63 − pos.
                let mut row = 0u64;
                let mut pos = 0;
                let mut classes = Vec::with_capacity(st.classes.len() * 2);
                for cl in &st.classes {
                    let (ones, zeros): (Vec<u8>, Vec<u8>) = cl.iter().partition(|&&x| c >> x & 1 == 1);
                    pos += zeros.len();
                    for _ in 0..ones.len() {
                        row |= 1 << (63 - pos);
                        pos += 1;
                    }
                    if !zeros.is_empty() {
                        classes.push(zeros);
                    }
                    if !ones.is_empty() {
                        classes.push(ones);
                    }
                }
                match best.map(|b| row.cmp(&b)) {
                    Some(Ordering::Greater) => continue,
                    Some(Ordering::Less) | None => {
                        best = Some(row);
                        next.clear();
                    }
                    Some(Ordering::Equal) => {}
                }
                if next.len() >= MAX_TIED_STATES {
                    return Err(Error::budget("too many tied bases in canonical form search"));
                }
                next.push(BinaryState {
                    span: insert_reduced(&st.span, c),
                    classes,
                });
            }
        }
        key.push(best.expect("dimension counts independent words"));
        states = next;
    }
    let rows = key.iter().map(|&r| (0..n).fold(0u64, |acc, pos| acc | ((r >> (63 - pos) & 1) << pos)));
    let representative = BinaryCode::new(n, rows)?;
    Ok(CodeClass {
        weight_distribution: code.weight_distribution()?,
        representative,
        key,
    })
}

/// Signed-permutation class of a code over 𝔽_p.
#[derive(Clone, Debug)]
pub struct PrimeCodeClass {
    pub representative: PrimeFieldCode,
    pub weight_distribution: Vec<u64>,
    key: Vec<Vec<u8>>,
}

impl PrimeCodeClass {
    pub fn key(&self) -> &[Vec<u8>] {
        &self.key
    }
}

impl PartialEq for PrimeCodeClass {
    fn eq(&self, other: &Self) -> bool {
        self.representative.p() == other.representative.p()
            && self.representative.length() == other.representative.length()
            && self.key == other.key
    }
}

impl Eq for PrimeCodeClass {}

impl Hash for PrimeCodeClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.representative.p().hash(state);
        self.representative.length().hash(state);
        self.key.hash(state);
    }
}

impl PartialOrd for PrimeCodeClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PrimeCodeClass {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.representative.p(), self.representative.length(), self.key.len(), &self.key).cmp(&(
            other.representative.p(),
            other.representative.length(),
            other.key.len(),
            &other.key,
        ))
    }
}

struct PrimeState {
    span: PrimeFieldCode,
    /// Column multipliers in `{1, p−1}`, or 0 while the column prefix is zero.
    signs: Vec<u8>,
    classes: Vec<Vec<u8>>,
}

/// Canonical class of an 𝔽_p code under signed coordinate permutations.
pub fn canonical_form_prime(code: &PrimeFieldCode) -> Result<PrimeCodeClass> {
    let n = code.length();
    let p = code.p();
    if n > MAX_CANONICAL_LENGTH {
        return Err(Error::budget(format!(
            "canonical form limited to length {MAX_CANONICAL_LENGTH}, got {n}"
        )));
    }
    let words = code.codewords()?;
    let half = (p - 1) / 2;
    let mut states = vec![PrimeState {
        span: PrimeFieldCode::zero(p, n),
        signs: vec![0; n],
        classes: if n == 0 { Vec::new() } else { vec![(0..n as u8).collect()] },
    }];
    let mut key: Vec<Vec<u8>> = Vec::with_capacity(code.dim());
    for _ in 0..code.dim() {
        let mut best: Option<Vec<u8>> = None;
        let mut next: Vec<PrimeState> = Vec::new();
        for st in &states {
            for c in &words[1..] {
                if st.span.contains(c) {
                    continue;
                }
                let mut signs = st.signs.clone();
                let mut row = Vec::with_capacity(n);
                let mut classes = Vec::with_capacity(st.classes.len());
                for cl in &st.classes {
                    let mut vals: Vec<(u8, u8)> = cl
                        .iter()
                        .map(|&x| {
                            let x = x as usize;
                            let raw = c[x];
                            let v = if signs[x] == 0 {
                                if raw == 0 {
                                    0
                                } else if raw <= half {
                                    signs[x] = 1;
                                    raw
                                } else {
                                    signs[x] = p - 1;
                                    p - raw
                                }
                            } else {
                                ((raw as u32 * signs[x] as u32) % p as u32) as u8
                            };
                            (v, x as u8)
                        })
                        .collect();
                    vals.sort_unstable();
                    let mut i = 0;
                    while i < vals.len() {
                        let v = vals[i].0;
                        let group: Vec<u8> = vals[i..].iter().take_while(|(w, _)| *w == v).map(|&(_, x)| x).collect();
                        i += group.len();
                        row.extend(std::iter::repeat_n(v, group.len()));
                        classes.push(group);
                    }
                }
                match best.as_ref().map(|b| row.cmp(b)) {
                    Some(Ordering::Greater) => continue,
                    Some(Ordering::Less) | None => {
                        best = Some(row);
                        next.clear();
                    }
                    Some(Ordering::Equal) => {}
                }
                if next.len() >= MAX_TIED_STATES {
                    return Err(Error::budget("too many tied bases in canonical form search"));
                }
                next.push(PrimeState {
                    span: st.span.with_vector(c),
                    signs,
                    classes,
                });
            }
        }
        key.push(best.expect("dimension counts independent words"));
        states = next;
    }
    let representative = PrimeFieldCode::new(p, n, key.clone())?;
    Ok(PrimeCodeClass {
        weight_distribution: code.weight_distribution()?,
        representative,
        key,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{hamming8, i2_power, tetracode};

    #[test]
    fn permuted_codes_share_a_class() {
        let a = BinaryCode::from_strings(&["1010", "0101"]).unwrap();
        let b = BinaryCode::from_strings(&["1100", "0011"]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&hamming8()).unwrap(), canonical_form(&i2_power(4)).unwrap());
    }

    #[test]
    fn representative_is_equivalent() {
        let h = hamming8();
        let c = canonical_form(&h).unwrap();
        assert_eq!(canonical_form(&c.representative).unwrap(), c);
        assert_eq!(c.weight_distribution, h.weight_distribution().unwrap());
    }

    #[test]
    fn signed_permutation_invariance() {
        let t = tetracode();
        let ct = canonical_form_prime(&t).unwrap();
        for (perm, signs) in [([2, 0, 3, 1], [2, 1, 2, 2]), ([1, 0, 2, 3], [2, 1, 1, 1]), ([3, 2, 1, 0], [1, 1, 2, 1])] {
            let u = t.signed_permute(&perm, &signs).unwrap();
            assert_eq!(canonical_form_prime(&u).unwrap(), ct);
        }
        let other = PrimeFieldCode::from_strings(3, &["1100", "0011"]).unwrap();
        assert_ne!(canonical_form_prime(&other).unwrap(), ct);
    }

    #[test]
    fn length_budget() {
        assert!(matches!(canonical_form(&BinaryCode::repetition(18)), Err(Error::Budget(_))));
    }
}
