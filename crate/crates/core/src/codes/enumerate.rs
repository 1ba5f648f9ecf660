//! Exhaustive enumeration of self-orthogonal and self-dual codes, and the
//! supercode/subcode lattice around a given code.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::binary::{weight, BinaryCode};
use super::canonical::{canonical_form, canonical_form_prime, CodeClass, PrimeCodeClass};
use super::prime::{dot, PrimeFieldCode};
use crate::error::{Error, Result};

/// Largest number of intermediate codes kept by the supercode searches.
pub const MAX_SUPERCODE_STATES: usize = 200_000;

/// Longest binary length accepted by the class enumerators.
pub const MAX_ENUMERATION_LENGTH: usize = 12;

/// Longest odd-p length accepted by the class enumerators: `p = 3` and `p = 5`.
pub fn max_prime_length(p: u8) -> usize {
    match p {
        3 => 8,
        5 => 6,
        _ => 0,
    }
}

/// Nonzero coset representatives of `C⊥/C`, each reduced modulo `C`.
fn coset_representatives(code: &BinaryCode) -> Result<Vec<u64>> {
    let reps: BTreeSet<u64> = code.dual().codewords()?.into_iter().map(|v| code.reduce(v)).filter(|&v| v != 0).collect();
    Ok(reps.into_iter().collect())
}

fn admissible(v: u64, doubly_even: bool) -> bool {
    let w = weight(v);
    if doubly_even {
        w.is_multiple_of(4)
    } else {
        w.is_multiple_of(2)
    }
}

/// Classes of self-orthogonal codes of length `n` containing `1`, grouped by
/// dimension `1..=max_dim`. With `doubly_even`, only doubly-even codes.
pub fn self_orthogonal_classes(n: usize, max_dim: usize, doubly_even: bool) -> Result<Vec<Vec<CodeClass>>> {
    if n > MAX_ENUMERATION_LENGTH {
        return Err(Error::budget(format!("enumeration limited to length {MAX_ENUMERATION_LENGTH}, got {n}")));
    }
    let start = BinaryCode::repetition(n);
    if n == 0 || !n.is_multiple_of(if doubly_even { 4 } else { 2 }) || max_dim == 0 {
        return Ok(Vec::new());
    }
    let mut levels = vec![vec![canonical_form(&start)?]];
    while levels.len() < max_dim.min(n / 2) {
        let mut candidates = Vec::new();
        for class in levels.last().expect("nonempty") {
            let c = &class.representative;
            for v in coset_representatives(c)? {
                if admissible(v, doubly_even) {
                    candidates.push(c.with_vector(v));
                }
            }
        }
        let next = candidates.par_iter().map(canonical_form).collect::<Result<BTreeSet<CodeClass>>>()?;
        if next.is_empty() {
            break;
        }
        levels.push(next.into_iter().collect());
    }
    Ok(levels)
}

/// Classes of binary self-dual codes of length `n` (doubly-even if requested).
pub fn enumerate_self_dual(n: usize, doubly_even: bool) -> Result<Vec<CodeClass>> {
    if n % 2 == 1 {
        return Ok(Vec::new());
    }
    let levels = self_orthogonal_classes(n, n / 2, doubly_even)?;
    Ok(levels
        .into_iter()
        .find(|level| level.first().is_some_and(|c| 2 * c.representative.dim() == n))
        .unwrap_or_default())
}

/// All self-orthogonal `C′ ⊇ C` with `[C′ : C] = 2`.
pub fn supercodes_index2(code: &BinaryCode) -> Result<Vec<BinaryCode>> {
    if !code.is_self_orthogonal() {
        return Err(Error::invalid("supercodes require a self-orthogonal code"));
    }
    Ok(coset_representatives(code)?
        .into_iter()
        .filter(|&v| weight(v).is_multiple_of(2))
        .map(|v| code.with_vector(v))
        .collect())
}

/// All self-dual codes containing `C` (doubly-even ones if requested).
pub fn self_dual_supercodes(code: &BinaryCode, doubly_even: bool) -> Result<Vec<BinaryCode>> {
    if !code.is_self_orthogonal() || (doubly_even && !code.is_doubly_even()) {
        return Err(Error::invalid("supercodes require a self-orthogonal (doubly-even) code"));
    }
    let n = code.length();
    if n % 2 == 1 {
        return Ok(Vec::new());
    }
    let mut level: BTreeSet<BinaryCode> = BTreeSet::from([code.clone()]);
    while level.first().is_some_and(|c| 2 * c.dim() < n) {
        let mut next = BTreeSet::new();
        for c in &level {
            for v in coset_representatives(c)? {
                if admissible(v, doubly_even) {
                    next.insert(c.with_vector(v));
                }
            }
            if next.len() > MAX_SUPERCODE_STATES {
                return Err(Error::budget(format!("more than {MAX_SUPERCODE_STATES} intermediate supercodes")));
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// All subcodes `D` with `1 ∈ D ⊆ C`.
pub fn subcodes_containing_one(code: &BinaryCode) -> Result<Vec<BinaryCode>> {
    if !code.contains_all_ones() {
        return Ok(Vec::new());
    }
    let words = code.codewords()?;
    let mut all = BTreeSet::new();
    let mut level = BTreeSet::from([BinaryCode::repetition(code.length())]);
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for d in &level {
            for &v in &words {
                if !d.contains(v) {
                    next.insert(d.with_vector(v));
                }
            }
        }
        all.extend(std::mem::replace(&mut level, next));
    }
    Ok(all.into_iter().collect())
}

/// A signed-permutation class of self-dual codes over 𝔽_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSelfDualClass {
    pub class: PrimeCodeClass,
    /// A member of the class that contains `1`, when one exists.
    pub with_ones: Option<PrimeFieldCode>,
}

fn self_orthogonal_vector(v: &[u8], p: u8) -> bool {
    dot(v, v, p) == 0
}

/// Rescales coordinates by `±1` so that a codeword with entries in `{±1}` becomes `1`.
fn signed_to_ones(code: &PrimeFieldCode) -> Result<Option<PrimeFieldCode>> {
    let p = code.p();
    for c in code.codewords()? {
        if c.iter().all(|&x| x == 1 || x == p - 1) {
            let perm: Vec<usize> = (0..code.length()).collect();
            return code.signed_permute(&perm, &c).map(Some);
        }
    }
    Ok(None)
}

/// Classes of self-dual codes over 𝔽_p of length `n` under signed permutations,
/// with a representative containing `1` where the class has one.
pub fn enumerate_self_dual_prime(p: u8, n: usize) -> Result<Vec<PrimeSelfDualClass>> {
    if max_prime_length(p) == 0 {
        return Err(Error::unsupported(format!("self-dual enumeration over 𝔽_{p}")));
    }
    if n > max_prime_length(p) {
        return Err(Error::budget(format!("enumeration over 𝔽_{p} limited to length {}", max_prime_length(p))));
    }
    if n % 2 == 1 {
        return Ok(Vec::new());
    }
    let mut level = BTreeSet::from([canonical_form_prime(&PrimeFieldCode::zero(p, n))?]);
    for _ in 0..n / 2 {
        let mut candidates = BTreeSet::new();
        for class in &level {
            let c = &class.representative;
            for v in c.dual().codewords()? {
                if !c.contains(&v) && self_orthogonal_vector(&v, p) {
                    candidates.insert(c.with_vector(&v));
                }
            }
        }
        level = candidates.par_iter().map(canonical_form_prime).collect::<Result<BTreeSet<_>>>()?;
    }
    level
        .into_iter()
        .map(|class| {
            let with_ones = signed_to_ones(&class.representative)?;
            Ok(PrimeSelfDualClass { class, with_ones })
        })
        .collect()
}

/// All self-dual codes over 𝔽_p containing `C`.
pub fn self_dual_supercodes_prime(code: &PrimeFieldCode) -> Result<Vec<PrimeFieldCode>> {
    if !code.is_self_orthogonal() {
        return Err(Error::invalid("supercodes require a self-orthogonal code"));
    }
    let n = code.length();
    if n % 2 == 1 {
        return Ok(Vec::new());
    }
    let p = code.p();
    let mut level = BTreeSet::from([code.clone()]);
    while level.first().is_some_and(|c| 2 * c.dim() < n) {
        let mut next = BTreeSet::new();
        for c in &level {
            for v in c.dual().codewords()? {
                if !c.contains(&v) && self_orthogonal_vector(&v, p) {
                    next.insert(c.with_vector(&v));
                }
            }
            if next.len() > MAX_SUPERCODE_STATES {
                return Err(Error::budget(format!("more than {MAX_SUPERCODE_STATES} intermediate supercodes")));
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{hamming8, tetracode};

    #[test]
    fn self_dual_counts() {
        let counts: Vec<usize> = [2, 4, 6, 8, 10].iter().map(|&n| enumerate_self_dual(n, false).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 2]);
        let de = enumerate_self_dual(8, true).unwrap();
        assert_eq!(de.len(), 1);
        assert_eq!(de[0], canonical_form(&hamming8()).unwrap());
    }

    #[test]
    fn supercodes_of_1111() {
        let c = BinaryCode::repetition(4);
        let sup = supercodes_index2(&c).unwrap();
        assert_eq!(sup.len(), 3);
        assert!(sup.iter().all(|s| s.is_self_dual() && c.is_subcode_of(s)));
        assert!(supercodes_index2(&hamming8()).unwrap().is_empty());
    }

    #[test]
    fn self_dual_supercode_counts() {
        // r = 3: ∏_{1≤i≤r} (2^i + 1) self-dual and ∏_{0≤i<r} (2^i + 1) doubly-even supercodes.
        assert_eq!(self_dual_supercodes(&BinaryCode::repetition(8), false).unwrap().len(), 135);
        assert_eq!(self_dual_supercodes(&BinaryCode::repetition(8), true).unwrap().len(), 30);
    }

    #[test]
    fn subcodes_of_hamming() {
        assert_eq!(subcodes_containing_one(&hamming8()).unwrap().len(), 16);
    }

    #[test]
    fn ternary_length_four() {
        let classes = enumerate_self_dual_prime(3, 4).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].class, canonical_form_prime(&tetracode()).unwrap());
        assert!(classes[0].with_ones.is_none());
    }
}
