//! The basis `{μ_m(C)}` of the parabolic invariants and the subcode sum
//! `cwe(C(m)) = Σ_{1 ∈ D ⊆ C} μ_m(D)`.

use serde::Serialize;

use super::{parabolic_group, same_span, span_rank};
use crate::codes::{self_orthogonal_classes, subcodes_containing_one, BinaryCode, MAX_ENUMERATION_LENGTH};
use crate::enumerators::{cwe, mu_m_of_code};
use crate::error::{Error, Result};
use crate::exact::RatPoly;
use crate::groups::{invariant_space, DEFAULT_MONOMIAL_BUDGET};

/// One class of self-orthogonal codes containing `1` with its invariant `μ_m(C)`.
#[derive(Clone, Debug, Serialize)]
pub struct BasisEntry {
    pub generators: Vec<String>,
    pub dim: usize,
    #[serde(skip)]
    pub poly: RatPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParabolicBasis {
    pub degree: usize,
    pub genus: usize,
    pub entries: Vec<BasisEntry>,
    pub rank: usize,
    pub independent: bool,
    /// Dimension of the degree-`N` fixed space of `P`, when it fits the monomial budget.
    pub fixed_space_dim: Option<usize>,
    pub spans_fixed_space: Option<bool>,
}

impl ParabolicBasis {
    pub fn polys(&self) -> Vec<RatPoly> {
        self.entries.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn ok(&self) -> bool {
        self.independent && self.spans_fixed_space != Some(false)
    }
}

pub fn parabolic_basis(n: usize, m: usize) -> Result<ParabolicBasis> {
    if n == 0 || n > MAX_ENUMERATION_LENGTH || m == 0 || m > 3 {
        return Err(Error::budget(format!(
            "parabolic basis limited to N ≤ {MAX_ENUMERATION_LENGTH}, 1 ≤ m ≤ 3; got N = {n}, m = {m}"
        )));
    }
    let classes = self_orthogonal_classes(n, m + 1, false)?;
    let entries = classes
        .iter()
        .flatten()
        .map(|c| {
            Ok(BasisEntry {
                generators: c.representative.to_strings(),
                dim: c.representative.dim(),
                poly: mu_m_of_code(&c.representative, m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let polys: Vec<RatPoly> = entries.iter().map(|e| e.poly.clone()).collect();
    let rank = span_rank(&polys);
    let fixed = match invariant_space(&*parabolic_group(m as u32)?, n, DEFAULT_MONOMIAL_BUDGET) {
        Ok(space) => Some(space),
        Err(Error::Budget(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(ParabolicBasis {
        degree: n,
        genus: m,
        rank,
        independent: rank == entries.len(),
        fixed_space_dim: fixed.as_ref().map(Vec::len),
        spans_fixed_space: fixed.as_ref().map(|f| same_span(f, &polys)),
        entries,
    })
}

/// Whether `cwe(C(m))` equals the sum of `μ_m(D)` over subcodes `D ∋ 1`.
pub fn verify_subcode_sum(code: &BinaryCode, m: usize) -> Result<bool> {
    let mut sum = RatPoly::zero(1 << m, &());
    for d in subcodes_containing_one(code)? {
        sum = sum.add(&mu_m_of_code(&d, m)?)?;
    }
    Ok(sum == cwe(code, m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{hamming8, i2_power};

    #[test]
    fn length_two_has_one_class() {
        let b = parabolic_basis(2, 1).unwrap();
        assert_eq!(b.entries.len(), 1);
        assert!(b.ok());
        assert_eq!(b.fixed_space_dim, Some(1));
    }

    #[test]
    fn subcode_sum() {
        for m in 1..=2 {
            assert!(verify_subcode_sum(&hamming8(), m).unwrap());
            assert!(verify_subcode_sum(&i2_power(3), m).unwrap());
        }
    }
}
