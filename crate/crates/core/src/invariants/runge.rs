//! Spanning of the invariant ring by complete weight enumerators of
//! self-dual codes, checked against the exact fixed space and the Molien series.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{same_span, span_rank};
use crate::codes::{dot, enumerate_self_dual, enumerate_self_dual_prime, hamming8, max_prime_length, PrimeFieldCode};
use crate::enumerators::{cwe, cwe_prime};
use crate::error::{Error, Result};
use crate::exact::{RatPoly, Rational};
use crate::groups::{invariant_space, molien_series, Group, GroupSpec, DEFAULT_MONOMIAL_BUDGET};

#[derive(Clone, Debug, Serialize)]
pub struct RungeReport {
    pub group: String,
    pub length: usize,
    pub genus: usize,
    pub fixed_space_dim: usize,
    pub molien_coefficient: String,
    /// Number of code classes whose enumerators were used.
    pub codes: usize,
    pub enumerator_rank: usize,
    /// The enumerators span exactly the fixed space.
    pub spans: bool,
    /// Whether the enumerators should be a basis (`m ≥ N/2 − 1`).
    pub basis_expected: bool,
    pub is_basis: bool,
    /// For `N = 8`, `m = 1`: the fixed space is `span{q⁴, cwe(H₈)}`.
    pub q4_and_hamming: Option<bool>,
}

impl RungeReport {
    pub fn ok(&self) -> bool {
        self.molien_coefficient == self.fixed_space_dim.to_string()
            && self.spans
            && (!self.basis_expected || self.is_basis)
            && self.q4_and_hamming != Some(false)
    }
}

/// Fixed space, Molien coefficient, rank of the enumerators and whether they span the fixed space.
fn compare(group: &Group, n: usize, enumerators: &[RatPoly]) -> Result<(Vec<RatPoly>, String, usize, bool)> {
    let fixed = invariant_space(group, n, DEFAULT_MONOMIAL_BUDGET)?;
    let molien = molien_series(group, n)?.coeff(n).to_string();
    let rank = span_rank(enumerators);
    let spans = same_span(&fixed, enumerators);
    Ok((fixed, molien, rank, spans))
}

/// Real Clifford group `𝒞_m`, self-dual binary codes of length `N`.
pub fn verify_runge(n: usize, m: usize) -> Result<RungeReport> {
    if m == 0 || m > 2 {
        return Err(Error::budget(format!("full closure limited to m ≤ 2, got {m}")));
    }
    let group = Group::cached(GroupSpec::real(m as u32))?;
    let classes = if n.is_multiple_of(2) { enumerate_self_dual(n, false)? } else { Vec::new() };
    let enumerators = classes.iter().map(|c| cwe(&c.representative, m)).collect::<Result<Vec<_>>>()?;
    let basis_expected = 2 * m + 2 >= n;
    let (fixed, molien_coefficient, enumerator_rank, spans) = compare(&group, n, &enumerators)?;
    let q4_and_hamming = if n == 8 && m == 1 {
        let q = RatPoly::from_terms(2, &(), [(vec![2, 0], Rational::one()), (vec![0, 2], Rational::one())])?;
        Some(same_span(&fixed, &[q.pow(4), cwe(&hamming8(), 1)?]))
    } else {
        None
    };
    Ok(RungeReport {
        group: format!("real m={m}"),
        length: n,
        genus: m,
        fixed_space_dim: fixed.len(),
        molien_coefficient,
        codes: classes.len(),
        enumerator_rank,
        spans,
        basis_expected,
        is_basis: enumerator_rank == enumerators.len() && enumerator_rank == fixed.len(),
        q4_and_hamming,
    })
}

/// A random self-dual code over 𝔽_p containing `1`, grown one isotropic
/// vector at a time; `None` if every attempt reaches a dead end.
pub fn random_self_dual_prime(p: u8, n: usize, rng: &mut impl Rng) -> Result<Option<PrimeFieldCode>> {
    if n % 2 == 1 || !n.is_multiple_of(p as usize) {
        return Ok(None);
    }
    'attempt: for _ in 0..64 {
        let mut c = PrimeFieldCode::repetition(p, n);
        while 2 * c.dim() < n {
            let dual = c.dual();
            let mut found = None;
            for _ in 0..4096 {
                let mut v = vec![0u8; n];
                for row in dual.rows() {
                    let a: u8 = rng.gen_range(0..p);
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = ((*x as u32 + a as u32 * y as u32) % p as u32) as u8;
                    }
                }
                if !c.contains(&v) && dot(&v, &v, p) == 0 {
                    found = Some(v);
                    break;
                }
            }
            match found {
                Some(v) => c = c.with_vector(&v),
                None => continue 'attempt,
            }
        }
        return Ok(Some(c));
    }
    Ok(None)
}

/// Odd-prime Clifford group `𝒞_m^(p)` and self-dual codes over 𝔽_p containing `1`.
/// Within the enumeration limit every class is used; beyond it `samples`
/// random codes drawn with `seed`.
pub fn verify_runge_odd_prime(p: u8, n: usize, m: usize, samples: usize, seed: u64) -> Result<RungeReport> {
    if m != 1 {
        return Err(Error::budget(format!("odd-prime closure limited to m = 1, got {m}")));
    }
    let group = Group::cached(GroupSpec::odd_prime(p as u32, m as u32))?;
    let codes: Vec<PrimeFieldCode> = if n <= max_prime_length(p) {
        enumerate_self_dual_prime(p, n)?.into_iter().filter_map(|c| c.with_ones).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for _ in 0..samples {
            out.extend(random_self_dual_prime(p, n, &mut rng)?);
        }
        out
    };
    let enumerators = codes.iter().map(|c| cwe_prime(c, m)).collect::<Result<Vec<_>>>()?;
    let (fixed, molien_coefficient, enumerator_rank, spans) = compare(&group, n, &enumerators)?;
    Ok(RungeReport {
        group: format!("odd prime p={p} m={m}"),
        length: n,
        genus: m,
        fixed_space_dim: fixed.len(),
        molien_coefficient,
        codes: codes.len(),
        enumerator_rank,
        spans,
        basis_expected: false,
        is_basis: enumerator_rank == enumerators.len() && enumerator_rank == fixed.len(),
        q4_and_hamming: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_eight_genus_one() {
        let r = verify_runge(8, 1).unwrap();
        assert_eq!(r.fixed_space_dim, 2);
        assert!(r.ok(), "{r:?}");
    }
}
