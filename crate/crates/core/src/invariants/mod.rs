//! Computational checks of the invariant theory of the Clifford groups:
//! the parabolic basis `μ_m(C)`, the averaging operator `X_P(h ⊗ I)`, the
//! spanning of invariant rings by complete weight enumerators, the full
//! Reynolds average of a code's enumerator, and harmonic invariants.

mod averaging;
mod harmonic;
mod parabolic;
mod runge;

pub use averaging::{
    verify_averaging_lemma, verify_averaging_theorem, verify_triangular, AveragingReport, LemmaReport, ProductRange,
    TriangularReport, Variant,
};
pub use harmonic::{harmonic_degree8, harmonic_invariants, HarmonicReport};
pub use parabolic::{parabolic_basis, verify_subcode_sum, BasisEntry, ParabolicBasis};
pub use runge::{random_self_dual_prime, verify_runge, verify_runge_odd_prime, RungeReport};

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::exact::{linalg, Exponent, RatPoly, Rational};
use crate::groups::Group;

/// Hex SHA-256 of the canonical byte encoding of a polynomial.
pub fn poly_hash(p: &RatPoly) -> String {
    format!("{:x}", Sha256::digest(p.canonical_bytes()))
}

/// Coefficient rows of `polys` over the union of their monomials.
fn coefficient_rows(polys: &[RatPoly]) -> Vec<Vec<Rational>> {
    let monos: Vec<Exponent> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(e, _)| e.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    polys.iter().map(|p| monos.iter().map(|e| p.coeff(e)).collect()).collect()
}

/// Dimension of the ℚ-span of `polys`.
pub fn span_rank(polys: &[RatPoly]) -> usize {
    linalg::rank(&coefficient_rows(polys))
}

/// Coordinates of `target` in the span of `basis`, if it lies there.
pub fn coordinates(basis: &[RatPoly], target: &RatPoly) -> Result<Option<Vec<Rational>>> {
    let mut all = basis.to_vec();
    all.push(target.clone());
    let mut rows = coefficient_rows(&all);
    let b = rows.pop().expect("target row");
    linalg::solve_left(&rows, &b, &())
}

/// Whether two lists of polynomials span the same space.
pub fn same_span(a: &[RatPoly], b: &[RatPoly]) -> bool {
    let joint: Vec<RatPoly> = a.iter().chain(b).cloned().collect();
    let r = span_rank(&joint);
    r == span_rank(a) && r == span_rank(b)
}

/// The parabolic subgroup of `𝒞_m`, built once per process.
pub fn parabolic_group(m: u32) -> Result<Arc<Group>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Group>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().expect("parabolic cache poisoned").get(&m) {
        return Ok(g.clone());
    }
    let g = Arc::new(Group::parabolic(m)?);
    cache.lock().expect("parabolic cache poisoned").insert(m, g.clone());
    Ok(g)
}
