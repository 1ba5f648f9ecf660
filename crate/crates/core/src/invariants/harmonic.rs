//! Harmonic invariants: the kernel of the Euclidean Laplacian on the space
//! of invariants of a given degree.

use serde::Serialize;

use super::{coordinates, same_span};
use crate::codes::hamming8;
use crate::enumerators::cwe;
use crate::error::{Error, Result};
use crate::exact::{linalg, monomials_of_degree, RatPoly, Rational};
use crate::groups::{invariant_space, Group, GroupSpec, DEFAULT_MONOMIAL_BUDGET};

#[derive(Clone, Debug, Serialize)]
pub struct HarmonicReport {
    pub genus: usize,
    /// The degree-8 harmonic invariant with coprime integer coefficients.
    #[serde(skip)]
    pub poly: Option<RatPoly>,
    pub degree8_invariants: usize,
    pub degree8_harmonic: usize,
    pub degree10_invariants: usize,
    pub degree10_harmonic: usize,
    pub q4_is_harmonic: bool,
    /// The degree-8 invariants are `span{q⁴, cwe(H₈(m))}`.
    pub spanned_by_q4_and_hamming: bool,
}

impl HarmonicReport {
    pub fn ok(&self) -> bool {
        self.degree8_harmonic == 1 && self.degree10_harmonic == 0 && !self.q4_is_harmonic && self.spanned_by_q4_and_hamming
    }
}

/// Basis of the harmonic elements in the span of `space`.
fn harmonic_subspace(space: &[RatPoly], n: usize, degree: u16) -> Vec<RatPoly> {
    if space.is_empty() {
        return Vec::new();
    }
    let monos = monomials_of_degree(n, degree.saturating_sub(2));
    let laps: Vec<RatPoly> = space.iter().map(RatPoly::laplacian).collect();
    // Equation per monomial: Σ_j a_j Δ(b_j)[e] = 0.
    let rows: Vec<Vec<Rational>> = monos.iter().map(|e| laps.iter().map(|l| l.coeff(e)).collect()).collect();
    linalg::nullspace(&rows, space.len(), &())
        .into_iter()
        .map(|a| {
            a.iter()
                .zip(space)
                .fold(RatPoly::zero(n, &()), |acc, (c, b)| acc.add(&b.scale(c)).expect("same arity"))
        })
        .collect()
}

/// Basis of the harmonic invariants of `group` of one degree.
pub fn harmonic_invariants(group: &Group, degree: usize) -> Result<Vec<RatPoly>> {
    let space = invariant_space(group, degree, DEFAULT_MONOMIAL_BUDGET)?;
    Ok(harmonic_subspace(&space, group.dim(), degree as u16).iter().map(primitive).collect())
}

/// Scales to coprime integer coefficients with a positive leading term.
fn primitive(p: &RatPoly) -> RatPoly {
    use num_integer::Integer;
    let l = Rational::lcm_denominators(p.terms().map(|(_, c)| c));
    let g = p
        .terms()
        .map(|(_, c)| (c.clone() * Rational::from_int(l.clone())).numer().clone())
        .fold(num_bigint::BigInt::from(0), |a, b| a.gcd(&b));
    let mut s = Rational::from_int(l) * Rational::from_int(g).recip().expect("nonzero polynomial");
    if p.terms().next().is_some_and(|(_, c)| c.is_negative()) {
        s = -s;
    }
    p.scale(&s)
}

pub fn harmonic_degree8(m: usize) -> Result<HarmonicReport> {
    if m == 0 || m > 2 {
        return Err(Error::budget(format!("full closure limited to m ≤ 2, got {m}")));
    }
    let group = Group::cached(GroupSpec::real(m as u32))?;
    let n = 1 << m;
    let inv8 = invariant_space(&group, 8, DEFAULT_MONOMIAL_BUDGET)?;
    let inv10 = invariant_space(&group, 10, DEFAULT_MONOMIAL_BUDGET)?;
    let h8 = harmonic_subspace(&inv8, n, 8);
    let h10 = harmonic_subspace(&inv10, n, 10);
    let q = (0..n).fold(RatPoly::zero(n, &()), |acc, i| {
        let mut e = vec![0u16; n];
        e[i] = 2;
        acc.add(&RatPoly::monomial(e, Rational::one())).expect("same arity")
    });
    let q4 = q.pow(4);
    let hamming = cwe(&hamming8(), m)?;
    let poly = match h8.as_slice() {
        [h] => {
            coordinates(&[q4.clone(), hamming.clone()], h)?
                .ok_or_else(|| Error::invalid("harmonic invariant outside span{q⁴, cwe(H₈)}"))?;
            Some(primitive(h))
        }
        _ => None,
    };
    Ok(HarmonicReport {
        genus: m,
        poly,
        degree8_invariants: inv8.len(),
        degree8_harmonic: h8.len(),
        degree10_invariants: inv10.len(),
        degree10_harmonic: h10.len(),
        q4_is_harmonic: q4.laplacian().is_zero(),
        spanned_by_q4_and_hamming: same_span(&inv8, &[q4, hamming]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_one() {
        let r = harmonic_degree8(1).unwrap();
        assert!(r.ok(), "{r:?}");
        let h = r.poly.unwrap();
        assert!(h.laplacian().is_zero());
        assert_eq!(h.render(), "x0^8 - 28*x0^6*x1^2 + 70*x0^4*x1^4 - 28*x0^2*x1^6 + x1^8");
    }
}
