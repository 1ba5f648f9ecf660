//! Full and complete weight enumerators of the extended codes `C(m)`, the
//! parabolic invariants `μ_M` and `μ_m(C)`, the explicit genus-`m` Hamming
//! enumerator `h_m`, genus collapse and the four-variable shadow polynomial.
//!
//! `C(m) = C ⊗ 𝔽_{2^m}` is identified with `C^m`: an `m`-tuple of codewords
//! is an `m × N` matrix whose column `j` is read big-endian as the variable
//! index `Σ_i c_i[j] 2^{m−i}` (the convention of the groups module).

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{weight, BinaryCode, PrimeFieldCode, Shadow};
use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, Exponent, Poly, RatPoly, Rational, Scalar};

pub use crate::codes::hamming_weight_enumerator as hwe;

/// Budget on `|C|^m`, the number of terms summed by `cwe`.
pub const MAX_TUPLES: u64 = 1 << 24;

/// Largest genus for which polynomials in `2^m` variables are built.
pub const MAX_GENUS: usize = 6;

fn tuple_count(code_size: u64, m: usize) -> Result<u64> {
    code_size
        .checked_pow(m as u32)
        .filter(|&t| t <= MAX_TUPLES)
        .ok_or_else(|| Error::budget(format!("{code_size}^{m} tuples exceed the budget of {MAX_TUPLES}")))
}

/// Sums the monomials produced by `columns(tuple_index)` over all tuples.
fn accumulate(num_vars: usize, tuples: u64, columns: impl Fn(u64, &mut Vec<usize>) + Sync) -> RatPoly {
    let counts = (0..tuples)
        .into_par_iter()
        .fold(
            || (HashMap::<Exponent, u64>::new(), Vec::new()),
            |(mut acc, mut cols), t| {
                columns(t, &mut cols);
                let mut e = vec![0u16; num_vars];
                for &c in &cols {
                    e[c] += 1;
                }
                *acc.entry(e).or_insert(0) += 1;
                (acc, cols)
            },
        )
        .map(|(acc, _)| acc)
        .reduce(HashMap::new, |mut a, b| {
            for (e, c) in b {
                *a.entry(e).or_insert(0) += c;
            }
            a
        });
    let mut out = RatPoly::zero(num_vars, &());
    for (e, c) in counts {
        out.add_term(e, Rational::from_int(c));
    }
    out
}

fn check_genus(m: usize) -> Result<()> {
    if m == 0 || m > MAX_GENUS {
        return Err(Error::invalid(format!("genus must be in 1..={MAX_GENUS}, got {m}")));
    }
    Ok(())
}

/// Complete weight enumerator of `C(m)` in the `2^m` variables `x_v`.
pub fn cwe(code: &BinaryCode, m: usize) -> Result<RatPoly> {
    check_genus(m)?;
    tuple_count(1u64 << code.dim().min(63), m)?;
    let words = code.codewords()?;
    let n = code.length();
    let size = words.len() as u64;
    let tuples = size.pow(m as u32);
    Ok(accumulate(1 << m, tuples, |mut t, cols| {
        cols.clear();
        cols.resize(n, 0);
        for i in (0..m).rev() {
            let w = words[(t % size) as usize];
            t /= size;
            for (j, c) in cols.iter_mut().enumerate() {
                *c |= ((w >> j & 1) as usize) << (m - 1 - i);
            }
        }
    }))
}

/// Complete weight enumerator of `C(m)` for a code over 𝔽_p, in the `p^m`
/// variables indexed big-endian by `𝔽_p^m`.
pub fn cwe_prime(code: &PrimeFieldCode, m: usize) -> Result<RatPoly> {
    check_genus(m)?;
    let p = code.p() as usize;
    if p.checked_pow(m as u32).is_none_or(|v| v > 125) {
        return Err(Error::budget(format!("{p}^{m} variables exceed the budget")));
    }
    let words = code.codewords()?;
    let size = words.len() as u64;
    let tuples = tuple_count(size, m)?;
    let n = code.length();
    Ok(accumulate(p.pow(m as u32), tuples, |mut t, cols| {
        cols.clear();
        cols.resize(n, 0);
        let mut place = 1;
        for _ in 0..m {
            let w = &words[(t % size) as usize];
            t /= size;
            for (c, &x) in cols.iter_mut().zip(w) {
                *c += x as usize * place;
            }
            place *= p;
        }
    }))
}

/// An element `e_c` of the full weight enumerator: an `m × N` matrix with rows in `C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExtendedCodeword {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl ExtendedCodeword {
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// Variable index of column `j`.
    pub fn column(&self, j: usize) -> usize {
        let m = self.m();
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &r)| acc | ((r >> j & 1) as usize) << (m - 1 - i))
    }

    pub fn exponent(&self) -> Exponent {
        let mut e = vec![0u16; 1 << self.m()];
        for j in 0..self.n {
            e[self.column(j)] += 1;
        }
        e
    }
}

/// The support of the full weight enumerator of `C(m)`: all `|C|^m` matrices.
pub fn fwe(code: &BinaryCode, m: usize) -> Result<Vec<ExtendedCodeword>> {
    check_genus(m)?;
    let words = code.codewords()?;
    let size = words.len() as u64;
    let tuples = tuple_count(size, m)?;
    Ok((0..tuples)
        .map(|mut t| {
            let mut rows = vec![0u64; m];
            for r in rows.iter_mut().rev() {
                *r = words[(t % size) as usize];
                t /= size;
            }
            ExtendedCodeword { n: code.length(), rows }
        })
        .collect())
}

/// The projection `e_c ↦ ∏_j x_{column j}` applied to a full weight enumerator.
pub fn project(m: usize, fwe: &[ExtendedCodeword]) -> RatPoly {
    let mut out = RatPoly::zero(1 << m, &());
    for c in fwe {
        out.add_term(c.exponent(), Rational::one());
    }
    out
}

/// The monomial `μ_M` of an `m × N` bit matrix and whether it is fixed by the
/// diagonal group, i.e. whether the rows are even and pairwise orthogonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonicMonomial {
    pub exponent: Exponent,
    pub diagonal_invariant: bool,
}

pub fn mu_matrix(rows: &[u64], n: usize) -> MonicMonomial {
    let e = ExtendedCodeword { n, rows: rows.to_vec() };
    let diagonal_invariant = rows
        .iter()
        .enumerate()
        .all(|(i, &a)| rows[i..].iter().all(|&b| weight(a & b).is_multiple_of(2)));
    MonicMonomial {
        exponent: e.exponent(),
        diagonal_invariant,
    }
}

/// `μ_m(D) = Σ μ_M` over `m × N` matrices `M` with `⟨rows of M, 1⟩ = D`;
/// zero if `1 ∉ D` or `dim D > m + 1`.
pub fn mu_m_of_code(code: &BinaryCode, m: usize) -> Result<RatPoly> {
    check_genus(m)?;
    let n = code.length();
    let mut out = RatPoly::zero(1 << m, &());
    if !code.contains_all_ones() || code.dim() > m + 1 {
        return Ok(out);
    }
    let ones = code.all_ones();
    for e in fwe(code, m)? {
        let span = BinaryCode::new(n, e.rows.iter().copied().chain([ones]))?;
        if span.dim() == code.dim() {
            out.add_term(e.exponent(), Rational::one());
        }
    }
    Ok(out)
}

/// Subspaces of 𝔽_2^m of dimension `k`, each given by its sorted element list.
pub fn subspaces(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut level: BTreeSet<Vec<usize>> = BTreeSet::from([vec![0]]);
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for s in &level {
            for v in 0..1usize << m {
                if !s.contains(&v) {
                    let mut t: Vec<usize> = s.iter().flat_map(|&u| [u, u ^ v]).collect();
                    t.sort_unstable();
                    next.insert(t);
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// `h_m` built from affine subspaces of dimension `0..=3`, together with the
/// multiplicity-weighted number of terms.
#[derive(Clone, Debug, PartialEq)]
pub struct ExplicitHm {
    pub poly: RatPoly,
    pub weighted_terms: u128,
}

/// Coefficients of the affine-subspace sums, indexed by dimension.
pub const HM_COEFFICIENTS: [u64; 4] = [1, 14, 168, 1344];

pub fn h_m_explicit(m: usize) -> Result<ExplicitHm> {
    check_genus(m)?;
    if m > 5 {
        return Err(Error::budget("subspace enumeration limited to m ≤ 5"));
    }
    let mut poly = RatPoly::zero(1 << m, &());
    let mut weighted_terms = 0u128;
    for (k, &coeff) in HM_COEFFICIENTS.iter().enumerate().take(m + 1) {
        let power = 8 >> k;
        for u in subspaces(m, k) {
            let mut cosets = BTreeSet::new();
            for d in 0..1usize << m {
                let mut coset: Vec<usize> = u.iter().map(|&x| x ^ d).collect();
                coset.sort_unstable();
                cosets.insert(coset);
            }
            for coset in cosets {
                let mut e = vec![0u16; 1 << m];
                for v in coset {
                    e[v] = power;
                }
                poly.add_term(e, Rational::from_int(coeff));
                weighted_terms += coeff as u128;
            }
        }
    }
    Ok(ExplicitHm { poly, weighted_terms })
}

/// The identity `2^m + 14[m,1]2^{m−1} + 168[m,2]2^{m−2} + 1344[m,3]2^{m−3}`
/// evaluated with Gaussian binomials.
pub fn hm_term_count_formula(m: usize) -> u128 {
    let gauss = |k: usize| -> u128 {
        if k > m {
            return 0;
        }
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k {
            num *= (1u128 << (m - i)) - 1;
            den *= (1u128 << (i + 1)) - 1;
        }
        num / den
    };
    (0..4)
        .filter(|&k| k <= m)
        .map(|k| HM_COEFFICIENTS[k] as u128 * gauss(k) * (1u128 << (m - k)))
        .sum()
}

/// Collapses genus `m` to `m − 1` by identifying `x_{(a, w)}` with `x_{(0, w)}`
/// in the first (most significant) coordinate; `p` is the alphabet size.
pub fn genus_collapse(poly: &RatPoly, p: usize) -> Result<RatPoly> {
    let nv = poly.num_vars();
    if nv < p || !nv.is_multiple_of(p) {
        return Err(Error::invalid(format!("{nv} variables is not a positive genus for p = {p}")));
    }
    let block = nv / p;
    let mut out = RatPoly::zero(block, &());
    for (e, c) in poly.terms() {
        let mut f = vec![0u16; block];
        for (i, &k) in e.iter().enumerate() {
            f[i % block] += k;
        }
        out.add_term(f, c.clone());
    }
    Ok(out)
}

/// `W(x, y, z, w) = Σ_{v∈C} x^{n−wt(v₀)−wt((1+v₀)∩v)} y^{wt((1+v₀)∩v)} z^{wt(v₀)−wt(v₀∩v)} w^{wt(v₀∩v)}`.
pub fn w_quad(code: &BinaryCode, v0: u64) -> Result<RatPoly> {
    let shadow = Shadow::new(code)?;
    if !shadow.contains(v0) {
        return Err(Error::invalid("v₀ is not in the shadow"));
    }
    let n = code.length() as u32;
    let outside = code.all_ones() & !v0;
    let w0 = weight(v0);
    let mut out = RatPoly::zero(4, &());
    for v in code.codewords()? {
        let a = weight(outside & v);
        let b = weight(v0 & v);
        out.add_term(vec![(n - w0 - a) as u16, a as u16, (w0 - b) as u16, b as u16], Rational::one());
    }
    Ok(out)
}

/// Checks of the four-variable shadow polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShadowIdentities {
    /// `W(x, y, x, y) = hwe_C(x, y)`.
    pub specializes_to_hwe: bool,
    /// `W(x, iy, z, −iw) = W(x, y, z, w)`.
    pub diagonal_symmetry: bool,
    /// `W` is fixed by the Hadamard map on `(x, y)` and on `(z, w)`.
    pub hadamard_symmetry: bool,
    /// `2^{−n/2} hwe_C(x + y, i(x − y))` equals the enumerated shadow enumerator.
    pub shadow_formula: bool,
}

impl ShadowIdentities {
    pub fn all(&self) -> bool {
        self.specializes_to_hwe && self.diagonal_symmetry && self.hadamard_symmetry && self.shadow_formula
    }
}

fn to_zeta8(p: &RatPoly) -> Poly<Cyclotomic> {
    p.map_coeffs(&8u32, |q| Cyclotomic::from_rational(8, q.clone()).expect("conductor 8"))
}

pub fn shadow_identities(code: &BinaryCode) -> Result<ShadowIdentities> {
    let shadow = Shadow::new(code)?;
    let w = w_quad(code, shadow.offset)?;
    let hwe_c = hwe(code)?;
    let two = |i: usize| RatPoly::var(2, i, &());
    let specializes_to_hwe = w.substitute(&[two(0), two(1), two(0), two(1)])? == hwe_c;

    let wz = to_zeta8(&w);
    let v = |i: usize| Poly::<Cyclotomic>::var(4, i, &8u32);
    let i = Cyclotomic::i(8)?;
    let diagonal = wz.substitute(&[v(0), v(1).scale(&i), v(2), v(3).scale(&i.neg())])?;
    let r = Cyclotomic::sqrt2().inv()?;
    let hadamard = wz.substitute(&[
        v(0).add(&v(1))?.scale(&r),
        v(0).sub(&v(1))?.scale(&r),
        v(2).add(&v(3))?.scale(&r),
        v(2).sub(&v(3))?.scale(&r),
    ])?;
    Ok(ShadowIdentities {
        specializes_to_hwe,
        diagonal_symmetry: diagonal == wz,
        hadamard_symmetry: hadamard == wz,
        shadow_formula: crate::codes::shadow_enumerator_formula(code)? == shadow.enumerator()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{hamming8, i2_power};
    use crate::exact::binary_var_name;

    #[test]
    fn small_cwes() {
        let c = i2_power(1);
        assert_eq!(cwe(&c, 1).unwrap().render(), "x0^2 + x1^2");
        assert_eq!(cwe(&c, 2).unwrap().render_with(binary_var_name(2)), "x00^2 + x01^2 + x10^2 + x11^2");
        assert_eq!(cwe(&hamming8(), 1).unwrap().render(), "x0^8 + 14*x0^4*x1^4 + x1^8");
    }

    #[test]
    fn h_m_matches_hamming_cwe() {
        for m in 1..=2 {
            let h = h_m_explicit(m).unwrap();
            assert_eq!(h.poly, cwe(&hamming8(), m).unwrap());
            assert_eq!(h.weighted_terms, 1 << (4 * m));
            assert_eq!(hm_term_count_formula(m), 1 << (4 * m));
        }
    }

    #[test]
    fn collapse_scales_by_code_size() {
        let h = hamming8();
        let lhs = genus_collapse(&cwe(&h, 2).unwrap(), 2).unwrap();
        assert_eq!(lhs, cwe(&h, 1).unwrap().scale(&Rational::from_int(16)));
    }

    #[test]
    fn mu_examples() {
        let a = mu_matrix(&[0b11, 0b11], 2);
        assert_eq!(a.exponent, vec![0, 0, 0, 2]);
        assert!(a.diagonal_invariant);
        let b = mu_matrix(&[0b01, 0b11], 2);
        assert_eq!(b.exponent, vec![0, 1, 0, 1]);
        assert!(!b.diagonal_invariant);
        assert_eq!(mu_m_of_code(&i2_power(1), 1).unwrap().render(), "x0^2 + x1^2");
    }

    #[test]
    fn shadow_checks() {
        for c in [i2_power(2), hamming8()] {
            assert!(shadow_identities(&c).unwrap().all());
        }
    }
}
