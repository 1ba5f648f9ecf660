//! Barnes-Wall lattices `L_m ⊆ L′_m` spanned by scaled characteristic
//! vectors of affine subspaces of 𝔽_2^m, the balanced ℤ[√2]-lattice
//! `M_m = √2 L′_m + L_m`, its tensor structure, Clifford automorphisms and
//! spherical-design tests on group orbits.
//!
//! Vectors are rows; coordinate `v` is the basis vector `b_v`, `v ∈ 𝔽_2^m`
//! read as an integer. ℤ[√2]-modules are compared through their ℤ-structure:
//! each vector `v` contributes `v` and `√2·v`, flattened as the `√2`-parts of
//! all coordinates followed by the rational parts, and the integer Hermite
//! normal form of that flattening is canonical.

mod automorphism;
mod design;

pub use automorphism::{
    rotation_345, stabilizes_balanced, verify_automorphism_membership, verify_complex_automorphism_membership, verify_span_maximal_order,
    AutomorphismReport, SpanReport,
};
pub use design::{design_test, find_common_zero, sphere_moment, DesignReport, PointMode, MAX_ORBIT};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::hnf::{hnf, HnfBuilder};
use crate::exact::{Matrix, Rational, Scalar, SqrtTwo};

/// Largest `m` for which generating sets are enumerated.
pub const MAX_LATTICE_GENUS: usize = 4;

/// An affine subspace `a + U₀` of 𝔽_2^m.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineSubspace {
    pub m: usize,
    /// Echelon basis of `U₀`, distinct leading bits, decreasing.
    pub directions: Vec<usize>,
    /// The smallest element of the coset.
    pub offset: usize,
}

fn xor_reduce(basis: &[usize], mut v: usize) -> usize {
    for &b in basis {
        let top = usize::BITS - 1 - b.leading_zeros();
        if v >> top & 1 == 1 {
            v ^= b;
        }
    }
    v
}

/// Adds `v` to an echelon basis; a reduced nonzero vector has a new leading bit.
fn insert_direction(basis: &mut Vec<usize>, v: usize) -> bool {
    let r = xor_reduce(basis, v);
    if r != 0 {
        basis.push(r);
        basis.sort_unstable_by(|a, b| b.cmp(a));
    }
    r != 0
}

impl AffineSubspace {
    pub fn new(m: usize, directions: &[usize], offset: usize) -> Result<Self> {
        if m > MAX_LATTICE_GENUS + 2 || offset >> m != 0 || directions.iter().any(|&d| d >> m != 0) {
            return Err(Error::invalid("affine subspace outside 𝔽_2^m"));
        }
        let mut basis = Vec::new();
        for &d in directions {
            insert_direction(&mut basis, d);
        }
        let mut s = AffineSubspace { m, directions: basis, offset };
        s.offset = s.elements().into_iter().min().expect("nonempty");
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        v >> self.m == 0 && xor_reduce(&self.directions, v ^ self.offset) == 0
    }

    pub fn elements(&self) -> Vec<usize> {
        let mut out = vec![self.offset];
        for &d in &self.directions {
            let shifted: Vec<usize> = out.iter().map(|&x| x ^ d).collect();
            out.extend(shifted);
        }
        out.sort_unstable();
        out
    }
}

/// Every affine subspace of 𝔽_2^m of dimension `d`.
pub fn affine_subspaces(m: usize, d: usize) -> Result<Vec<AffineSubspace>> {
    let mut out = std::collections::BTreeSet::new();
    for lin in crate::enumerators::subspaces(m, d) {
        let mut basis = Vec::new();
        for &v in &lin {
            insert_direction(&mut basis, v);
        }
        for a in 0..1usize << m {
            out.insert(AffineSubspace::new(m, &basis, a)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// The 0/1 characteristic vector of `U` in the basis `b_v`.
pub fn chi_vector(u: &AffineSubspace) -> Vec<i64> {
    let mut out = vec![0; 1 << u.m];
    for v in u.elements() {
        out[v] = 1;
    }
    out
}

/// Which Barnes-Wall lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeKind {
    /// `L_m`, `δ = 1`.
    Plain,
    /// `L′_m`, `δ = 0`.
    Primed,
    /// `M_m = √2 L′_m + L_m` over ℤ[√2].
    Balanced,
}

/// A lattice given by basis rows, with its Gram matrix.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    pub m: usize,
    pub kind: LatticeKind,
    pub basis: Vec<Vec<SqrtTwo>>,
    pub gram: Matrix<SqrtTwo>,
    /// Determinant of the Gram matrix.
    pub det: SqrtTwo,
    /// Minimum norm of a nonzero vector (ℤ-lattices with `m ≤ 3`).
    pub minimum: Option<Rational>,
}

impl LatticeBasis {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.m
    }

    pub fn to_json(&self) -> Value {
        let rows = |m: &[Vec<SqrtTwo>]| -> Value {
            m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>().into()
        };
        json!({
            "m": self.m,
            "kind": self.kind,
            "rank": self.rank(),
            "basis": rows(&self.basis),
            "gram": rows(&self.gram.to_rows()),
            "det": self.det.to_string(),
            "minimum": self.minimum.as_ref().map(|q| q.to_string()),
        })
    }

    /// The Gram matrix as aligned plain text.
    pub fn gram_table(&self) -> String {
        let cells: Vec<Vec<String>> =
            self.gram.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        cells
            .iter()
            .map(|r| r.iter().map(|s| format!("{s:>width$}")).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Canonical integer HNF of the ℤ-structure of the lattice.
    pub fn flat_hnf(&self) -> Result<Vec<Vec<BigInt>>> {
        match self.kind {
            LatticeKind::Balanced => zsqrt2_flat_hnf(&self.basis),
            _ => Ok(hnf(&integer_rows(&self.basis)?)),
        }
    }
}

fn check_genus(m: usize) -> Result<()> {
    if m == 0 || m > MAX_LATTICE_GENUS {
        return Err(Error::budget(format!("lattices limited to 1 ≤ m ≤ {MAX_LATTICE_GENUS}, got {m}")));
    }
    Ok(())
}

fn to_big(q: &Rational) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.numer().clone())
    } else {
        Err(Error::invalid(format!("{q} is not an integer")))
    }
}

fn integer_rows(rows: &[Vec<SqrtTwo>]) -> Result<Vec<Vec<BigInt>>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    if !x.b.is_zero() {
                        return Err(Error::invalid("irrational entry in a ℤ-lattice"));
                    }
                    to_big(&x.a)
                })
                .collect()
        })
        .collect()
}

fn gram_of(basis: &[Vec<SqrtTwo>]) -> Matrix<SqrtTwo> {
    let n = basis.len();
    Matrix::from_fn(n, n, &(), |i, j| {
        basis[i].iter().zip(&basis[j]).fold(SqrtTwo::zero(), |acc, (x, y)| &acc + &(x * y))
    })
}

/// `[√2-parts…, rational parts…]`, or `None` if an entry is not in ℤ[√2].
pub fn flatten(v: &[SqrtTwo]) -> Option<Vec<BigInt>> {
    let part = |q: &Rational| q.is_integer().then(|| q.numer().clone());
    let mut out = Vec::with_capacity(2 * v.len());
    for x in v {
        out.push(part(&x.b)?);
    }
    for x in v {
        out.push(part(&x.a)?);
    }
    Some(out)
}

/// Integer HNF of the ℤ-module `Σ ℤ[√2] v` over the given generators.
pub fn zsqrt2_flat_hnf(generators: &[Vec<SqrtTwo>]) -> Result<Vec<Vec<BigInt>>> {
    Ok(zsqrt2_builder(generators)?.finish())
}

fn zsqrt2_builder(generators: &[Vec<SqrtTwo>]) -> Result<HnfBuilder> {
    let n = generators.first().map_or(0, Vec::len);
    let root = SqrtTwo::root();
    let mut b = HnfBuilder::new(2 * n);
    for v in generators {
        let w: Vec<SqrtTwo> = v.iter().map(|x| x * &root).collect();
        for u in [v, &w] {
            b.insert(flatten(u).ok_or_else(|| Error::invalid("generator not integral over ℤ[√2]"))?);
        }
    }
    Ok(b)
}

fn round_quotient(x: &SqrtTwo, y: &SqrtTwo) -> Result<SqrtTwo> {
    let (a, b) = x.checked_div(y)?.round();
    Ok(SqrtTwo::from_big_ints(a, b))
}

fn abs_norm(x: &SqrtTwo) -> Rational {
    x.norm().abs()
}

/// Echelon basis over the Euclidean ring ℤ[√2] (norm `|a² − 2b²|`), with
/// entries above each pivot reduced by rounded division.
pub fn zsqrt2_echelon(rows: &[Vec<SqrtTwo>]) -> Result<Vec<Vec<SqrtTwo>>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let nonzero = |r: &Vec<SqrtTwo>| r.iter().any(|x| !x.is_zero());
    let mut work: Vec<Vec<SqrtTwo>> = rows.iter().filter(|r| nonzero(r)).cloned().collect();
    let mut out: Vec<(usize, Vec<SqrtTwo>)> = Vec::new();
    for c in 0..ncols {
        loop {
            let active: Vec<usize> = (0..work.len()).filter(|&i| !work[i][c].is_zero()).collect();
            let Some(&p) = active.iter().min_by(|&&i, &&j| abs_norm(&work[i][c]).cmp(&abs_norm(&work[j][c]))) else {
                break;
            };
            if active.len() == 1 {
                out.push((c, work.remove(p)));
                break;
            }
            let pivot = work[p].clone();
            for &i in &active {
                if i != p {
                    let q = round_quotient(&work[i][c], &pivot[c])?;
                    for (x, y) in work[i].iter_mut().zip(&pivot) {
                        *x = &*x - &(&q * y);
                    }
                }
            }
            work.retain(|r| nonzero(r));
        }
    }
    for k in 0..out.len() {
        let (ck, row_k) = out[k].clone();
        for (_, row_j) in out.iter_mut().take(k) {
            let q = round_quotient(&row_j[ck], &row_k[ck])?;
            if !q.is_zero() {
                for (x, y) in row_j.iter_mut().zip(&row_k) {
                    *x = &*x - &(&q * y);
                }
            }
        }
    }
    Ok(out.into_iter().map(|(_, r)| r).collect())
}

/// Shortest nonzero norm of an integral ℤ-lattice, by enumerating integer
/// vectors of norm at most the smallest basis norm.
fn minimum_norm(hnf_rows: &[Vec<BigInt>], bound: i64) -> Option<i64> {
    let n = hnf_rows.first()?.len();
    let mut builder = HnfBuilder::new(n);
    for r in hnf_rows {
        builder.insert(r.clone());
    }
    let mut best: Option<i64> = None;
    let mut x = vec![0i64; n];
    fn walk(i: usize, left: i64, x: &mut Vec<i64>, b: &HnfBuilder, bound: i64, best: &mut Option<i64>) {
        if i == x.len() {
            let norm = bound - left;
            if norm > 0 && best.is_none_or(|m| norm < m) {
                let v: Vec<BigInt> = x.iter().map(|&t| BigInt::from(t)).collect();
                if b.contains(&v) {
                    *best = Some(norm);
                }
            }
            return;
        }
        let r = left.sqrt();
        for t in -r..=r {
            x[i] = t;
            walk(i + 1, left - t * t, x, b, bound, best);
        }
        x[i] = 0;
    }
    walk(0, bound, &mut x, &builder, bound, &mut best);
    best
}

fn finish(m: usize, kind: LatticeKind, basis: Vec<Vec<SqrtTwo>>) -> Result<LatticeBasis> {
    let gram = gram_of(&basis);
    let det = gram.det()?;
    let minimum = if kind != LatticeKind::Balanced && m <= 3 {
        let rows = hnf(&integer_rows(&basis)?);
        let bound = (0..gram.rows())
            .filter_map(|i| gram.get(i, i).a.to_i64())
            .min()
            .ok_or_else(|| Error::invalid("empty lattice"))?;
        minimum_norm(&rows, bound).map(Rational::from)
    } else {
        None
    };
    Ok(LatticeBasis { m, kind, basis, gram, det, minimum })
}

/// Generators `2^{⌊(m−d+δ)/2⌋} χ_U` of `L_m` (`δ = 1`) or `L′_m` (`δ = 0`).
pub fn barnes_wall_generators(m: usize, primed: bool) -> Result<Vec<Vec<i64>>> {
    check_genus(m)?;
    let delta = if primed { 0 } else { 1 };
    let mut out = Vec::new();
    for d in 0..=m {
        let scale = 1i64 << ((m - d + delta) / 2);
        for u in affine_subspaces(m, d)? {
            out.push(chi_vector(&u).into_iter().map(|x| x * scale).collect());
        }
    }
    Ok(out)
}

pub fn barnes_wall(m: usize, primed: bool) -> Result<LatticeBasis> {
    let gens = barnes_wall_generators(m, primed)?;
    let big: Vec<Vec<BigInt>> = gens.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let basis = hnf(&big)
        .into_iter()
        .map(|r| r.into_iter().map(|x| SqrtTwo::from_big_ints(x, BigInt::zero())).collect())
        .collect();
    finish(m, if primed { LatticeKind::Primed } else { LatticeKind::Plain }, basis)
}

/// Generators `√2^{m−d} χ_U` of `M_m`.
pub fn balanced_generators(m: usize) -> Result<Vec<Vec<SqrtTwo>>> {
    check_genus(m)?;
    let mut out = Vec::new();
    for d in 0..=m {
        let scale = SqrtTwo::root_pow((m - d) as i32);
        for u in affine_subspaces(m, d)? {
            out.push(chi_vector(&u).into_iter().map(|x| &scale * &SqrtTwo::from(x)).collect());
        }
    }
    Ok(out)
}

pub fn balanced_lattice(m: usize) -> Result<LatticeBasis> {
    let basis = zsqrt2_echelon(&balanced_generators(m)?)?;
    finish(m, LatticeKind::Balanced, basis)
}

/// Kronecker products `a ⊗ b` of all pairs of rows.
pub fn kron_rows(a: &[Vec<SqrtTwo>], b: &[Vec<SqrtTwo>]) -> Vec<Vec<SqrtTwo>> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x.iter().flat_map(|s| y.iter().map(move |t| s * t)).collect()))
        .collect()
}

/// Whether `M_m = M_{m−1} ⊗ M_1`, by equality of canonical HNFs. With
/// `perturb`, the first product generator is doubled first (a negative control).
pub fn verify_tensor_decomposition(m: usize, perturb: bool) -> Result<bool> {
    if !(2..=MAX_LATTICE_GENUS).contains(&m) {
        return Err(Error::invalid(format!("tensor decomposition needs 2 ≤ m ≤ {MAX_LATTICE_GENUS}, got {m}")));
    }
    let mut gens = kron_rows(&balanced_lattice(m - 1)?.basis, &balanced_lattice(1)?.basis);
    if perturb {
        gens[0] = gens[0].iter().map(|x| x * &SqrtTwo::from(2)).collect();
    }
    Ok(zsqrt2_flat_hnf(&gens)? == balanced_lattice(m)?.flat_hnf()?)
}

/// `M ∩ ℚ^n` for the ℤ[√2]-lattice spanned by `generators`, as an integer HNF.
pub fn rational_part(generators: &[Vec<SqrtTwo>]) -> Result<Vec<Vec<BigInt>>> {
    let n = generators.first().map_or(0, Vec::len);
    // In echelon form with the √2-parts first, the rows with zero √2-part
    // span the intersection.
    let rows: Vec<Vec<BigInt>> = zsqrt2_flat_hnf(generators)?
        .into_iter()
        .filter(|r| r[..n].iter().all(Zero::is_zero))
        .map(|r| r[n..].to_vec())
        .collect();
    Ok(hnf(&rows))
}

/// `M_1^{⊗m}` by iterated Kronecker products of the `M_1` basis.
pub fn tensor_power_m1(m: usize) -> Result<Vec<Vec<SqrtTwo>>> {
    check_genus(m)?;
    let m1 = balanced_lattice(1)?.basis;
    let mut acc = m1.clone();
    for _ in 1..m {
        acc = zsqrt2_echelon(&kron_rows(&acc, &m1))?;
    }
    Ok(acc)
}

/// Rescaling of an integral lattice to an even unimodular one.
#[derive(Clone, Debug, serde::Serialize)]
pub struct UnimodularCheck {
    pub det: String,
    /// `c` with `Gram / c` unimodular, if an integer `c` exists.
    pub scale: Option<String>,
    pub integral: bool,
    pub even: bool,
    pub unimodular: bool,
}

impl UnimodularCheck {
    pub fn ok(&self) -> bool {
        self.integral && self.even && self.unimodular
    }
}

pub fn even_unimodular_rescaling(lattice: &LatticeBasis) -> Result<UnimodularCheck> {
    let n = lattice.rank() as u32;
    let det = lattice.det.clone();
    let d = det
        .to_rational()
        .filter(|q| q.is_integer() && q.numer().is_positive())
        .ok_or_else(|| Error::invalid("determinant is not a positive integer"))?;
    let root = d.numer().nth_root(n);
    if root.pow(n) != *d.numer() {
        return Ok(UnimodularCheck { det: det.to_string(), scale: None, integral: false, even: false, unimodular: false });
    }
    let c = Rational::from(root.clone());
    let scaled: Vec<Vec<Rational>> = lattice
        .gram
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.a.checked_div(&c)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let irrational = lattice.gram.entries().iter().any(|x| !x.b.is_zero());
    let integral = !irrational && scaled.iter().flatten().all(Rational::is_integer);
    let even = integral && (0..scaled.len()).all(|i| (scaled[i][i].numer() % 2u32).is_zero());
    let unimodular = integral && Matrix::from_rows(scaled, &())?.det()?.abs().is_one();
    Ok(UnimodularCheck { det: det.to_string(), scale: Some(root.to_string()), integral, even, unimodular })
}

/// `[L′_m : L_m]` from the HNF pivots.
pub fn barnes_wall_index(m: usize) -> Result<BigInt> {
    let plain = barnes_wall(m, false)?.flat_hnf()?;
    let primed = barnes_wall(m, true)?.flat_hnf()?;
    let index = |rows: &[Vec<BigInt>]| crate::exact::hnf::hnf_index(rows);
    let (a, b) = (index(&plain), index(&primed));
    if !(&a % &b).is_zero() {
        return Err(Error::invalid("L_m is not a sublattice of L′_m"));
    }
    Ok(a / b)
}

/// Whether every row of `sub` lies in the ℤ-span of `sup` (both integral).
pub fn is_sublattice(sub: &LatticeBasis, sup: &LatticeBasis) -> Result<bool> {
    let mut b = HnfBuilder::new(sup.dim());
    for r in integer_rows(&sup.basis)? {
        b.insert(r);
    }
    Ok(integer_rows(&sub.basis)?.iter().all(|r| b.contains(r)))
}

/// The ℤ-lattice `L_m` as an HNF.
pub fn plain_hnf(m: usize) -> Result<Vec<Vec<BigInt>>> {
    barnes_wall(m, false)?.flat_hnf()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_examples() {
        let all = AffineSubspace::new(1, &[1], 0).unwrap();
        assert_eq!(chi_vector(&all), vec![1, 1]);
        let origin = AffineSubspace::new(2, &[], 0).unwrap();
        assert_eq!(chi_vector(&origin), vec![1, 0, 0, 0]);
        for d in 0..=3 {
            for u in affine_subspaces(3, d).unwrap() {
                assert_eq!(chi_vector(&u).iter().sum::<i64>(), 1 << d);
            }
        }
    }

    #[test]
    fn affine_counts() {
        // Σ_d [m, d]_2 · 2^{m−d} affine subspaces.
        let counts: Vec<usize> = (0..=3).map(|d| affine_subspaces(3, d).unwrap().len()).collect();
        assert_eq!(counts, vec![8, 28, 14, 1]);
    }

    #[test]
    fn balanced_gram_m1() {
        let g = balanced_lattice(1).unwrap().gram;
        let r2 = SqrtTwo::root();
        assert_eq!(g.to_rows(), vec![vec![SqrtTwo::from(2), r2.clone()], vec![r2, SqrtTwo::from(2)]]);
    }

    #[test]
    fn tensor_m2() {
        assert!(verify_tensor_decomposition(2, false).unwrap());
        assert!(!verify_tensor_decomposition(2, true).unwrap());
    }

    #[test]
    fn rational_part_is_plain() {
        for m in 1..=3 {
            assert_eq!(rational_part(&tensor_power_m1(m).unwrap()).unwrap(), plain_hnf(m).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn e8() {
        for primed in [false, true] {
            let l = barnes_wall(3, primed).unwrap();
            assert!(even_unimodular_rescaling(&l).unwrap().ok());
        }
    }
}
