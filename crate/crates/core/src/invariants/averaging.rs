//! The parabolic averaging operator `X_P(h ⊗ I)` on complete weight
//! enumerators, and the full Reynolds average of `cwe(C(m))` expressed as a
//! normalised sum over the self-dual codes containing `C`.

use serde::Serialize;

use super::{coordinates, parabolic_group, poly_hash};
use crate::codes::{
    self_dual_supercodes, self_dual_supercodes_prime, self_orthogonal_classes, supercodes_index2, AnyCode, BinaryCode,
};
use crate::enumerators::{cwe, cwe_prime};
use crate::error::{Error, Result};
use crate::exact::{RatPoly, Rational};
use crate::groups::{act, hadamard, Group, GroupSpec, ReynoldsOperator};

fn check_containing_one(code: &BinaryCode) -> Result<()> {
    if !code.is_self_orthogonal() || !code.contains_all_ones() {
        return Err(Error::invalid("expected a self-orthogonal code containing the all-ones vector"));
    }
    Ok(())
}

fn pow2(k: i32) -> Rational {
    Rational::from_int(2).pow(k)
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub code: Vec<String>,
    pub length: usize,
    pub genus: usize,
    /// `dim C = N/2 − r`.
    pub r: usize,
    pub index2_supercodes: usize,
    pub lhs_hash: String,
    pub rhs_hash: String,
    pub equal: bool,
}

/// `X_P(h ⊗ I) f` for a degree-`N` polynomial `f` in `2^m` variables.
fn parabolic_hadamard(f: &RatPoly, m: usize) -> Result<RatPoly> {
    let p = parabolic_group(m as u32)?;
    let h = hadamard(p.ring(), m)?;
    let image = act(p.ring(), &h, f)?
        .to_rational()
        .ok_or_else(|| Error::NotRational("image under h ⊗ I".into()))?;
    let degree = f.homogeneous_degree().unwrap_or(0) as usize;
    ReynoldsOperator::new(&p, degree)?.apply(&image)
}

/// `X_P(h ⊗ I) cwe(C(m)) = (2^m − 1)^{−1} [(2^{m−r} − 2^r) cwe(C(m)) + 2^{−r} Σ_{C′} cwe(C′(m))]`
/// with `C′` over the self-orthogonal codes containing `C` with index 2.
pub fn verify_averaging_lemma(code: &BinaryCode, m: usize) -> Result<LemmaReport> {
    check_containing_one(code)?;
    if m == 0 || m > 2 {
        return Err(Error::budget(format!("parabolic averaging limited to m ≤ 2, got {m}")));
    }
    let n = code.length();
    let r = n / 2 - code.dim();
    let c = cwe(code, m)?;
    let lhs = parabolic_hadamard(&c, m)?;
    let supers = supercodes_index2(code)?;
    let mut sum = RatPoly::zero(1 << m, &());
    for s in &supers {
        sum = sum.add(&cwe(s, m)?)?;
    }
    let (m_, r_) = (m as i32, r as i32);
    let rhs = c
        .scale(&(pow2(m_ - r_) - pow2(r_)))
        .add(&sum.scale(&pow2(-r_)))?
        .scale(&Rational::from_int((1i64 << m) - 1).recip()?);
    Ok(LemmaReport {
        code: code.to_strings(),
        length: n,
        genus: m,
        r,
        index2_supercodes: supers.len(),
        lhs_hash: poly_hash(&lhs),
        rhs_hash: poly_hash(&rhs),
        equal: lhs == rhs,
    })
}

/// Which group the Reynolds average is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// `𝒞_m` and self-dual supercodes.
    Real,
    /// `𝒳_m` and doubly-even self-dual supercodes.
    Complex,
    /// `𝒞_m^(p)` and self-dual supercodes over 𝔽_p.
    OddPrime,
}

/// Index range of the normalising product `∏ (q^m + q^i)^{−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProductRange {
    /// `1 ≤ i ≤ r`
    #[serde(rename = "1<=i<=r")]
    OneToR,
    /// `0 ≤ i < r`
    #[serde(rename = "0<=i<r")]
    ZeroToRMinusOne,
}

impl ProductRange {
    fn indices(self, r: usize) -> std::ops::Range<usize> {
        match self {
            ProductRange::OneToR => 1..r + 1,
            ProductRange::ZeroToRMinusOne => 0..r,
        }
    }

    fn other(self) -> Self {
        match self {
            ProductRange::OneToR => ProductRange::ZeroToRMinusOne,
            ProductRange::ZeroToRMinusOne => ProductRange::OneToR,
        }
    }

    /// The product range in the averaging formula of each variant.
    pub fn stated(variant: Variant) -> Self {
        match variant {
            Variant::Real => ProductRange::OneToR,
            Variant::Complex | Variant::OddPrime => ProductRange::ZeroToRMinusOne,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AveragingReport {
    pub variant: Variant,
    pub code: Vec<String>,
    pub p: u32,
    pub length: usize,
    pub genus: usize,
    pub r: usize,
    pub self_dual_supercodes: usize,
    pub stated_range: ProductRange,
    pub lhs_hash: String,
    pub rhs_hash: String,
    /// Equality with the product range as stated for this variant.
    pub equal: bool,
    pub alternative_range: ProductRange,
    pub alternative_equal: bool,
    /// The range that reproduces the Reynolds average, if exactly one does.
    pub matching_range: Option<ProductRange>,
}

fn normaliser(q: i64, m: usize, range: ProductRange, r: usize) -> Result<Rational> {
    let qm = Rational::from_int(q).pow(m as i32);
    range.indices(r).try_fold(Rational::one(), |acc, i| {
        Ok(acc * (qm.clone() + Rational::from_int(q).pow(i as i32)).recip()?)
    })
}

/// Compares the Reynolds average of `cwe(C(m))` over the full group with
/// `∏ (q^m + q^i)^{−1} Σ_{C′ ⊇ C self-dual} cwe(C′(m))`, for both product ranges.
pub fn verify_averaging_theorem(code: &AnyCode, m: usize, variant: Variant) -> Result<AveragingReport> {
    let (spec, length, dim, p, generators, enumerator, supers) = match (code, variant) {
        (AnyCode::Binary(c), Variant::Real | Variant::Complex) => {
            check_containing_one(c)?;
            let doubly_even = variant == Variant::Complex;
            if doubly_even && !c.is_doubly_even() {
                return Err(Error::invalid("the complex average needs a doubly-even code"));
            }
            if m == 0 || m > 2 {
                return Err(Error::budget(format!("full closure limited to m ≤ 2, got {m}")));
            }
            let spec = if doubly_even { GroupSpec::complex(m as u32) } else { GroupSpec::real(m as u32) };
            let supers = self_dual_supercodes(c, doubly_even)?
                .iter()
                .map(|s| cwe(s, m))
                .collect::<Result<Vec<_>>>()?;
            (spec, c.length(), c.dim(), 2u32, c.to_strings(), cwe(c, m)?, supers)
        }
        (AnyCode::Prime(c), Variant::OddPrime) => {
            if !c.is_self_orthogonal() || !c.contains_all_ones() {
                return Err(Error::invalid("expected a self-orthogonal code containing the all-ones vector"));
            }
            if m != 1 {
                return Err(Error::budget(format!("odd-prime closure limited to m = 1, got {m}")));
            }
            let supers = self_dual_supercodes_prime(c)?
                .iter()
                .map(|s| cwe_prime(s, m))
                .collect::<Result<Vec<_>>>()?;
            let p = c.p() as u32;
            (GroupSpec::odd_prime(p, m as u32), c.length(), c.dim(), p, c.to_strings(), cwe_prime(c, m)?, supers)
        }
        _ => return Err(Error::invalid("variant does not match the code's alphabet")),
    };
    if length % 2 == 1 {
        return Err(Error::invalid("odd length has no self-dual supercodes"));
    }
    let r = length / 2 - dim;
    let group = Group::cached(spec)?;
    let lhs = ReynoldsOperator::new(&group, length)?.apply(&enumerator)?;
    let mut sum = RatPoly::zero(enumerator.num_vars(), &());
    for s in &supers {
        sum = sum.add(s)?;
    }
    let stated = ProductRange::stated(variant);
    let alternative = stated.other();
    let rhs = sum.scale(&normaliser(p as i64, m, stated, r)?);
    let rhs_alt = sum.scale(&normaliser(p as i64, m, alternative, r)?);
    let equal = lhs == rhs;
    let alternative_equal = lhs == rhs_alt;
    Ok(AveragingReport {
        variant,
        code: generators,
        p,
        length,
        genus: m,
        r,
        self_dual_supercodes: supers.len(),
        stated_range: stated,
        lhs_hash: poly_hash(&lhs),
        rhs_hash: poly_hash(&rhs),
        equal,
        alternative_range: alternative,
        alternative_equal,
        matching_range: match (equal, alternative_equal) {
            (true, false) => Some(stated),
            (false, true) => Some(alternative),
            _ => None,
        },
    })
}

/// The matrix of `X_P(h ⊗ I)` in the basis of `cwe(C(m))` over classes of
/// self-orthogonal codes containing `1`.
#[derive(Clone, Debug, Serialize)]
pub struct TriangularReport {
    pub length: usize,
    pub genus: usize,
    pub classes: usize,
    /// `(dim C, diagonal entry)` per class.
    pub diagonal: Vec<(usize, String)>,
    pub diagonal_matches: bool,
    /// Off-diagonal entries only on classes one dimension up.
    pub triangular: bool,
    /// The diagonal entry is 1 exactly for the self-dual classes.
    pub unit_iff_self_dual: bool,
}

impl TriangularReport {
    pub fn ok(&self) -> bool {
        self.diagonal_matches && self.triangular && self.unit_iff_self_dual
    }
}

/// Needs `N/2 ≤ m + 1`, so that the enumerators of all classes are a basis.
pub fn verify_triangular(n: usize, m: usize) -> Result<TriangularReport> {
    if n % 2 == 1 || n / 2 > m + 1 {
        return Err(Error::invalid(format!("triangular check needs even N ≤ 2m + 2, got N = {n}, m = {m}")));
    }
    let classes: Vec<BinaryCode> = self_orthogonal_classes(n, n / 2, false)?
        .into_iter()
        .flatten()
        .map(|c| c.representative)
        .collect();
    let basis = classes.iter().map(|c| cwe(c, m)).collect::<Result<Vec<_>>>()?;
    let mut diagonal = Vec::new();
    let mut diagonal_matches = true;
    let mut triangular = true;
    let mut unit_iff_self_dual = true;
    for (i, c) in classes.iter().enumerate() {
        let image = parabolic_hadamard(&basis[i], m)?;
        let coords = coordinates(&basis, &image)?.ok_or_else(|| Error::invalid("image outside the enumerator span"))?;
        let r = (n / 2 - c.dim()) as i32;
        let expected = (pow2(m as i32 - r) - pow2(r)) * Rational::from_int((1i64 << m) - 1).recip()?;
        diagonal_matches &= coords[i] == expected;
        unit_iff_self_dual &= coords[i].is_one() == (r == 0);
        triangular &= coords
            .iter()
            .enumerate()
            .all(|(j, x)| j == i || x.is_zero() || classes[j].dim() == c.dim() + 1);
        diagonal.push((c.dim(), coords[i].to_string()));
    }
    Ok(TriangularReport {
        length: n,
        genus: m,
        classes: classes.len(),
        diagonal,
        diagonal_matches,
        triangular,
        unit_iff_self_dual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::hamming8;

    #[test]
    fn lemma_self_dual_is_trivial() {
        let rep = verify_averaging_lemma(&hamming8(), 1).unwrap();
        assert_eq!(rep.r, 0);
        assert!(rep.equal);
    }

    #[test]
    fn lemma_length_four() {
        let rep = verify_averaging_lemma(&BinaryCode::repetition(4), 1).unwrap();
        assert_eq!(rep.index2_supercodes, 3);
        assert!(rep.equal);
    }

    #[test]
    fn theorem_length_four() {
        let rep = verify_averaging_theorem(&AnyCode::Binary(BinaryCode::repetition(4)), 1, Variant::Real).unwrap();
        assert_eq!(rep.r, 1);
        assert!(rep.equal, "{rep:?}");
    }

    #[test]
    fn triangular_small() {
        assert!(verify_triangular(4, 1).unwrap().ok());
    }
}
