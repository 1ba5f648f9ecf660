//! Membership of Clifford-group generators in the automorphism group of the
//! balanced lattice, and the ℤ-span of the group in the lattice basis.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::{balanced_lattice, flatten, zsqrt2_builder};
use crate::error::{Error, Result};
use crate::exact::hnf::HnfBuilder;
use crate::exact::{Cyclotomic, Matrix, Rational, SqrtTwo};
use crate::groups::{generators, is_unitary, Group, GroupKind, GroupSpec};

#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismReport {
    pub m: usize,
    pub group: String,
    pub generators: usize,
    /// Generators mapping every basis vector back into the lattice.
    pub stabilizing: usize,
    pub orthogonal: bool,
}

impl AutomorphismReport {
    pub fn ok(&self) -> bool {
        self.orthogonal && self.stabilizing == self.generators
    }
}

/// Whether `g` maps every basis vector of `M_m` into `M_m`.
pub fn stabilizes_balanced(m: usize, g: &Matrix<SqrtTwo>) -> Result<bool> {
    let lattice = balanced_lattice(m)?;
    let builder = zsqrt2_builder(&lattice.basis)?;
    image_in(&builder, &lattice.basis, g)
}

fn image_in(builder: &HnfBuilder, basis: &[Vec<SqrtTwo>], g: &Matrix<SqrtTwo>) -> Result<bool> {
    for b in basis {
        match flatten(&g.apply(b)?) {
            Some(v) if builder.contains(&v) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Every generator of `𝒞_m` stabilises `M_m` and is orthogonal.
pub fn verify_automorphism_membership(m: usize) -> Result<AutomorphismReport> {
    if m == 0 || m > 3 {
        return Err(Error::budget(format!("automorphism membership checked for 1 ≤ m ≤ 3, got {m}")));
    }
    let spec = GroupSpec::real(m as u32);
    let ring = spec.ring()?;
    let gens = generators(&spec, &ring)?;
    let lattice = balanced_lattice(m)?;
    let builder = zsqrt2_builder(&lattice.basis)?;
    let mut stabilizing = 0;
    for g in &gens {
        if image_in(&builder, &lattice.basis, &g.to_sqrt2_matrix(&ring)?)? {
            stabilizing += 1;
        }
    }
    Ok(AutomorphismReport {
        m,
        group: format!("real Clifford m={m}"),
        generators: gens.len(),
        stabilizing,
        orthogonal: gens.iter().all(|g| is_unitary(&ring, g)),
    })
}

fn flatten_cyclotomic(v: &[Cyclotomic]) -> Option<Vec<BigInt>> {
    let mut out = Vec::with_capacity(4 * v.len());
    for x in v {
        for q in x.coeffs() {
            out.push(q.is_integer().then(|| q.numer().clone())?);
        }
    }
    Some(out)
}

/// Every generator of `𝒳_m` stabilises `ℤ[ζ_8] ⊗ M_m` and is unitary.
pub fn verify_complex_automorphism_membership(m: usize) -> Result<AutomorphismReport> {
    if m == 0 || m > 2 {
        return Err(Error::budget(format!("complex membership checked for 1 ≤ m ≤ 2, got {m}")));
    }
    let spec = GroupSpec::complex(m as u32);
    let ring = spec.ring()?;
    let gens = generators(&spec, &ring)?;
    let basis: Vec<Vec<Cyclotomic>> = balanced_lattice(m)?
        .basis
        .iter()
        .map(|r| r.iter().map(Cyclotomic::from_sqrt_two).collect())
        .collect();
    let n = 1usize << m;
    let mut builder = HnfBuilder::new(4 * n);
    for b in &basis {
        for k in 0..4 {
            let z = Cyclotomic::zeta_pow(8, k)?;
            let v: Vec<Cyclotomic> = b.iter().map(|x| x.try_mul(&z)).collect::<Result<_>>()?;
            builder.insert(flatten_cyclotomic(&v).ok_or_else(|| Error::invalid("basis not integral"))?);
        }
    }
    let mut stabilizing = 0;
    for g in &gens {
        let gm = g.to_cyclotomic_matrix(&ring);
        let mut all = true;
        for b in &basis {
            match flatten_cyclotomic(&gm.apply(b)?) {
                Some(v) if builder.contains(&v) => {}
                _ => {
                    all = false;
                    break;
                }
            }
        }
        stabilizing += all as usize;
    }
    Ok(AutomorphismReport {
        m,
        group: format!("complex Clifford m={m}"),
        generators: gens.len(),
        stabilizing,
        orthogonal: gens.iter().all(|g| is_unitary(&ring, g)),
    })
}

/// The rotation `[[3/5, −4/5], [4/5, 3/5]]`: orthogonal with entries in ℚ(√2)
/// but not an automorphism of `M_1`.
pub fn rotation_345() -> Matrix<SqrtTwo> {
    let q = |n: i64| SqrtTwo::rational(Rational::frac(n, 5));
    Matrix::from_rows(vec![vec![q(3), q(-4)], vec![q(4), q(3)]], &()).expect("square")
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanReport {
    pub m: usize,
    pub group: String,
    pub elements: usize,
    pub rank: usize,
    pub full_rank: bool,
    /// Index of the span in `ℤ[√2]^{n×n}` when of full rank.
    pub index: Option<String>,
    pub maximal: bool,
}

/// Whether the ℤ-span of the group's matrices, written in a ℤ[√2]-basis of
/// `M_m`, is all of `ℤ[√2]^{n×n}`.
pub fn verify_span_maximal_order(group: &Group) -> Result<SpanReport> {
    let spec = group.spec();
    if !matches!(spec.kind, GroupKind::RealClifford | GroupKind::Extraspecial) {
        return Err(Error::unsupported("span check applies to real groups acting on the balanced lattice"));
    }
    let m = spec.m as usize;
    if m < 2 {
        return Err(Error::invalid("the maximal-order span is not claimed for m = 1"));
    }
    let ring = group.ring();
    let basis = balanced_lattice(m)?.basis;
    let b = Matrix::from_rows(basis, &())?;
    let b_inv = b.inverse()?;
    let n = 1usize << m;
    let mut builder = HnfBuilder::new(2 * n * n);
    let elements = group.elements()?;
    for g in &elements {
        // Row `i` holds the coordinates of `g·b_i` in the basis `b_j`.
        let a = b.mul(&g.to_sqrt2_matrix(ring)?.transpose())?.mul(&b_inv)?;
        let flat = flatten(a.entries()).ok_or_else(|| Error::invalid("group element not integral on the lattice"))?;
        builder.insert(flat);
    }
    let rank = builder.rank();
    let full_rank = rank == 2 * n * n;
    let index = full_rank.then(|| builder.pivot_product());
    Ok(SpanReport {
        m,
        group: format!("{:?} m={m}", spec.kind),
        elements: elements.len(),
        rank,
        full_rank,
        maximal: index.as_ref().is_some_and(|i| i.is_one()),
        index: index.map(|i| i.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_m1() {
        assert!(verify_automorphism_membership(1).unwrap().ok());
        assert!(!stabilizes_balanced(1, &rotation_345()).unwrap());
        assert!(rotation_345().is_unitary());
    }

    #[test]
    fn span_m1_is_rejected() {
        let g = Group::new(GroupSpec::real(1)).unwrap();
        assert!(matches!(verify_span_maximal_order(&g), Err(Error::InvalidInput(_))));
    }
}
