use super::compact::{CompactMatrix, Ring};
use super::{GroupKind, GroupSpec};
use crate::error::{Error, Result};

/// Digits of `index` in base `p`, most significant (slot 1) first.
pub fn digits(index: usize, p: usize, m: usize) -> Vec<usize> {
    let mut d = vec![0; m];
    let mut x = index;
    for slot in d.iter_mut().rev() {
        *slot = x % p;
        x /= p;
    }
    d
}

pub fn from_digits(d: &[usize], p: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * p + x)
}

/// `A` acting on tensor slot `slot` (0 = most significant) of `(ℂ^p)^{⊗m}`.
fn on_slot(ring: &Ring, p: usize, m: usize, slot: usize, den: i64, a: &[Vec<Vec<i64>>]) -> Result<CompactMatrix> {
    let dim = p.pow(m as u32);
    let zero = vec![0; ring.rank()];
    let entries: Vec<Vec<Vec<i64>>> = (0..dim)
        .map(|u| {
            let du = digits(u, p, m);
            (0..dim)
                .map(|v| {
                    let dv = digits(v, p, m);
                    let same = (0..m).all(|t| t == slot || du[t] == dv[t]);
                    if same {
                        a[du[slot]][dv[slot]].clone()
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect();
    CompactMatrix::from_entries(ring, den, &entries)
}

fn diagonal(ring: &Ring, phases: Vec<Vec<i64>>) -> CompactMatrix {
    let perm: Vec<usize> = (0..phases.len()).collect();
    CompactMatrix::monomial(ring, &perm, &phases)
}

fn permutation(ring: &Ring, perm: &[usize]) -> CompactMatrix {
    let phases = vec![ring.one(); perm.len()];
    CompactMatrix::monomial(ring, perm, &phases)
}

/// Basis permutations `b_v ↦ b_{Av}` for the transvections `v_i += v_j` (i ≠ j).
fn transvections(ring: &Ring, p: usize, m: usize) -> Vec<CompactMatrix> {
    let dim = p.pow(m as u32);
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let perm: Vec<usize> = (0..dim)
                .map(|v| {
                    let mut d = digits(v, p, m);
                    d[i] = (d[i] + d[j]) % p;
                    from_digits(&d, p)
                })
                .collect();
            out.push(permutation(ring, &perm));
        }
    }
    out
}

fn sigma1(ring: &Ring) -> Vec<Vec<Vec<i64>>> {
    let (o, z) = (ring.one(), vec![0; ring.rank()]);
    vec![vec![z.clone(), o.clone()], vec![o, z]]
}

fn sigma2(ring: &Ring) -> Vec<Vec<Vec<i64>>> {
    let (o, z) = (ring.one(), vec![0; ring.rank()]);
    let mo: Vec<i64> = o.iter().map(|x| -x).collect();
    vec![vec![o, z.clone()], vec![z, mo]]
}

/// σ₁ and σ₂ in every tensor slot, `2m` matrices in total.
pub fn extraspecial(ring: &Ring, m: usize) -> Result<Vec<CompactMatrix>> {
    let mut out = Vec::with_capacity(2 * m);
    for slot in 0..m {
        out.push(on_slot(ring, 2, m, slot, 1, &sigma1(ring))?);
        out.push(on_slot(ring, 2, m, slot, 1, &sigma2(ring))?);
    }
    Ok(out)
}

/// `h ⊗ I_{2^{m−1}}` with `h = (1/√2)[[1, 1], [1, −1]]`.
pub fn hadamard(ring: &Ring, m: usize) -> Result<CompactMatrix> {
    let s = ring.sqrt2_coords()?;
    let ms: Vec<i64> = s.iter().map(|x| -x).collect();
    on_slot(ring, 2, m, 0, 2, &[vec![s.clone(), s.clone()], vec![s, ms]])
}

/// σ₁⊗I, σ₂⊗I, h⊗I, the GL(m,2) transvections and `diag((−1)^{v₁v₂})`.
pub fn real_clifford(ring: &Ring, m: usize) -> Result<Vec<CompactMatrix>> {
    let mut out = vec![
        on_slot(ring, 2, m, 0, 1, &sigma1(ring))?,
        on_slot(ring, 2, m, 0, 1, &sigma2(ring))?,
        hadamard(ring, m)?,
    ];
    out.extend(transvections(ring, 2, m));
    if m >= 2 {
        let dim = 1usize << m;
        let phases = (0..dim)
            .map(|v| {
                let d = digits(v, 2, m);
                ring.root_of_unity((d[0] * d[1]) as i64 * ring_half(ring))
            })
            .collect();
        out.push(diagonal(ring, phases));
    }
    Ok(out)
}

/// Exponent `k` with `ζ^k = −1` in the ring's root-of-unity convention.
fn ring_half(ring: &Ring) -> i64 {
    match ring.kind() {
        super::compact::RingKind::SqrtTwo => 1,
        super::compact::RingKind::Cyclotomic(n) => n as i64 / 2,
    }
}

/// The real generators plus `diag(1, i)⊗I` and `ζ_8 I`.
pub fn complex_clifford(ring: &Ring, m: usize) -> Result<Vec<CompactMatrix>> {
    if ring.conductor() != 8 || ring.rank() != 4 {
        return Err(Error::ConductorMismatch(8, ring.conductor()));
    }
    let mut out = real_clifford(ring, m)?;
    let z = vec![0; 4];
    let s = vec![vec![ring.one(), z.clone()], vec![z, ring.root_of_unity(2)]];
    out.push(on_slot(ring, 2, m, 0, 1, &s)?);
    let dim = 1usize << m;
    out.push(diagonal(ring, vec![ring.root_of_unity(1); dim]));
    Ok(out)
}

/// Coordinates of `√p` in ℤ[ζ_{4p}] via the quadratic Gauss sum.
pub fn sqrt_p(ring: &Ring, p: usize) -> Vec<i64> {
    let mut g = vec![0; ring.rank()];
    for x in 0..p {
        for (a, b) in g.iter_mut().zip(ring.root_of_unity(4 * (x * x) as i64)) {
            *a += b;
        }
    }
    if p % 4 == 1 {
        g
    } else {
        // g = i√p, so √p = −i·g = ζ^{3p}·g.
        ring.mul(&ring.root_of_unity(3 * p as i64), &g)
    }
}

fn check_odd_prime(ring: &Ring, p: usize) -> Result<()> {
    if p != 3 && p != 5 {
        return Err(Error::unsupported(format!("odd prime p = {p} (supported: 3, 5)")));
    }
    if ring.conductor() as usize != 4 * p {
        return Err(Error::ConductorMismatch(4 * p as u32, ring.conductor()));
    }
    Ok(())
}

/// X and Z in every tensor slot.
pub fn extraspecial_p(ring: &Ring, p: usize, m: usize) -> Result<Vec<CompactMatrix>> {
    check_odd_prime(ring, p)?;
    let mut out = Vec::with_capacity(2 * m);
    for slot in 0..m {
        out.push(on_slot(ring, p, m, slot, 1, &shift(ring, p))?);
        out.push(on_slot(ring, p, m, slot, 1, &clock(ring, p))?);
    }
    Ok(out)
}

fn shift(ring: &Ring, p: usize) -> Vec<Vec<Vec<i64>>> {
    let z = vec![0; ring.rank()];
    (0..p)
        .map(|u| (0..p).map(|v| if u == (v + 1) % p { ring.one() } else { z.clone() }).collect())
        .collect()
}

fn clock(ring: &Ring, p: usize) -> Vec<Vec<Vec<i64>>> {
    let z = vec![0; ring.rank()];
    (0..p)
        .map(|u| {
            (0..p)
                .map(|v| if u == v { ring.root_of_unity(4 * u as i64) } else { z.clone() })
                .collect()
        })
        .collect()
}

/// X, Z, the Fourier matrix, `diag(ζ_p^{x²})` (all in slot 1), GL(m,p)
/// transvections, a primitive-root scaling and `ζ_a I`.
pub fn odd_prime_clifford(ring: &Ring, p: usize, m: usize) -> Result<Vec<CompactMatrix>> {
    check_odd_prime(ring, p)?;
    let mut out = extraspecial_p(ring, p, m)?;
    out.truncate(2);
    let sp = sqrt_p(ring, p);
    let fourier: Vec<Vec<Vec<i64>>> = (0..p)
        .map(|x| {
            (0..p)
                .map(|y| ring.mul(&sp, &ring.root_of_unity(4 * (x * y) as i64)))
                .collect()
        })
        .collect();
    out.push(on_slot(ring, p, m, 0, p as i64, &fourier)?);
    let z = vec![0; ring.rank()];
    let phase: Vec<Vec<Vec<i64>>> = (0..p)
        .map(|x| {
            (0..p)
                .map(|y| if x == y { ring.root_of_unity(4 * (x * x) as i64) } else { z.clone() })
                .collect()
        })
        .collect();
    out.push(on_slot(ring, p, m, 0, 1, &phase)?);
    out.extend(transvections(ring, p, m));
    let dim = p.pow(m as u32);
    let g = 2; // primitive root mod 3 and mod 5
    let scaling: Vec<usize> = (0..dim)
        .map(|v| {
            let mut d = digits(v, p, m);
            d[0] = d[0] * g % p;
            from_digits(&d, p)
        })
        .collect();
    out.push(permutation(ring, &scaling));
    let a = num_integer::gcd(p + 1, 4);
    let n = ring.conductor() as i64;
    out.push(diagonal(ring, vec![ring.root_of_unity(n / a as i64); dim]));
    Ok(out)
}

/// Generators for the group described by `spec`, in the ring of `spec.ring()`.
pub fn generators(spec: &GroupSpec, ring: &Ring) -> Result<Vec<CompactMatrix>> {
    let m = spec.m as usize;
    let p = spec.p as usize;
    match spec.kind {
        GroupKind::RealClifford => real_clifford(ring, m),
        GroupKind::ComplexClifford => complex_clifford(ring, m),
        GroupKind::OddPrimeClifford => odd_prime_clifford(ring, p, m),
        GroupKind::Extraspecial => extraspecial(ring, m),
        GroupKind::ExtraspecialP => extraspecial_p(ring, p, m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_p_squares_to_p() {
        for p in [3usize, 5] {
            let ring = Ring::cyclotomic(4 * p as u32).unwrap();
            let s = sqrt_p(&ring, p);
            let mut expect = vec![0; ring.rank()];
            expect[0] = p as i64;
            assert_eq!(ring.mul(&s, &s), expect, "p = {p}");
            let (re, im) = ring.to_complex(&s);
            assert!((re - (p as f64).sqrt()).abs() < 1e-12 && im.abs() < 1e-12);
        }
    }

    #[test]
    fn slot_layout_matches_kron() {
        let ring = Ring::sqrt2();
        let g = on_slot(&ring, 2, 2, 0, 1, &sigma1(&ring)).unwrap();
        // σ₁ ⊗ I sends b_{00} to b_{10}, i.e. index 0 to index 2.
        assert_eq!(g.monomial_rows().unwrap(), vec![2, 3, 0, 1]);
    }
}
