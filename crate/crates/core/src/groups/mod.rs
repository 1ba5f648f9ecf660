//! The real Clifford groups 𝒞_m, the complex Clifford groups 𝒳_m, the odd-prime
//! groups 𝒞_m^(p) and their extraspecial subgroups.
//!
//! Basis vectors of `(ℝ^p)^{⊗m}` are indexed by `v ∈ 𝔽_p^m` read big-endian,
//! `index = Σ v_i p^{m−i}`, so slot 1 is the most significant digit and
//! `A ⊗ I` acts on `v_1`. Matrices act on polynomials by
//! `(g·f)(x) = f(gᵗx)`: the variable `x_i` is replaced by column `i` of `g`.

mod compact;
mod generators;
mod group;
mod molien;
mod reynolds;

use num_integer::gcd;
use serde::{Deserialize, Serialize};

pub use compact::{compact_from_cyclotomic, is_unitary, CompactMatrix, Ring, RingKind};
pub use generators::{digits, from_digits, generators, hadamard, sqrt_p};
pub use group::{group_closure, Group, DEFAULT_MAX_ORDER};
pub use molien::{extraspecial_molien_formula, molien_series, molien_series_of_elements};
pub use reynolds::{act, invariant_space, is_invariant, reynolds_average, ReynoldsOperator, DEFAULT_MONOMIAL_BUDGET};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    RealClifford,
    ComplexClifford,
    OddPrimeClifford,
    Extraspecial,
    ExtraspecialP,
}

/// Which group, in which genus and characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub m: u32,
    pub p: u32,
}

impl GroupSpec {
    pub fn real(m: u32) -> Self {
        GroupSpec { kind: GroupKind::RealClifford, m, p: 2 }
    }

    pub fn complex(m: u32) -> Self {
        GroupSpec { kind: GroupKind::ComplexClifford, m, p: 2 }
    }

    pub fn odd_prime(p: u32, m: u32) -> Self {
        GroupSpec { kind: GroupKind::OddPrimeClifford, m, p }
    }

    pub fn extraspecial(m: u32) -> Self {
        GroupSpec { kind: GroupKind::Extraspecial, m, p: 2 }
    }

    pub fn extraspecial_p(p: u32, m: u32) -> Self {
        GroupSpec { kind: GroupKind::ExtraspecialP, m, p }
    }

    pub fn dim(&self) -> usize {
        (self.p as usize).pow(self.m)
    }

    pub fn is_odd_prime(&self) -> bool {
        matches!(self.kind, GroupKind::OddPrimeClifford | GroupKind::ExtraspecialP)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::invalid("genus m must be at least 1"));
        }
        if self.is_odd_prime() {
            if self.p != 3 && self.p != 5 {
                return Err(Error::unsupported(format!("odd prime p = {} (supported: 3, 5)", self.p)));
            }
        } else if self.p != 2 {
            return Err(Error::invalid(format!("{:?} requires p = 2", self.kind)));
        }
        if self.dim() > 64 {
            return Err(Error::budget(format!("dimension {} exceeds 64", self.dim())));
        }
        Ok(())
    }

    /// Integral ring holding the scaled matrix entries.
    pub fn ring(&self) -> Result<Ring> {
        match self.kind {
            GroupKind::RealClifford | GroupKind::Extraspecial => Ok(Ring::sqrt2()),
            GroupKind::ComplexClifford => Ring::cyclotomic(8),
            GroupKind::OddPrimeClifford | GroupKind::ExtraspecialP => Ring::cyclotomic(4 * self.p),
        }
    }
}

fn checked_pow(b: u128, e: u32) -> Result<u128> {
    b.checked_pow(e).ok_or_else(|| Error::budget("order does not fit in 128 bits"))
}

/// Order from the structure formulas: real `2^{m²+m+2}(2^m−1)∏_{j<m}(4^j−1)`,
/// complex `2^{2m+3}·2^{m²}·∏_{j≤m}(4^j−1)`, extraspecial `2^{1+2m}`.
pub fn predicted_order(spec: &GroupSpec) -> Result<u128> {
    spec.validate()?;
    let m = spec.m;
    match spec.kind {
        GroupKind::RealClifford => {
            let mut o = checked_pow(2, m * m + m + 2)? * (checked_pow(2, m)? - 1);
            for j in 1..m {
                o *= checked_pow(4, j)? - 1;
            }
            Ok(o)
        }
        GroupKind::ComplexClifford => {
            let mut o = checked_pow(2, 2 * m + 3 + m * m)?;
            for j in 1..=m {
                o *= checked_pow(4, j)? - 1;
            }
            Ok(o)
        }
        GroupKind::Extraspecial => checked_pow(2, 1 + 2 * m),
        GroupKind::OddPrimeClifford | GroupKind::ExtraspecialP => Err(Error::unsupported(
            "no closed order formula is claimed for odd p; use structure_order",
        )),
    }
}

/// Order of `Z_a × p^{1+2m}.Sp(2m,p)` with `a = gcd(p+1, 4)`, or `p^{1+2m}` for
/// the extraspecial group.
pub fn structure_order(spec: &GroupSpec) -> Result<u128> {
    spec.validate()?;
    let (p, m) = (spec.p as u128, spec.m);
    match spec.kind {
        GroupKind::OddPrimeClifford => {
            let a = gcd(p + 1, 4);
            let mut o = a * checked_pow(p, 1 + 2 * m)? * checked_pow(p, m * m)?;
            for i in 1..=m {
                o *= checked_pow(p, 2 * i)? - 1;
            }
            Ok(o)
        }
        GroupKind::ExtraspecialP => checked_pow(p, 1 + 2 * m),
        _ => predicted_order(spec),
    }
}

/// A `{0,1}`-valued quadratic form `q(v) = Σ_{i≤j} Q_ij v_i v_j` on 𝔽_2^m.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticFormF2 {
    m: usize,
    /// Upper-triangular coefficients, `q[i][j]` for `i ≤ j`.
    q: Vec<Vec<bool>>,
}

impl QuadraticFormF2 {
    pub fn new(m: usize, upper: Vec<Vec<bool>>) -> Result<Self> {
        if upper.len() != m || upper.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch { expected: m, got: upper.len() });
        }
        let q = (0..m)
            .map(|i| (0..m).map(|j| j >= i && upper[i][j]).collect())
            .collect();
        Ok(QuadraticFormF2 { m, q })
    }

    /// The form `v_i v_j` (or `v_i` when `i = j`).
    pub fn product(m: usize, i: usize, j: usize) -> Self {
        let (i, j) = (i.min(j), i.max(j));
        let mut q = vec![vec![false; m]; m];
        q[i][j] = true;
        QuadraticFormF2 { m, q }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Evaluates at the vector with big-endian index `v`.
    pub fn eval(&self, v: usize) -> u8 {
        let bits = digits(v, 2, self.m);
        let mut s = 0;
        for i in 0..self.m {
            for j in i..self.m {
                if self.q[i][j] {
                    s ^= bits[i] & bits[j];
                }
            }
        }
        s as u8
    }

    /// `b_q(x, y) = q(x+y) − q(x) − q(y)` over 𝔽_2.
    pub fn bilinear(&self, x: usize, y: usize) -> u8 {
        self.eval(x ^ y) ^ self.eval(x) ^ self.eval(y)
    }

    /// `diag((−1)^{q(v)+a})` in the given ring.
    pub fn diagonal_matrix(&self, ring: &Ring, a: u8) -> CompactMatrix {
        let dim = 1usize << self.m;
        let minus = ring.root_of_unity(match ring.kind() {
            RingKind::SqrtTwo => 1,
            RingKind::Cyclotomic(n) => n as i64 / 2,
        });
        let phases: Vec<Vec<i64>> = (0..dim)
            .map(|v| if (self.eval(v) ^ a) & 1 == 1 { minus.clone() } else { ring.one() })
            .collect();
        let perm: Vec<usize> = (0..dim).collect();
        CompactMatrix::monomial(ring, &perm, &phases)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_formulas() {
        assert_eq!(predicted_order(&GroupSpec::real(1)).unwrap(), 16);
        assert_eq!(predicted_order(&GroupSpec::real(2)).unwrap(), 2304);
        assert_eq!(predicted_order(&GroupSpec::real(3)).unwrap(), 5_160_960);
        assert_eq!(predicted_order(&GroupSpec::complex(1)).unwrap(), 192);
        assert_eq!(predicted_order(&GroupSpec::complex(2)).unwrap(), 92_160);
        assert_eq!(predicted_order(&GroupSpec::complex(3)).unwrap(), 743_178_240);
        assert_eq!(predicted_order(&GroupSpec::extraspecial(2)).unwrap(), 32);
        assert!(predicted_order(&GroupSpec::odd_prime(3, 1)).is_err());
        assert_eq!(structure_order(&GroupSpec::odd_prime(3, 1)).unwrap(), 2592);
        assert_eq!(structure_order(&GroupSpec::odd_prime(5, 1)).unwrap(), 30_000);
    }

    #[test]
    fn quadratic_form_bilinear_is_alternating() {
        let q = QuadraticFormF2::new(3, vec![vec![true, true, false], vec![false, false, true], vec![false, false, true]]).unwrap();
        for x in 0..8 {
            assert_eq!(q.bilinear(x, x), 0);
            for y in 0..8 {
                assert_eq!(q.bilinear(x, y), q.bilinear(y, x));
            }
        }
    }
}
