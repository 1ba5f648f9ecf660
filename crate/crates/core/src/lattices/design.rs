//! Spherical-design tests on orbits of the real Clifford group.
//!
//! A finite set `X` on the unit sphere in ℝ^n is a `t`-design exactly when,
//! for every monomial `x^α` of degree at most `t`, the average over `X`
//! equals the sphere average `∏(α_i − 1)!! / (n(n+2)⋯(n+|α|−2))` (zero if
//! some `α_i` is odd). The orbit is built point by point from the generators,
//! so no group closure is needed.

use std::collections::{HashSet, VecDeque};

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{monomials_of_degree, Exponent, Matrix, RatPoly, Rational, SqrtTwo};
use crate::groups::{generators, Group, GroupSpec};
use crate::invariants::harmonic_invariants;

/// Largest orbit the design test will build.
pub const MAX_ORBIT: usize = 500_000;

/// Residuals below this count as zero in floating point.
pub const TOLERANCE: f64 = 1e-9;

/// Which point's orbit is tested.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointMode {
    /// `b_0`, the direction of a minimal vector `√2^m b_0` of `M_m`.
    MinimalVector,
    /// A Gaussian point drawn with the given seed.
    RandomSphere { seed: u64 },
    Explicit(Vec<f64>),
    /// A common zero of the harmonic invariants of degrees 8 and 12 (`m = 2`),
    /// found by Newton iteration from seeded starting points.
    CommonZero { seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct DesignReport {
    pub m: usize,
    pub mode: PointMode,
    pub point: Vec<f64>,
    pub orbit_size: usize,
    pub tolerance: f64,
    /// Largest moment residual for each degree `1..=max_degree`.
    pub residuals: Vec<f64>,
    /// Largest `t` such that every degree `1..=t` passes.
    pub strength: usize,
    /// The same residuals computed exactly, for the minimal-vector orbit with `m ≤ 2`.
    pub exact_residuals: Option<Vec<f64>>,
    pub float_exact_agree: Option<bool>,
}

fn double_factorial_odd(k: u16) -> u64 {
    // (k − 1)!! for even k.
    (1..k as u64).step_by(2).product()
}

/// Average of `x^α` over the unit sphere in ℝ^n.
pub fn sphere_moment(alpha: &[u16]) -> Rational {
    if alpha.iter().any(|&a| a % 2 == 1) {
        return Rational::zero();
    }
    let n = alpha.len() as i64;
    let t: i64 = alpha.iter().map(|&a| a as i64).sum();
    let num: Rational = alpha.iter().map(|&a| Rational::from(double_factorial_odd(a) as i64)).fold(Rational::one(), |x, y| x * y);
    let den = (0..t / 2).fold(Rational::one(), |acc, k| acc * Rational::from(n + 2 * k));
    num * den.recip().expect("positive")
}

type FloatMatrix = Vec<Vec<f64>>;

fn real_generators(m: usize) -> Result<(Vec<FloatMatrix>, Vec<Matrix<SqrtTwo>>)> {
    let spec = GroupSpec::real(m as u32);
    let ring = spec.ring()?;
    let gens = generators(&spec, &ring)?;
    let float = gens.iter().map(|g| g.to_f64(&ring)).collect();
    let exact = gens.iter().map(|g| g.to_sqrt2_matrix(&ring)).collect::<Result<_>>()?;
    Ok((float, exact))
}

fn float_orbit(gens: &[Vec<Vec<f64>>], x: &[f64]) -> Result<Vec<Vec<f64>>> {
    let key = |v: &[f64]| -> Vec<i64> { v.iter().map(|t| (t * 1e7).round() as i64).collect() };
    let mut seen = HashSet::from([key(x)]);
    let mut out = vec![x.to_vec()];
    let mut queue = VecDeque::from([x.to_vec()]);
    while let Some(v) = queue.pop_front() {
        for g in gens {
            let w: Vec<f64> = g.iter().map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum()).collect();
            if seen.insert(key(&w)) {
                if out.len() >= MAX_ORBIT {
                    return Err(Error::budget(format!("orbit larger than {MAX_ORBIT}")));
                }
                out.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    Ok(out)
}

fn exact_orbit(gens: &[Matrix<SqrtTwo>], x: &[SqrtTwo]) -> Result<Vec<Vec<SqrtTwo>>> {
    let mut seen = HashSet::from([x.to_vec()]);
    let mut out = vec![x.to_vec()];
    let mut queue = VecDeque::from([x.to_vec()]);
    while let Some(v) = queue.pop_front() {
        for g in gens {
            let w = g.apply(&v)?;
            if seen.insert(w.clone()) {
                if out.len() >= MAX_ORBIT {
                    return Err(Error::budget(format!("orbit larger than {MAX_ORBIT}")));
                }
                out.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    Ok(out)
}

fn float_residuals(orbit: &[Vec<f64>], n: usize, max_degree: usize) -> Vec<f64> {
    let size = orbit.len() as f64;
    (1..=max_degree)
        .map(|t| {
            monomials_of_degree(n, t as u16)
                .par_iter()
                .map(|alpha| {
                    let avg: f64 = orbit
                        .iter()
                        .map(|x| x.iter().zip(alpha).map(|(v, &a)| v.powi(a as i32)).product::<f64>())
                        .sum::<f64>()
                        / size;
                    (avg - sphere_moment(alpha).to_f64()).abs()
                })
                .reduce(|| 0.0, f64::max)
        })
        .collect()
}

fn exact_residuals(orbit: &[Vec<SqrtTwo>], n: usize, max_degree: usize) -> Vec<f64> {
    let size = Rational::from(orbit.len() as i64);
    let powers: Vec<Vec<Vec<SqrtTwo>>> = orbit
        .iter()
        .map(|x| {
            x.iter()
                .map(|v| {
                    let mut p = vec![SqrtTwo::one()];
                    for k in 1..=max_degree {
                        let next = &p[k - 1] * v;
                        p.push(next);
                    }
                    p
                })
                .collect()
        })
        .collect();
    (1..=max_degree)
        .map(|t| {
            monomials_of_degree(n, t as u16)
                .par_iter()
                .map(|alpha: &Exponent| {
                    let sum = powers.iter().fold(SqrtTwo::zero(), |acc, p| {
                        let term = alpha
                            .iter()
                            .enumerate()
                            .fold(SqrtTwo::one(), |m, (i, &a)| &m * &p[i][a as usize]);
                        &acc + &term
                    });
                    let avg = SqrtTwo::new(
                        sum.a.checked_div(&size).expect("nonzero"),
                        sum.b.checked_div(&size).expect("nonzero"),
                    );
                    (&avg - &SqrtTwo::rational(sphere_moment(alpha))).to_f64().abs()
                })
                .reduce(|| 0.0, f64::max)
        })
        .collect()
}

fn normalize(x: &[f64]) -> Result<Vec<f64>> {
    let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if r.is_nan() || r <= 0.0 || !r.is_finite() {
        return Err(Error::invalid("point must be a nonzero finite vector"));
    }
    Ok(x.iter().map(|v| v / r).collect())
}

fn gaussian_point(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    (0..n).map(|_| StandardNormal.sample(rng)).collect()
}

/// A unit vector where every polynomial in `polys` vanishes, by Gauss-Newton
/// iteration with the sphere constraint, from up to `restarts` seeded starts.
pub fn find_common_zero(polys: &[RatPoly], seed: u64, restarts: usize) -> Option<Vec<f64>> {
    let n = polys.first()?.num_vars();
    let scales: Vec<f64> = polys
        .iter()
        .map(|p| p.terms().map(|(_, c)| c.to_f64().abs()).fold(0.0, f64::max).recip())
        .collect();
    let grads: Vec<Vec<RatPoly>> = polys.iter().map(|p| (0..n).map(|i| p.derivative(i)).collect()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..restarts {
        let mut x = normalize(&gaussian_point(n, &mut rng)).ok()?;
        for _ in 0..100 {
            let k = polys.len();
            let mut f = DVector::zeros(k + 1);
            let mut j = DMatrix::zeros(k + 1, n);
            for (r, (p, g)) in polys.iter().zip(&grads).enumerate() {
                f[r] = scales[r] * p.eval_f64(&x);
                for i in 0..n {
                    j[(r, i)] = scales[r] * g[i].eval_f64(&x);
                }
            }
            f[k] = x.iter().map(|v| v * v).sum::<f64>() - 1.0;
            for i in 0..n {
                j[(k, i)] = 2.0 * x[i];
            }
            if f.amax() < 1e-15 {
                return Some(x);
            }
            let step = j.pseudo_inverse(1e-12).ok()? * f;
            for i in 0..n {
                x[i] -= step[i];
            }
        }
    }
    None
}

/// Harmonic invariants of degrees 8 and 12 of `𝒞_2`.
pub fn degree_8_12_harmonics() -> Result<Vec<RatPoly>> {
    let g = Group::cached(GroupSpec::real(2))?;
    let mut out = harmonic_invariants(&g, 8)?;
    out.extend(harmonic_invariants(&g, 12)?);
    Ok(out)
}

pub fn design_test(m: usize, mode: PointMode, max_degree: usize) -> Result<DesignReport> {
    if m == 0 || m > 3 {
        return Err(Error::budget(format!("design tests limited to 1 ≤ m ≤ 3, got {m}")));
    }
    if max_degree == 0 || max_degree > 24 {
        return Err(Error::invalid("max degree must be in 1..=24"));
    }
    let n = 1usize << m;
    let (float_gens, exact_gens) = real_generators(m)?;
    let point = match &mode {
        PointMode::MinimalVector => {
            let mut x = vec![0.0; n];
            x[0] = 1.0;
            x
        }
        PointMode::RandomSphere { seed } => normalize(&gaussian_point(n, &mut ChaCha8Rng::seed_from_u64(*seed)))?,
        PointMode::Explicit(x) => {
            if x.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: x.len() });
            }
            normalize(x)?
        }
        PointMode::CommonZero { seed } => {
            if m != 2 {
                return Err(Error::unsupported("common zeros of the degree-8 and 12 harmonics are searched for m = 2"));
            }
            find_common_zero(&degree_8_12_harmonics()?, *seed, 200)
                .ok_or_else(|| Error::budget("no common zero found from the seeded starting points"))?
        }
    };
    let orbit = float_orbit(&float_gens, &point)?;
    let residuals = float_residuals(&orbit, n, max_degree);
    let strength = residuals.iter().take_while(|&&r| r < TOLERANCE).count();
    let exact = if mode == PointMode::MinimalVector && m <= 2 {
        let mut x = vec![SqrtTwo::zero(); n];
        x[0] = SqrtTwo::one();
        Some(exact_residuals(&exact_orbit(&exact_gens, &x)?, n, max_degree))
    } else {
        None
    };
    let float_exact_agree = exact
        .as_ref()
        .map(|e| e.iter().zip(&residuals).all(|(a, b)| (a - b).abs() < 1e-12));
    Ok(DesignReport {
        m,
        mode,
        point,
        orbit_size: orbit.len(),
        tolerance: TOLERANCE,
        residuals,
        strength,
        exact_residuals: exact,
        float_exact_agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_moments() {
        // On S¹: E[x²] = 1/2, E[x⁴] = 3/8, E[x²y²] = 1/8.
        assert_eq!(sphere_moment(&[2, 0]), Rational::frac(1, 2));
        assert_eq!(sphere_moment(&[4, 0]), Rational::frac(3, 8));
        assert_eq!(sphere_moment(&[2, 2]), Rational::frac(1, 8));
        assert_eq!(sphere_moment(&[1, 1]), Rational::zero());
    }

    #[test]
    fn octagon() {
        let r = design_test(1, PointMode::MinimalVector, 9).unwrap();
        assert_eq!(r.orbit_size, 8);
        assert_eq!(r.strength, 7);
        assert_eq!(r.float_exact_agree, Some(true));
    }
}
