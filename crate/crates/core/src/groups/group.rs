use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::compact::{CompactMatrix, Ring};
use super::generators::generators;
use super::GroupSpec;
use crate::error::{Error, Result};

/// Default element budget for closures.
pub const DEFAULT_MAX_ORDER: usize = 10_000_000;

/// Breadth-first closure of `gens` under right multiplication.
///
/// Products of each frontier layer are formed in parallel and inserted
/// sequentially; exceeding `max_order` aborts with the partial count.
pub fn group_closure(ring: &Ring, gens: &[CompactMatrix], max_order: usize) -> Result<Vec<CompactMatrix>> {
    let Some(first) = gens.first() else {
        return Err(Error::invalid("empty generator list"));
    };
    let id = CompactMatrix::identity(ring, first.dim());
    let mut seen: HashSet<CompactMatrix> = HashSet::new();
    seen.insert(id.clone());
    let mut elements = vec![id];
    let mut frontier_start = 0;
    while frontier_start < elements.len() {
        let frontier = &elements[frontier_start..];
        let products: Vec<CompactMatrix> = frontier
            .par_iter()
            .flat_map_iter(|x| gens.iter().map(move |g| x.mul(g, ring)))
            .collect::<Result<Vec<_>>>()?;
        frontier_start = elements.len();
        for y in products {
            if !seen.contains(&y) {
                if seen.len() >= max_order {
                    return Err(Error::ClosureOverflow {
                        max_order,
                        partial: seen.len(),
                    });
                }
                seen.insert(y.clone());
                elements.push(y);
            }
        }
    }
    Ok(elements)
}

/// A finite matrix group stored as a left transversal `T` of a monomial
/// subgroup `H`, so that `G = ⋃_{t∈T} tH` and `|G| = |T|·|H|`.
///
/// For the real Clifford group `H` is the parabolic subgroup `P`
/// generated by the diagonal quadratic-form matrices and `AGL(m,2)`.
#[derive(Clone, Debug)]
pub struct Group {
    spec: GroupSpec,
    ring: Ring,
    generators: Vec<CompactMatrix>,
    subgroup: Vec<CompactMatrix>,
    subgroup_set: HashSet<CompactMatrix>,
    transversal: Vec<CompactMatrix>,
}

impl Group {
    /// Builds the group for `spec` from its generator set.
    pub fn new(spec: GroupSpec) -> Result<Group> {
        Group::with_budget(spec, DEFAULT_MAX_ORDER)
    }

    pub fn with_budget(spec: GroupSpec, max_order: usize) -> Result<Group> {
        spec.validate()?;
        let ring = spec.ring()?;
        let gens = generators(&spec, &ring)?;
        Group::from_generators(spec, ring, gens, max_order)
    }

    /// Builds a group from explicit generators; the monomial ones generate `H`.
    pub fn from_generators(spec: GroupSpec, ring: Ring, gens: Vec<CompactMatrix>, max_order: usize) -> Result<Group> {
        let dim = spec.dim();
        if let Some(g) = gens.iter().find(|g| g.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: g.dim(),
            });
        }
        let monomial: Vec<CompactMatrix> = gens.iter().filter(|g| g.is_monomial()).cloned().collect();
        let subgroup = if monomial.is_empty() {
            vec![CompactMatrix::identity(&ring, dim)]
        } else {
            group_closure(&ring, &monomial, max_order)?
        };
        let subgroup_set: HashSet<CompactMatrix> = subgroup.iter().cloned().collect();
        let mut transversal = vec![CompactMatrix::identity(&ring, dim)];
        let mut inverses = vec![CompactMatrix::identity(&ring, dim)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(ti) = queue.pop_front() {
            for g in &gens {
                let u = g.mul(&transversal[ti], &ring)?;
                let known = inverses
                    .par_iter()
                    .map(|inv| inv.mul(&u, &ring).map(|x| subgroup_set.contains(&x)))
                    .collect::<Result<Vec<bool>>>()?
                    .into_iter()
                    .any(|b| b);
                if !known {
                    if (transversal.len() + 1).saturating_mul(subgroup.len()) > max_order {
                        return Err(Error::ClosureOverflow {
                            max_order,
                            partial: transversal.len() * subgroup.len(),
                        });
                    }
                    inverses.push(u.conj_transpose(&ring));
                    transversal.push(u);
                    queue.push_back(transversal.len() - 1);
                }
            }
        }
        Ok(Group {
            spec,
            ring,
            generators: gens,
            subgroup,
            subgroup_set,
            transversal,
        })
    }

    /// The parabolic subgroup `P` of `𝒞_m`: diagonal quadratic-form matrices and `AGL(m,2)`.
    pub fn parabolic(m: u32) -> Result<Group> {
        let spec = GroupSpec::real(m);
        spec.validate()?;
        let ring = spec.ring()?;
        let gens = generators(&spec, &ring)?.into_iter().filter(|g| g.is_monomial()).collect();
        Group::from_generators(spec, ring, gens, DEFAULT_MAX_ORDER)
    }

    /// The group for `spec`, built once per process and shared afterwards.
    pub fn cached(spec: GroupSpec) -> Result<Arc<Group>> {
        static CACHE: OnceLock<Mutex<HashMap<GroupSpec, Arc<Group>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().expect("group cache poisoned").get(&spec) {
            return Ok(g.clone());
        }
        let g = Arc::new(Group::new(spec)?);
        cache.lock().expect("group cache poisoned").insert(spec, g.clone());
        Ok(g)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn generators(&self) -> &[CompactMatrix] {
        &self.generators
    }

    pub fn subgroup(&self) -> &[CompactMatrix] {
        &self.subgroup
    }

    pub fn transversal(&self) -> &[CompactMatrix] {
        &self.transversal
    }

    pub fn order(&self) -> u128 {
        self.transversal.len() as u128 * self.subgroup.len() as u128
    }

    /// Membership test: `g ∈ tH` for some transversal element `t`.
    pub fn contains(&self, g: &CompactMatrix) -> Result<bool> {
        for t in &self.transversal {
            let x = t.conj_transpose(&self.ring).mul(g, &self.ring)?;
            if self.subgroup_set.contains(&x) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// All elements `t·h`, sorted by their byte keys for deterministic output.
    pub fn elements(&self) -> Result<Vec<CompactMatrix>> {
        let mut out: Vec<(Vec<u8>, CompactMatrix)> = self
            .transversal
            .par_iter()
            .flat_map_iter(|t| self.subgroup.iter().map(move |h| t.mul(h, &self.ring)))
            .map(|r| r.map(|g| (g.sort_key(), g)))
            .collect::<Result<Vec<_>>>()?;
        out.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Ok(out.into_iter().map(|(_, g)| g).collect())
    }

    /// Folds `f` over all elements in parallel without materializing the group.
    pub fn fold_elements<A, F, R>(&self, init: impl Fn() -> A + Sync + Send, f: F, reduce: R) -> Result<A>
    where
        A: Send,
        F: Fn(A, &CompactMatrix) -> Result<A> + Sync + Send,
        R: Fn(A, A) -> A + Sync + Send,
    {
        self.transversal
            .par_iter()
            .map(|t| {
                let mut acc = init();
                for h in &self.subgroup {
                    let g = t.mul(h, &self.ring)?;
                    acc = f(acc, &g)?;
                }
                Ok(acc)
            })
            .try_reduce(&init, |a, b| Ok(reduce(a, b)))
    }
}
