//! Bounded search for permutational isomorphisms between transitive groups.

use std::collections::HashMap;

use super::blocks::minimal_block_systems;
use super::rank::suborbit_lengths;
use super::{GeneratedGroup, PermError, Permutation};

/// Largest group whose elements are listed as candidate generator images.
pub const ISO_ELEMENT_CAP: u128 = 50_000;

/// Cheap invariants of a permutation group; differing fingerprints rule out isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub degree: usize,
    pub order: u128,
    pub orbit_lengths: Vec<usize>,
    pub suborbits: Option<Vec<usize>>,
    pub block_profile: Vec<usize>,
}

pub fn fingerprint(g: &GeneratedGroup) -> Fingerprint {
    let mut orbit_lengths: Vec<usize> = g.orbits().iter().map(Vec::len).collect();
    orbit_lengths.sort_unstable();
    let transitive = orbit_lengths.len() == 1;
    let suborbits = transitive.then(|| suborbit_lengths(g).expect("transitive"));
    let mut block_profile: Vec<usize> = if transitive {
        minimal_block_systems(g)
            .map(|v| v.iter().map(|b| b.cell_size()).collect())
            .unwrap_or_default()
    } else {
        Vec::new()
    };
    block_profile.sort_unstable();
    Fingerprint {
        degree: g.degree(),
        order: g.order(),
        orbit_lengths,
        suborbits,
        block_profile,
    }
}

/// A point bijection `psi` with `psi^-1 g psi` in the second group for every generator `g`
/// of the first; `generator_images[i]` is the image of the i-th generator.
#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub point_map: Permutation,
    pub generator_images: Vec<Permutation>,
}

/// Extra requirements on the bijection.
#[derive(Default)]
pub struct IsoConstraint<'a> {
    /// Required image of one point.
    pub point: Option<(usize, usize)>,
    /// Final acceptance test on a complete bijection.
    pub accept: Option<&'a dyn Fn(&Permutation) -> bool>,
}

pub fn perm_isomorphic(g1: &GeneratedGroup, g2: &GeneratedGroup, budget: u64) -> Result<IsoWitness, PermError> {
    perm_isomorphic_constrained(g1, g2, budget, &IsoConstraint::default())
}

struct Search<'a> {
    gens: &'a [Permutation],
    n: usize,
    nodes: u64,
    budget: u64,
    constraint: &'a IsoConstraint<'a>,
}

impl Search<'_> {
    /// Extends `psi(0) = start` along the first `k` generators and their images.
    fn propagate(&self, start: usize, images: &[&Permutation]) -> Option<Vec<usize>> {
        let mut psi = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        psi[0] = start;
        used[start] = true;
        let mut queue = vec![0usize];
        let mut k = 0;
        while k < queue.len() {
            let p = queue[k];
            for (s, t) in self.gens.iter().zip(images) {
                let (q, target) = (s.image(p), t.image(psi[p]));
                if psi[q] == usize::MAX {
                    if used[target] {
                        return None;
                    }
                    psi[q] = target;
                    used[target] = true;
                    queue.push(q);
                } else if psi[q] != target {
                    return None;
                }
            }
            k += 1;
        }
        if let Some((a, b)) = self.constraint.point {
            if psi[a] != usize::MAX && psi[a] != b {
                return None;
            }
        }
        Some(psi)
    }

    fn finish(&self, psi: Vec<usize>, images: &[&Permutation]) -> Option<IsoWitness> {
        if psi.contains(&usize::MAX) {
            return None;
        }
        let point_map = Permutation::from_images(psi).ok()?;
        if let Some(accept) = self.constraint.accept {
            if !accept(&point_map) {
                return None;
            }
        }
        Some(IsoWitness {
            point_map,
            generator_images: images.iter().map(|p| (*p).clone()).collect(),
        })
    }

    fn tick(&mut self) -> Result<(), PermError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(PermError::BudgetExhausted)
        } else {
            Ok(())
        }
    }

    fn dfs<'e>(
        &mut self,
        start: usize,
        chosen: &mut Vec<&'e Permutation>,
        buckets: &HashMap<Vec<usize>, Vec<&'e Permutation>>,
    ) -> Result<Option<IsoWitness>, PermError> {
        let k = chosen.len();
        if k == self.gens.len() {
            let psi = self.propagate(start, chosen).expect("checked when extended");
            return Ok(self.finish(psi, chosen));
        }
        let Some(cands) = buckets.get(&self.gens[k].cycle_type()) else {
            return Ok(None);
        };
        for &c in cands {
            self.tick()?;
            chosen.push(c);
            if self.propagate(start, chosen).is_some() {
                if let Some(w) = self.dfs(start, chosen, buckets)? {
                    return Ok(Some(w));
                }
            }
            chosen.pop();
        }
        Ok(None)
    }
}

/// Searches for a permutational isomorphism from `g1` to `g2` satisfying `constraint`.
///
/// Fails with `NotFound` when invariants differ or the search space is exhausted, and with
/// `BudgetExhausted` when more than `budget` nodes would be needed or the groups are
/// intransitive or too large to enumerate.
pub fn perm_isomorphic_constrained(
    g1: &GeneratedGroup,
    g2: &GeneratedGroup,
    budget: u64,
    constraint: &IsoConstraint<'_>,
) -> Result<IsoWitness, PermError> {
    if g1.degree() != g2.degree() {
        return Err(PermError::NotFound);
    }
    let n = g1.degree();
    if constraint.point.is_none() && constraint.accept.is_none() && g1.same_group(g2) {
        return Ok(IsoWitness {
            point_map: Permutation::identity(n),
            generator_images: g1.generators().to_vec(),
        });
    }
    if fingerprint(g1) != fingerprint(g2) {
        return Err(PermError::NotFound);
    }
    if !g1.is_transitive() {
        return Err(PermError::BudgetExhausted);
    }
    let gens = g1.generators();
    if gens.is_empty() {
        // Trivial transitive group on one point.
        return Ok(IsoWitness {
            point_map: Permutation::identity(n),
            generator_images: Vec::new(),
        });
    }
    let mut search = Search {
        gens,
        n,
        nodes: 0,
        budget,
        constraint,
    };
    let starts: Vec<usize> = match constraint.point {
        Some((0, b)) => vec![b],
        None if constraint.accept.is_none() => vec![0],
        _ => (0..n).collect(),
    };
    let gens2 = g2.generators();
    if gens2.len() == gens.len() {
        let images: Vec<&Permutation> = gens2.iter().collect();
        for b in 0..n {
            search.tick()?;
            if let Some(psi) = search.propagate(b, &images) {
                if let Some(w) = search.finish(psi, &images) {
                    return Ok(w);
                }
            }
        }
    }
    if g2.order() > ISO_ELEMENT_CAP {
        return Err(PermError::BudgetExhausted);
    }
    let elements = g2.elements(ISO_ELEMENT_CAP)?;
    let mut buckets: HashMap<Vec<usize>, Vec<&Permutation>> = HashMap::new();
    for e in &elements {
        buckets.entry(e.cycle_type()).or_default().push(e);
    }
    for start in starts {
        let mut chosen = Vec::new();
        if let Some(w) = search.dfs(start, &mut chosen, &buckets)? {
            return Ok(w);
        }
    }
    Err(PermError::NotFound)
}
