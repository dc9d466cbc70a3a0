use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use super::chain::{ChainOptions, StabChain};
use super::{PermError, Permutation};

/// A subgroup of `Sym(n)` given by generators, with a lazily computed stabilizer chain.
#[derive(Clone)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl fmt::Debug for GeneratedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratedGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl GeneratedGroup {
    /// Identity permutations among `generators` are dropped; an empty list gives the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut generators: Vec<Permutation> =
            generators.into_iter().filter(|g| !g.is_identity()).collect();
        dedup_preserving_order(&mut generators);
        Ok(GeneratedGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        GeneratedGroup::new(degree, Vec::new()).expect("positive degree")
    }

    /// The full symmetric group.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree > 1 {
            gens.push(Permutation::from_cycles(degree, &[(0..degree).collect()]).unwrap());
            gens.push(Permutation::from_cycles(degree, &[vec![0, 1]]).unwrap());
        }
        GeneratedGroup::new(degree, gens).expect("valid generators")
    }

    /// The alternating group.
    pub fn alternating(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 3 {
            gens.push(Permutation::from_cycles(degree, &[vec![0, 1, 2]]).unwrap());
            let long: Vec<usize> = if degree % 2 == 1 {
                (0..degree).collect()
            } else {
                (1..degree).collect()
            };
            gens.push(Permutation::from_cycles(degree, &[long]).unwrap());
        }
        GeneratedGroup::new(degree, gens).expect("valid generators")
    }

    pub(crate) fn from_chain(degree: usize, generators: Vec<Permutation>, chain: StabChain) -> Self {
        let g = GeneratedGroup::new(degree, generators).expect("consistent degree");
        let _ = g.chain.set(chain);
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| {
            StabChain::build(self.degree, &self.generators, &ChainOptions::default())
                .expect("unrestricted base selection cannot fail")
        })
    }

    /// A fresh chain whose base starts with `prefix`.
    pub fn chain_with_prefix(&self, prefix: &[usize]) -> StabChain {
        let current = self.chain();
        if current.base().starts_with(prefix) {
            return current.clone();
        }
        let opts = ChainOptions {
            prefix: prefix.to_vec(),
            base_limit: None,
            known_order: Some(current.order()),
        };
        StabChain::build(self.degree, current.strong_generators(), &opts)
            .expect("unrestricted base selection cannot fail")
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// `true` iff every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &GeneratedGroup) -> bool {
        other.degree == self.degree && other.generators.iter().all(|g| self.contains(g))
    }

    pub fn same_group(&self, other: &GeneratedGroup) -> bool {
        self.order() == other.order() && self.contains_group(other)
    }

    pub fn orbit(&self, p: usize) -> Vec<usize> {
        orbit_under(&self.generators, self.degree, p)
    }

    /// Orbits in order of their least point; each orbit lists points in discovery order.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_under(&self.generators, self.degree)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Point stabilizer on a small generating set, with its chain attached.
    pub fn stabilizer(&self, p: usize) -> GeneratedGroup {
        let chain = self.chain_with_prefix(&[p]);
        let target = chain.order() / chain.orbit_sizes()[0] as u128;
        let tail = chain.tail(1);
        let gens = reduce_generators(self.degree, tail.strong_generators(), target);
        GeneratedGroup::from_chain(self.degree, gens, tail)
    }

    /// Pointwise stabilizer of a sequence of points.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> GeneratedGroup {
        if points.is_empty() {
            return self.clone();
        }
        let chain = self.chain_with_prefix(points);
        let tail = chain.tail(points.len());
        let target = tail.order();
        let gens = reduce_generators(self.degree, tail.strong_generators(), target);
        GeneratedGroup::from_chain(self.degree, gens, tail)
    }

    /// Subgroup generated by `gens` (which must lie in the same symmetric group).
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<GeneratedGroup, PermError> {
        GeneratedGroup::new(self.degree, gens)
    }

    /// The group generated by `self` together with `extra`.
    pub fn join(&self, extra: &[Permutation]) -> GeneratedGroup {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        GeneratedGroup::new(self.degree, gens).expect("consistent degree")
    }

    pub fn conjugate(&self, x: &Permutation) -> GeneratedGroup {
        GeneratedGroup::new(
            self.degree,
            self.generators.iter().map(|g| g.conjugate_by(x)).collect(),
        )
        .expect("consistent degree")
    }

    /// `true` iff `x` normalizes `self`.
    pub fn is_normalized_by(&self, x: &Permutation) -> bool {
        self.generators
            .iter()
            .all(|g| self.contains(&g.conjugate_by(x)))
    }

    pub fn is_normal_in(&self, over: &GeneratedGroup) -> bool {
        over.contains_group(self) && over.generators.iter().all(|x| self.is_normalized_by(x))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].compose(&g[j]) == g[j].compose(&g[i])))
    }

    /// All elements, refusing groups above `cap`.
    pub fn elements(&self, cap: u128) -> Result<Vec<Permutation>, PermError> {
        let order = self.order();
        if order > cap {
            return Err(PermError::GroupTooLarge { order, cap });
        }
        Ok(self.chain().elements())
    }

    /// Normal closure of `seeds` under conjugation by `self`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> GeneratedGroup {
        let mut chain = StabChain::empty(self.degree);
        let mut gens = Vec::new();
        let mut queue: VecDeque<Permutation> = VecDeque::new();
        for s in seeds {
            if chain.insert(s).expect("unrestricted") {
                gens.push(s.clone());
                queue.push_back(s.clone());
            }
        }
        while let Some(x) = queue.pop_front() {
            for y in &self.generators {
                let z = x.conjugate_by(y);
                if chain.insert(&z).expect("unrestricted") {
                    gens.push(z.clone());
                    queue.push_back(z);
                }
            }
        }
        GeneratedGroup::from_chain(self.degree, gens, chain)
    }

    pub fn derived_subgroup(&self) -> GeneratedGroup {
        let g = &self.generators;
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                comms.push(Permutation::commutator(&g[i], &g[j]));
            }
        }
        self.normal_closure(&comms)
    }

    /// Applies a point relabelling: returns `{ pi^-1 g pi }`.
    pub fn relabel(&self, pi: &Permutation) -> GeneratedGroup {
        self.conjugate(pi)
    }
}

/// Greedily keeps generators until the generated order reaches `target`.
pub(crate) fn reduce_generators(degree: usize, gens: &[Permutation], target: u128) -> Vec<Permutation> {
    let mut chain = StabChain::empty(degree);
    let mut kept = Vec::new();
    for g in gens {
        if chain.order() >= target {
            break;
        }
        if chain.insert(g).expect("unrestricted") {
            kept.push(g.clone());
        }
    }
    kept
}

fn dedup_preserving_order(v: &mut Vec<Permutation>) {
    let mut seen = std::collections::HashSet::new();
    v.retain(|g| seen.insert(g.clone()));
}

pub(crate) fn orbit_under(gens: &[Permutation], degree: usize, p: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[p] = true;
    let mut orbit = vec![p];
    let mut k = 0;
    while k < orbit.len() {
        let x = orbit[k];
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
        k += 1;
    }
    orbit
}

pub(crate) fn orbits_under(gens: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree {
        if seen[p] {
            continue;
        }
        let orbit = orbit_under(gens, degree, p);
        for &x in &orbit {
            seen[x] = true;
        }
        out.push(orbit);
    }
    out
}
