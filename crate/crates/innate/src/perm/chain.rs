//! Deterministic Schreier–Sims.
//!
//! Base points are chosen greedily as the first point moved by the element that
//! needs a new level. Strong generators at level `l` are all strong generators
//! fixing the first `l` base points, so any tail of a chain is itself a valid
//! chain for the corresponding pointwise stabilizer.

use super::{PermError, Permutation};

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<u32>,
    /// `transversal[p] = (u, u^-1)` with `base^u = p`.
    transversal: Vec<Option<Box<(Permutation, Permutation)>>>,
    /// Per orbit index: number of generators whose Schreier generator is known to sift.
    done: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Box::new((
            Permutation::identity(degree),
            Permutation::identity(degree),
        )));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base as u32],
            transversal,
            done: vec![0],
        }
    }

    fn add_gen(&mut self, g: Permutation) {
        self.gens.push(g);
        let mut k = 0;
        while k < self.orbit.len() {
            let p = self.orbit[k] as usize;
            for s in &self.gens {
                let q = s.image(p);
                if self.transversal[q].is_none() {
                    let u = self.transversal[p].as_ref().unwrap().0.compose(s);
                    let inv = u.inverse();
                    self.transversal[q] = Some(Box::new((u, inv)));
                    self.orbit.push(q as u32);
                    self.done.push(0);
                }
            }
            k += 1;
        }
    }

    #[inline]
    pub fn transversal(&self, p: usize) -> Option<&Permutation> {
        self.transversal[p].as_ref().map(|b| &b.0)
    }

    #[inline]
    pub fn transversal_inverse(&self, p: usize) -> Option<&Permutation> {
        self.transversal[p].as_ref().map(|b| &b.1)
    }
}

/// Options for building a chain.
#[derive(Clone, Debug, Default)]
pub(crate) struct ChainOptions {
    /// Base points forced at the start of the base.
    pub prefix: Vec<usize>,
    /// If set, only points `< limit` may become base points.
    pub base_limit: Option<usize>,
    /// Known group order; the construction stops once it is reached.
    pub known_order: Option<u128>,
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
    base_limit: Option<usize>,
}

impl StabChain {
    pub(crate) fn empty(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
            base_limit: None,
        }
    }

    pub(crate) fn build(
        degree: usize,
        gens: &[Permutation],
        opts: &ChainOptions,
    ) -> Result<Self, PermError> {
        let mut chain = StabChain {
            degree,
            levels: opts
                .prefix
                .iter()
                .map(|&b| Level::new(b, degree))
                .collect(),
            base_limit: opts.base_limit,
        };
        for g in gens {
            if chain.order_reached(opts.known_order) {
                break;
            }
            chain.insert_with_target(g, opts.known_order)?;
        }
        Ok(chain)
    }

    fn order_reached(&self, target: Option<u128>) -> bool {
        matches!(target, Some(t) if self.order() >= t)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// All strong generators (level 0 holds every one of them).
    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// Strong generators of the stabilizer of the first `k` base points.
    pub fn level_generators(&self, k: usize) -> &[Permutation] {
        self.levels.get(k).map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// The chain for the pointwise stabilizer of the first `k` base points.
    pub fn tail(&self, k: usize) -> StabChain {
        StabChain {
            degree: self.degree,
            levels: self.levels[k.min(self.levels.len())..].to_vec(),
            base_limit: self.base_limit,
        }
    }

    /// Sifts `g` from level `start`; returns the residue and the level it stopped at.
    pub(crate) fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let p = h.image(level.base);
            match level.transversal_inverse(p) {
                Some(inv) => h = h.compose(inv),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, l) = self.sift_from(g, 0);
        l == self.levels.len() && h.is_identity()
    }

    /// Adds `g` to the group; returns `false` if it was already a member.
    pub(crate) fn insert(&mut self, g: &Permutation) -> Result<bool, PermError> {
        self.insert_with_target(g, None)
    }

    fn insert_with_target(
        &mut self,
        g: &Permutation,
        target: Option<u128>,
    ) -> Result<bool, PermError> {
        let (h, j) = self.sift_from(g, 0);
        if j == self.levels.len() && h.is_identity() {
            return Ok(false);
        }
        self.add_strong(h, 0, j)?;
        self.complete(j, target)?;
        Ok(true)
    }

    /// Adds `h` as a strong generator to levels `from..=to`, creating a level if needed.
    fn add_strong(&mut self, h: Permutation, from: usize, to: usize) -> Result<(), PermError> {
        if to == self.levels.len() {
            let b = self.new_base_point(&h)?;
            self.levels.push(Level::new(b, self.degree));
        }
        for l in from..=to {
            self.levels[l].add_gen(h.clone());
        }
        Ok(())
    }

    fn new_base_point(&self, h: &Permutation) -> Result<usize, PermError> {
        let limit = self.base_limit.unwrap_or(self.degree);
        (0..limit)
            .find(|&p| h.image(p) != p)
            .ok_or(PermError::NotHomomorphism)
    }

    fn complete(&mut self, start: usize, target: Option<u128>) -> Result<(), PermError> {
        let mut i = start.min(self.levels.len().saturating_sub(1)) as isize;
        while i >= 0 {
            if self.order_reached(target) {
                return Ok(());
            }
            let lvl = i as usize;
            match self.next_failing_schreier(lvl) {
                Some((h, j)) => {
                    self.add_strong(h, lvl + 1, j)?;
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        Ok(())
    }

    fn next_failing_schreier(&mut self, lvl: usize) -> Option<(Permutation, usize)> {
        let mut k = 0;
        while k < self.levels[lvl].orbit.len() {
            while self.levels[lvl].done[k] < self.levels[lvl].gens.len() {
                let level = &self.levels[lvl];
                let p = level.orbit[k] as usize;
                let s = &level.gens[level.done[k]];
                let q = s.image(p);
                let sg = level
                    .transversal(p)
                    .unwrap()
                    .compose(s)
                    .compose(level.transversal_inverse(q).unwrap());
                self.levels[lvl].done[k] += 1;
                if sg.is_identity() {
                    continue;
                }
                let (h, j) = self.sift_from(&sg, lvl + 1);
                if j < self.levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
            }
            k += 1;
        }
        None
    }

    /// Enumerates every element; only sensible for small groups.
    pub(crate) fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for &p in &level.orbit {
                let u = level.transversal(p as usize).unwrap();
                for x in &acc {
                    next.push(x.compose(u));
                }
            }
            acc = next;
        }
        acc
    }
}
