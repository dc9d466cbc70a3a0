use serde::Serialize;

use super::{GeneratedGroup, PermError, Permutation};

/// A partition of the domain into equal-size cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlockSystem {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl BlockSystem {
    /// Cells are sorted internally and ordered by least point.
    pub fn new(degree: usize, cells: Vec<Vec<usize>>) -> Result<Self, PermError> {
        let mut cells: Vec<Vec<usize>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cells.sort();
        let mut cell_of = vec![usize::MAX; degree];
        let size = cells.first().map(Vec::len).unwrap_or(0);
        for (k, cell) in cells.iter().enumerate() {
            if cell.len() != size || cell.is_empty() {
                return Err(PermError::InvalidPartition("cells differ in size".into()));
            }
            for &p in cell {
                if p >= degree || cell_of[p] != usize::MAX {
                    return Err(PermError::InvalidPartition(format!("point {p} repeated or out of range")));
                }
                cell_of[p] = k;
            }
        }
        if cell_of.contains(&usize::MAX) {
            return Err(PermError::InvalidPartition("cells do not cover the domain".into()));
        }
        Ok(BlockSystem { cells, cell_of })
    }

    /// Builds the partition from a cell label per point.
    pub fn from_labels(labels: &[usize]) -> Result<Self, PermError> {
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (p, &l) in labels.iter().enumerate() {
            groups.entry(l).or_default().push(p);
        }
        BlockSystem::new(labels.len(), groups.into_values().collect())
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_of(&self, p: usize) -> usize {
        self.cell_of[p]
    }

    pub fn cell_size(&self) -> usize {
        self.cells[0].len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn degree(&self) -> usize {
        self.cell_of.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.cell_size() == 1 || self.cell_count() == 1
    }

    /// The permutation of cells induced by `g`, or `None` if `g` breaks a cell.
    pub fn induced(&self, g: &Permutation) -> Option<Permutation> {
        let mut images = Vec::with_capacity(self.cells.len());
        for cell in &self.cells {
            let target = self.cell_of[g.image(cell[0])];
            if cell.iter().any(|&p| self.cell_of[g.image(p)] != target) {
                return None;
            }
            images.push(target);
        }
        Permutation::from_images(images).ok()
    }

    pub fn is_invariant_under(&self, gens: &[Permutation]) -> bool {
        gens.iter().all(|g| self.induced(g).is_some())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Finest invariant partition in which all of `seed` lie in one cell.
pub fn minimal_block_containing(gens: &[Permutation], degree: usize, seed: &[usize]) -> BlockSystem {
    let mut uf = UnionFind::new(degree);
    let mut queue = Vec::new();
    for w in seed.windows(2) {
        if uf.union(w[0], w[1]) {
            queue.push((w[0], w[1]));
        }
    }
    while let Some((a, b)) = queue.pop() {
        for g in gens {
            let (x, y) = (g.image(a), g.image(b));
            if uf.union(x, y) {
                queue.push((x, y));
            }
        }
    }
    let labels: Vec<usize> = (0..degree).map(|p| uf.find(p)).collect();
    BlockSystem::from_labels(&labels).expect("orbit partition of a transitive group is uniform")
}

/// All minimal nontrivial block systems of a transitive group; empty iff primitive.
pub fn minimal_block_systems(g: &GeneratedGroup) -> Result<Vec<BlockSystem>, PermError> {
    if !g.is_transitive() {
        return Err(PermError::NotTransitive);
    }
    let n = g.degree();
    let mut candidates: Vec<BlockSystem> = Vec::new();
    for p in 1..n {
        let b = minimal_block_containing(g.generators(), n, &[0, p]);
        if b.cell_count() > 1 && !candidates.contains(&b) {
            candidates.push(b);
        }
    }
    let block0 = |b: &BlockSystem| b.cells()[b.cell_of(0)].clone();
    let minimal: Vec<BlockSystem> = candidates
        .iter()
        .filter(|b| {
            let mine = block0(b);
            !candidates.iter().any(|other| {
                let theirs = block0(other);
                theirs.len() < mine.len() && theirs.iter().all(|p| mine.binary_search(p).is_ok())
            })
        })
        .cloned()
        .collect();
    Ok(minimal)
}

/// Every block containing point 0 of a transitive action (including `{0}` and the whole domain),
/// ordered by size and then lexicographically.
pub fn blocks_containing_zero(gens: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut found: Vec<Vec<usize>> = vec![vec![0]];
    let mut k = 0;
    while k < found.len() {
        let current = found[k].clone();
        for p in 0..degree {
            if current.binary_search(&p).is_ok() {
                continue;
            }
            let mut seed = current.clone();
            seed.push(p);
            let sys = minimal_block_containing(gens, degree, &seed);
            let block = sys.cells()[sys.cell_of(0)].clone();
            if !found.contains(&block) {
                found.push(block);
            }
        }
        k += 1;
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_has_one_minimal_system() {
        let g = GeneratedGroup::new(4, vec![Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()])
            .unwrap();
        let systems = minimal_block_systems(&g).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].cells(), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn a5_is_primitive() {
        let a5 = GeneratedGroup::alternating(5);
        assert!(minimal_block_systems(&a5).unwrap().is_empty());
    }

    #[test]
    fn blocks_of_cyclic_six() {
        let c6 = Permutation::from_cycles(6, &[vec![0, 1, 2, 3, 4, 5]]).unwrap();
        let blocks = blocks_containing_zero(&[c6], 6);
        let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);
    }
}
