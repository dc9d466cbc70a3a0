use super::chain::{ChainOptions, StabChain};
use super::{GeneratedGroup, PermError, Permutation};

/// A homomorphism from a permutation group, defined by images of its generators.
///
/// Internally the graph `{(x, f(x))}` is held as a permutation group on the disjoint
/// union of both domains, with base points drawn only from the source domain. Sifting
/// a source element through that chain leaves `(1, f(x)^-1)` behind.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source_degree: usize,
    target_degree: usize,
    graph: StabChain,
    source_images: Vec<Permutation>,
}

impl Homomorphism {
    /// Fails with `NotHomomorphism` when the generator images do not extend to a
    /// well-defined map.
    pub fn new(source: &GeneratedGroup, images: &[Permutation]) -> Result<Self, PermError> {
        Self::from_generators(source.degree(), source.generators(), images, Some(source.order()))
    }

    pub fn from_generators(
        source_degree: usize,
        source_gens: &[Permutation],
        images: &[Permutation],
        source_order: Option<u128>,
    ) -> Result<Self, PermError> {
        if source_gens.len() != images.len() {
            return Err(PermError::NotHomomorphism);
        }
        let target_degree = images.first().map(Permutation::degree).unwrap_or(1);
        if images.iter().any(|g| g.degree() != target_degree) {
            return Err(PermError::NotHomomorphism);
        }
        let pairs: Vec<Permutation> = source_gens
            .iter()
            .zip(images)
            .map(|(s, t)| s.direct_sum(t))
            .collect();
        let opts = ChainOptions {
            prefix: Vec::new(),
            base_limit: Some(source_degree),
            known_order: None,
        };
        let graph = StabChain::build(source_degree + target_degree, &pairs, &opts)?;
        if let Some(order) = source_order {
            if graph.order() != order {
                return Err(PermError::NotHomomorphism);
            }
        }
        Ok(Homomorphism {
            source_degree,
            target_degree,
            graph,
            source_images: images.to_vec(),
        })
    }

    pub fn target_degree(&self) -> usize {
        self.target_degree
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.source_images
    }

    /// Image of a source element; `None` if `x` is not in the source group.
    pub fn image(&self, x: &Permutation) -> Option<Permutation> {
        if x.degree() != self.source_degree {
            return None;
        }
        let lifted = x.direct_sum(&Permutation::identity(self.target_degree));
        let (residue, level) = self.graph.sift_from(&lifted, 0);
        if level != self.graph.levels.len() {
            return None;
        }
        let n = self.source_degree;
        if (0..n).any(|p| residue.image(p) != p) {
            return None;
        }
        let inv: Vec<usize> = (0..self.target_degree)
            .map(|p| residue.image(p + n) - n)
            .collect();
        Some(Permutation::from_images(inv).ok()?.inverse())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_map_of_s4() {
        let s4 = GeneratedGroup::symmetric(4);
        let swap = Permutation::from_cycles(2, &[vec![0, 1]]).unwrap();
        let images: Vec<Permutation> = s4
            .generators()
            .iter()
            .map(|g| {
                let odd = g.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 1;
                if odd {
                    swap.clone()
                } else {
                    Permutation::identity(2)
                }
            })
            .collect();
        let hom = Homomorphism::from_generators(4, s4.generators(), &images, None).unwrap();
        let t = Permutation::from_cycles(4, &[vec![1, 3]]).unwrap();
        assert_eq!(hom.image(&t).unwrap(), swap);
        let c3 = Permutation::from_cycles(4, &[vec![0, 2, 3]]).unwrap();
        assert!(hom.image(&c3).unwrap().is_identity());
    }

    #[test]
    fn inconsistent_images_are_rejected() {
        let c4 = GeneratedGroup::new(4, vec![Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()])
            .unwrap();
        // A 4-cycle cannot map to a 3-cycle.
        let bad = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        assert!(Homomorphism::new(&c4, &[bad]).is_err());
    }
}
