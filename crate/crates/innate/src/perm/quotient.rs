use super::{BlockSystem, GeneratedGroup, PermError, Permutation};

/// The action of a group on the cells of an invariant partition.
#[derive(Clone, Debug)]
pub struct ActionQuotient {
    pub quotient_group: GeneratedGroup,
    pub kernel: GeneratedGroup,
    /// Image of each source generator, in generator order.
    pub projection: Vec<Permutation>,
}

/// Each generator extended to act on points followed by cells.
pub fn augment_with_cells(gens: &[Permutation], blocks: &BlockSystem) -> Result<Vec<Permutation>, PermError> {
    gens.iter()
        .map(|g| {
            blocks
                .induced(g)
                .map(|q| g.direct_sum(&q))
                .ok_or(PermError::BlocksNotInvariant)
        })
        .collect()
}

/// Acts on `blocks`; the kernel is the subgroup fixing every cell setwise.
pub fn quotient_on_blocks(g: &GeneratedGroup, blocks: &BlockSystem) -> Result<ActionQuotient, PermError> {
    if blocks.degree() != g.degree() {
        return Err(PermError::DegreeMismatch {
            expected: g.degree(),
            found: blocks.degree(),
        });
    }
    let projection: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|x| blocks.induced(x).ok_or(PermError::BlocksNotInvariant))
        .collect::<Result<_, _>>()?;
    let quotient_group = GeneratedGroup::new(blocks.cell_count(), projection.clone())?;
    let n = g.degree();
    let augmented = GeneratedGroup::new(n + blocks.cell_count(), augment_with_cells(g.generators(), blocks)?)?;
    let _ = augmented.chain();
    let cell_points: Vec<usize> = (n..n + blocks.cell_count()).collect();
    let fixing = augmented.pointwise_stabilizer(&cell_points);
    let kernel = GeneratedGroup::new(n, fixing.generators().iter().map(|x| x.restrict(n)).collect())?;
    debug_assert_eq!(kernel.order() * quotient_group.order(), g.order());
    Ok(ActionQuotient {
        quotient_group,
        kernel,
        projection,
    })
}

/// Image of an arbitrary group element acting on cells.
pub fn project(blocks: &BlockSystem, x: &Permutation) -> Result<Permutation, PermError> {
    blocks.induced(x).ok_or(PermError::BlocksNotInvariant)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_six_on_pairs() {
        let c6 = GeneratedGroup::new(6, vec![Permutation::from_cycles(6, &[vec![0, 1, 2, 3, 4, 5]]).unwrap()])
            .unwrap();
        let b = BlockSystem::new(6, vec![vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        let q = quotient_on_blocks(&c6, &b).unwrap();
        assert_eq!(q.quotient_group.order(), 3);
        assert_eq!(q.kernel.order(), 2);
    }

    #[test]
    fn singleton_blocks_give_faithful_quotient() {
        let s4 = GeneratedGroup::symmetric(4);
        let b = BlockSystem::new(4, (0..4).map(|p| vec![p]).collect()).unwrap();
        let q = quotient_on_blocks(&s4, &b).unwrap();
        assert_eq!(q.quotient_group.order(), 24);
        assert_eq!(q.kernel.order(), 1);
    }

    #[test]
    fn broken_cells_are_rejected() {
        let s4 = GeneratedGroup::symmetric(4);
        let b = BlockSystem::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(matches!(quotient_on_blocks(&s4, &b), Err(PermError::BlocksNotInvariant)));
    }
}
