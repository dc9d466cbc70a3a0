use crate::perm::{
    centralizer_in_symmetric, minimal_normal_subgroups, quotient_on_blocks, ActionQuotient, BlockSystem,
    GeneratedGroup, Permutation,
};

use super::ClassifyError;

/// A properly innately transitive group split into plinth, centralizer and the cell action.
///
/// Point 0 is the base point `alpha`; `sigma` is the cell containing it.
#[derive(Clone, Debug)]
pub struct PitDecomposition {
    pub group: GeneratedGroup,
    pub plinth: GeneratedGroup,
    pub centralizer: GeneratedGroup,
    pub r: usize,
    pub blocks: BlockSystem,
    pub quotient: ActionQuotient,
    /// The plinth's stabilizer of point 0, acting on the cells.
    pub point_stabilizer: GeneratedGroup,
    pub sigma: usize,
}

/// What [`detect_pit`] found.
#[derive(Clone, Debug)]
pub enum PitOutcome {
    NotInnatelyTransitive,
    /// A transitive minimal normal subgroup with trivial or transitive centralizer.
    Quasiprimitive { plinth_order: u128 },
    /// The transitive minimal normal subgroup is abelian (and therefore regular).
    AbelianPlinth { plinth_order: u128 },
    Proper(Box<PitDecomposition>),
}

impl PitOutcome {
    pub fn decomposition(&self) -> Option<&PitDecomposition> {
        match self {
            PitOutcome::Proper(d) => Some(d),
            _ => None,
        }
    }
}

impl PitDecomposition {
    /// Splits `g` over a known transitive minimal normal subgroup `plinth`.
    pub fn with_plinth(g: &GeneratedGroup, plinth: &GeneratedGroup) -> Result<PitOutcome, ClassifyError> {
        if !plinth.is_transitive() {
            return Err(ClassifyError::NotTransitive);
        }
        let n = g.degree();
        if plinth.is_abelian() {
            return Ok(PitOutcome::AbelianPlinth {
                plinth_order: plinth.order(),
            });
        }
        let inside: Vec<Permutation> = centralizer_in_symmetric(plinth)?
            .generators()
            .iter()
            .filter(|c| g.contains(c))
            .cloned()
            .collect();
        let centralizer = GeneratedGroup::new(n, inside)?;
        if centralizer.is_trivial() || centralizer.is_transitive() {
            return Ok(PitOutcome::Quasiprimitive {
                plinth_order: plinth.order(),
            });
        }
        let blocks = BlockSystem::new(n, centralizer.orbits())?;
        let quotient = quotient_on_blocks(g, &blocks)?;
        let projected: Vec<Permutation> = plinth
            .stabilizer(0)
            .generators()
            .iter()
            .map(|x| blocks.induced(x).expect("cells are invariant"))
            .collect();
        let point_stabilizer = GeneratedGroup::new(blocks.cell_count(), projected)?;
        Ok(PitOutcome::Proper(Box::new(PitDecomposition {
            group: g.clone(),
            plinth: plinth.clone(),
            r: centralizer.order() as usize,
            centralizer,
            sigma: blocks.cell_of(0),
            blocks,
            quotient,
            point_stabilizer,
        })))
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// The plinth acting on the cells.
    pub fn plinth_on_cells(&self) -> GeneratedGroup {
        let gens = self
            .plinth
            .generators()
            .iter()
            .map(|x| self.blocks.induced(x).expect("cells are invariant"))
            .collect();
        GeneratedGroup::new(self.blocks.cell_count(), gens).expect("consistent degree")
    }
}

/// Looks for a transitive minimal normal subgroup and splits `g` over it.
pub fn detect_pit(g: &GeneratedGroup) -> Result<PitOutcome, ClassifyError> {
    if !g.is_transitive() {
        return Err(ClassifyError::NotTransitive);
    }
    match minimal_normal_subgroups(g).into_iter().find(GeneratedGroup::is_transitive) {
        Some(m) => PitDecomposition::with_plinth(g, &m),
        None => Ok(PitOutcome::NotInnatelyTransitive),
    }
}

/// The cell action together with the image of the plinth's point stabilizer.
#[derive(Clone, Debug)]
pub struct PhiHat {
    pub quotient: GeneratedGroup,
    pub plinth: GeneratedGroup,
    pub r_sub: GeneratedGroup,
    pub sigma: usize,
    /// `r_sub` is normal in the plinth's stabilizer of `sigma`.
    pub normal_in_plinth_stabilizer: bool,
    /// `r_sub` is normalized by the quotient's stabilizer of `sigma`.
    pub invariant_under_stabilizer: bool,
}

pub fn phi_hat(d: &PitDecomposition) -> PhiHat {
    let quotient = d.quotient.quotient_group.clone();
    let plinth = d.plinth_on_cells();
    let r_sub = d.point_stabilizer.clone();
    let plinth_stab = plinth.stabilizer(d.sigma);
    let normal_in_plinth_stabilizer = r_sub.is_normal_in(&plinth_stab);
    let invariant_under_stabilizer = quotient
        .stabilizer(d.sigma)
        .generators()
        .iter()
        .all(|x| r_sub.is_normalized_by(x));
    PhiHat {
        quotient,
        plinth,
        r_sub,
        sigma: d.sigma,
        normal_in_plinth_stabilizer,
        invariant_under_stabilizer,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::scaled_projective_action;
    use crate::algebra::FiniteField;

    #[test]
    fn scaled_psl25_is_proper() {
        let f = FiniteField::new(5, 1).unwrap();
        let s = scaled_projective_action(2, &f, 2).unwrap();
        let g = s.action.group_named(&["sl", "z"]);
        let d = detect_pit(&g).unwrap();
        let d = d.decomposition().expect("proper");
        assert_eq!(d.r, 2);
        assert_eq!(d.blocks.cell_count(), 6);
        let ph = phi_hat(d);
        assert_eq!(ph.quotient.order(), 60);
        assert_eq!(ph.r_sub.order(), 5);
        assert!(ph.normal_in_plinth_stabilizer && ph.invariant_under_stabilizer);
    }

    #[test]
    fn simple_groups_are_quasiprimitive() {
        let a5 = GeneratedGroup::alternating(5);
        assert!(matches!(detect_pit(&a5).unwrap(), PitOutcome::Quasiprimitive { plinth_order: 60 }));
        let s4 = GeneratedGroup::symmetric(4);
        assert!(matches!(detect_pit(&s4).unwrap(), PitOutcome::AbelianPlinth { plinth_order: 4 }));
    }
}
