use crate::algebra::FiniteField;
use crate::perm::{coset_action, CosetAction, GeneratedGroup, Permutation};

use super::linear::semilinear_projective_action;
use super::ActionError;

/// PSL(2,8) and PΓL(2,8) on the projective line over GF(8), a cyclic subgroup `R` of order 9
/// and its normalizer, and the coset actions of the simple group on both.
#[derive(Clone, Debug)]
pub struct Line7Action {
    pub plinth: GeneratedGroup,
    pub ambient: GeneratedGroup,
    pub r_sub: GeneratedGroup,
    pub normalizer: GeneratedGroup,
    /// Degree 56: cosets of `R`.
    pub omega: CosetAction,
    /// Degree 28: cosets of the normalizer of `R`.
    pub sigma: CosetAction,
}

pub fn ree3_line7_action() -> Result<Line7Action, ActionError> {
    let f = FiniteField::new(2, 3)?;
    let line = semilinear_projective_action(2, &f)?;
    let plinth = line.group_named(&["sl"]);
    let ambient = line.group_named(&["sl", "phi"]);
    let mut elements = plinth.elements(10_000)?;
    elements.sort();
    let x = elements
        .iter()
        .find(|e| e.order() == 9)
        .cloned()
        .ok_or(ActionError::NotFound("element of order 9"))?;
    let r_sub = GeneratedGroup::new(9, vec![x.clone()])?;
    let normalizing: Vec<Permutation> = elements
        .into_iter()
        .filter(|m| r_sub.contains(&x.conjugate_by(m)))
        .collect();
    let normalizer = GeneratedGroup::new(9, normalizing)?;
    let omega = coset_action(&plinth, &r_sub)?;
    let sigma = coset_action(&plinth, &normalizer)?;
    Ok(Line7Action {
        plinth,
        ambient,
        r_sub,
        normalizer,
        omega,
        sigma,
    })
}
