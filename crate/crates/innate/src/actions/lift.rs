//! Lifting automorphisms of a plinth to its coset action, and assembling the normalizer.

use crate::perm::{
    blocks_containing_zero, centralizer_in_symmetric, coset_action, CosetAction, GeneratedGroup, Homomorphism,
    Permutation,
};

use super::ActionError;

/// Largest index for which intermediate subgroups are enumerated.
pub const MAX_INTERMEDIATE_INDEX: u128 = 512;

/// An automorphism of the plinth, given by the images of the plinth's generators, with an
/// optional element `x` of the plinth satisfying `R^f = R^x`.
#[derive(Clone, Debug)]
pub struct AutLiftSpec {
    pub name: String,
    pub images: Vec<Permutation>,
    pub conjugator: Option<Permutation>,
}

impl AutLiftSpec {
    /// The automorphism induced by conjugation with `t`, an element normalizing the plinth.
    pub fn from_conjugation(name: impl Into<String>, plinth: &GeneratedGroup, t: &Permutation) -> Self {
        AutLiftSpec {
            name: name.into(),
            images: plinth.generators().iter().map(|g| g.conjugate_by(t)).collect(),
            conjugator: None,
        }
    }
}

/// One lift spec per nontrivial coset of `plinth` in `ambient` (which must normalize it).
pub fn outer_specs(ambient: &GeneratedGroup, plinth: &GeneratedGroup) -> Result<Vec<AutLiftSpec>, ActionError> {
    let cosets = coset_action(ambient, plinth)?;
    Ok(cosets
        .space
        .representatives()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, t)| AutLiftSpec::from_conjugation(format!("outer{k}"), plinth, t))
        .collect())
}

/// Finds `y` in the plinth with `R^y = target`, scanning coset representatives of `R`.
fn find_conjugator(cosets: &CosetAction, target: &GeneratedGroup, budget: u64) -> Option<Permutation> {
    let r = cosets.space.subgroup();
    if r.order() != target.order() {
        return None;
    }
    cosets
        .space
        .representatives()
        .iter()
        .take(budget as usize)
        .find(|y| {
            let y_inv = y.inverse();
            target.generators().iter().all(|s| r.contains(&y.compose(s).compose(&y_inv)))
        })
        .cloned()
}

/// Budget on candidate conjugators scanned by [`lift_automorphism`].
pub const LIFT_BUDGET: u64 = 1_000_000;

/// The permutation `R m -> R y m^f` of the cosets of `R`, where `R^f = R^y`. It normalizes the
/// plinth's coset action, inducing `f` on it. Fails with `NotLiftable` when `R^f` is not
/// conjugate to `R` in the plinth.
pub fn lift_automorphism(
    plinth: &GeneratedGroup,
    cosets: &CosetAction,
    spec: &AutLiftSpec,
) -> Result<Permutation, ActionError> {
    let hom = Homomorphism::new(plinth, &spec.images).map_err(|_| ActionError::NotAutomorphism(spec.name.clone()))?;
    if !spec.images.iter().all(|g| plinth.contains(g)) {
        return Err(ActionError::NotAutomorphism(spec.name.clone()));
    }
    let r = cosets.space.subgroup();
    let r_image = GeneratedGroup::new(
        plinth.degree(),
        r.generators().iter().map(|g| hom.image(g).expect("R lies in the plinth")).collect(),
    )?;
    let y = match &spec.conjugator {
        Some(x) => x.clone(),
        None => find_conjugator(cosets, &r_image, LIFT_BUDGET).ok_or_else(|| ActionError::NotLiftable(spec.name.clone()))?,
    };
    let images: Vec<usize> = cosets
        .space
        .representatives()
        .iter()
        .map(|m| {
            let fm = hom.image(m).expect("representatives lie in the plinth");
            cosets.space.locate(&y.compose(&fm)).ok_or_else(|| ActionError::NotLiftable(spec.name.clone()))
        })
        .collect::<Result<_, _>>()?;
    let pi = Permutation::from_images(images).map_err(|_| ActionError::NotLiftable(spec.name.clone()))?;
    let plinth_omega = cosets.group();
    if !plinth_omega.is_normalized_by(&pi) {
        return Err(ActionError::NotLiftable(spec.name.clone()));
    }
    Ok(pi)
}

/// The plinth's coset action, its full centralizer `C` in the symmetric group, the lifts
/// of each spec, and `N = <C, M, lifts>`.
#[derive(Clone, Debug)]
pub struct NormalizerData {
    pub plinth: GeneratedGroup,
    pub centralizer: GeneratedGroup,
    pub lifts: Vec<(String, Option<Permutation>)>,
    pub normalizer: GeneratedGroup,
}

impl NormalizerData {
    /// `C x M`.
    pub fn base_group(&self) -> GeneratedGroup {
        self.plinth.join(self.centralizer.generators())
    }
}

pub fn normalizer_over_plinth(
    plinth: &GeneratedGroup,
    cosets: &CosetAction,
    specs: &[AutLiftSpec],
) -> Result<NormalizerData, ActionError> {
    let m_omega = cosets.group();
    let centralizer = centralizer_in_symmetric(&m_omega)?;
    let mut lifts = Vec::new();
    for spec in specs {
        match lift_automorphism(plinth, cosets, spec) {
            Ok(pi) => lifts.push((spec.name.clone(), Some(pi))),
            Err(ActionError::NotLiftable(_)) => lifts.push((spec.name.clone(), None)),
            Err(e) => return Err(e),
        }
    }
    let mut gens = m_omega.generators().to_vec();
    gens.extend(centralizer.generators().iter().cloned());
    gens.extend(lifts.iter().filter_map(|(_, p)| p.clone()));
    let normalizer = GeneratedGroup::new(m_omega.degree(), gens)?;
    Ok(NormalizerData {
        plinth: m_omega,
        centralizer,
        lifts,
        normalizer,
    })
}

/// Every subgroup `K` with `h <= K <= n`, from the blocks containing the trivial coset in
/// the action of `n` on the cosets of `h`. Sorted by order.
pub fn intermediate_subgroups(n: &GeneratedGroup, h: &GeneratedGroup) -> Result<Vec<GeneratedGroup>, ActionError> {
    if !n.contains_group(h) {
        return Err(ActionError::Perm(crate::perm::PermError::NotSubgroup));
    }
    let index = n.order() / h.order();
    if index > MAX_INTERMEDIATE_INDEX {
        return Err(ActionError::IndexTooLarge(index));
    }
    let cosets = coset_action(n, h)?;
    let mut out: Vec<GeneratedGroup> = blocks_containing_zero(&cosets.action.generators, index as usize)
        .into_iter()
        .map(|block| {
            let reps: Vec<Permutation> = block.iter().map(|&k| cosets.space.representative(k).clone()).collect();
            h.join(&reps)
        })
        .collect();
    out.sort_by_key(GeneratedGroup::order);
    Ok(out)
}
