use std::collections::HashMap;

use super::{GeneratedGroup, LabeledAction, PermError, Permutation, PointLabel};

pub const DEFAULT_COSET_CAP: u128 = 1_000_000;

/// Right cosets `Rx` of a subgroup, with representatives and a lookup for arbitrary elements.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    subgroup: GeneratedGroup,
    reps: Vec<Permutation>,
    words: Vec<Vec<usize>>,
    /// Orbits of the subgroup, each as a list of points; used to bucket cosets.
    sub_orbits: Vec<Vec<usize>>,
    buckets: HashMap<Vec<u32>, Vec<usize>>,
}

impl CosetSpace {
    /// The images of the subgroup's orbits under `x` depend only on the coset `Rx`.
    fn key(&self, x: &Permutation) -> Vec<u32> {
        self.sub_orbits
            .iter()
            .map(|o| o.iter().map(|&p| x.image(p) as u32).min().unwrap())
            .collect()
    }

    /// Index of the coset containing `x`, if it has been enumerated.
    pub fn locate(&self, x: &Permutation) -> Option<usize> {
        let key = self.key(x);
        let candidates = self.buckets.get(&key)?;
        candidates
            .iter()
            .copied()
            .find(|&c| self.subgroup.contains(&x.compose(&self.reps[c].inverse())))
    }

    fn push(&mut self, x: Permutation, word: Vec<usize>) -> usize {
        let k = self.reps.len();
        self.buckets.entry(self.key(&x)).or_default().push(k);
        self.reps.push(x);
        self.words.push(word);
        k
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representative(&self, k: usize) -> &Permutation {
        &self.reps[k]
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    /// Generator indices whose product is the representative of coset `k`.
    pub fn word(&self, k: usize) -> &[usize] {
        &self.words[k]
    }

    pub fn subgroup(&self) -> &GeneratedGroup {
        &self.subgroup
    }
}

/// The action of a group on right cosets of a subgroup, with the coset machinery retained.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub action: LabeledAction,
    pub space: CosetSpace,
}

impl CosetAction {
    pub fn group(&self) -> GeneratedGroup {
        self.action.group()
    }

    /// Permutation of cosets induced by right multiplication with an element of the parent.
    pub fn induced(&self, x: &Permutation) -> Option<Permutation> {
        let images: Option<Vec<usize>> = self
            .space
            .reps
            .iter()
            .map(|rep| self.space.locate(&rep.compose(x)))
            .collect();
        Permutation::from_images(images?).ok()
    }
}

/// Right-multiplication action of `m` on the cosets of `r`, enumerated breadth-first from the
/// trivial coset over the generators in declaration order.
pub fn coset_action(m: &GeneratedGroup, r: &GeneratedGroup) -> Result<CosetAction, PermError> {
    coset_action_with_cap(m, r, DEFAULT_COSET_CAP)
}

pub fn coset_action_with_cap(
    m: &GeneratedGroup,
    r: &GeneratedGroup,
    cap: u128,
) -> Result<CosetAction, PermError> {
    if r.degree() != m.degree() || !m.contains_group(r) {
        return Err(PermError::NotSubgroup);
    }
    let index = m.order() / r.order();
    if index > cap {
        return Err(PermError::IndexOverflow { index, cap });
    }
    let n = m.degree();
    let mut space = CosetSpace {
        subgroup: r.clone(),
        reps: Vec::new(),
        words: Vec::new(),
        sub_orbits: r.orbits(),
        buckets: HashMap::new(),
    };
    space.push(Permutation::identity(n), Vec::new());
    let gens = m.generators();
    let mut images: Vec<Vec<usize>> = vec![Vec::with_capacity(index as usize); gens.len()];
    let mut k = 0;
    while k < space.len() {
        for (gi, g) in gens.iter().enumerate() {
            let y = space.reps[k].compose(g);
            let target = match space.locate(&y) {
                Some(t) => t,
                None => {
                    let mut word = space.words[k].clone();
                    word.push(gi);
                    space.push(y, word)
                }
            };
            images[gi].push(target);
        }
        k += 1;
    }
    debug_assert_eq!(space.len() as u128, index);
    let generators = images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>, _>>()?;
    let labels = space.words.iter().map(|w| PointLabel::Coset(w.clone())).collect();
    let names = (0..gens.len()).map(|i| format!("g{i}")).collect();
    let action = LabeledAction::new("cosets", labels, names, generators)?;
    Ok(CosetAction { action, space })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_on_cosets_of_point_stabilizer() {
        let s4 = GeneratedGroup::symmetric(4);
        let st = s4.stabilizer(0);
        let ca = coset_action(&s4, &st).unwrap();
        assert_eq!(ca.action.degree(), 4);
        assert_eq!(ca.group().order(), 24);
    }

    #[test]
    fn whole_group_gives_one_point() {
        let a5 = GeneratedGroup::alternating(5);
        let ca = coset_action(&a5, &a5).unwrap();
        assert_eq!(ca.action.degree(), 1);
    }

    #[test]
    fn non_subgroup_is_rejected() {
        let a4 = GeneratedGroup::alternating(4);
        let t = GeneratedGroup::new(4, vec![Permutation::from_cycles(4, &[vec![0, 1]]).unwrap()]).unwrap();
        assert!(matches!(coset_action(&a4, &t), Err(PermError::NotSubgroup)));
    }

    #[test]
    fn cap_is_enforced() {
        let s5 = GeneratedGroup::symmetric(5);
        let triv = GeneratedGroup::trivial(5);
        assert!(matches!(
            coset_action_with_cap(&s5, &triv, 100),
            Err(PermError::IndexOverflow { .. })
        ));
    }
}
