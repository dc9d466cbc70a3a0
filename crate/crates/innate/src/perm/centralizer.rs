use super::{GeneratedGroup, PermError, Permutation};

/// The unique element of the centralizer of transitive `m` sending 0 to `beta`,
/// provided `beta` is fixed by the stabilizer of 0.
fn centralizing_element(m: &GeneratedGroup, beta: usize) -> Option<Permutation> {
    let n = m.degree();
    let mut image = vec![usize::MAX; n];
    image[0] = beta;
    let mut queue = vec![0usize];
    let mut k = 0;
    while k < queue.len() {
        let p = queue[k];
        for g in m.generators() {
            let (q, target) = (g.image(p), g.image(image[p]));
            if image[q] == usize::MAX {
                image[q] = target;
                queue.push(q);
            } else if image[q] != target {
                return None;
            }
        }
        k += 1;
    }
    Permutation::from_images(image).ok()
}

/// Centralizer in `Sym(n)` of a transitive group, from witnesses normalizing the
/// stabilizer of point 0: witness `w` contributes the map `0^x -> 0^(w x)`.
pub fn centralizer_of_transitive(
    m: &GeneratedGroup,
    witnesses: &[Permutation],
) -> Result<GeneratedGroup, PermError> {
    if !m.is_transitive() {
        return Err(PermError::NotTransitive);
    }
    let m0 = m.stabilizer(0);
    let mut gens = Vec::new();
    for w in witnesses {
        if !m0.generators().iter().all(|s| m0.contains(&s.conjugate_by(w))) {
            return Err(PermError::WitnessNotNormalizing);
        }
        let c = centralizing_element(m, w.image(0)).ok_or(PermError::WitnessNotNormalizing)?;
        gens.push(c);
    }
    GeneratedGroup::new(m.degree(), gens)
}

/// Full centralizer in `Sym(n)` of a transitive group: one element per fixed point of
/// the stabilizer of 0. The result lists all its elements as generators.
pub fn centralizer_in_symmetric(m: &GeneratedGroup) -> Result<GeneratedGroup, PermError> {
    if !m.is_transitive() {
        return Err(PermError::NotTransitive);
    }
    let m0 = m.stabilizer(0);
    let n = m.degree();
    let gens: Vec<Permutation> = (1..n)
        .filter(|&b| m0.generators().iter().all(|s| s.image(b) == b))
        .filter_map(|b| centralizing_element(m, b))
        .collect();
    GeneratedGroup::new(n, gens)
}

/// `true` iff no nonidentity generator-closed element fixes a point.
pub fn is_semiregular(g: &GeneratedGroup) -> bool {
    g.orbits()
        .iter()
        .all(|o| g.stabilizer(o[0]).order() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_cyclic_group_is_self_centralizing() {
        let c5 = GeneratedGroup::new(5, vec![Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap()])
            .unwrap();
        let c = centralizer_in_symmetric(&c5).unwrap();
        assert_eq!(c.order(), 5);
        assert!(is_semiregular(&c));
    }

    #[test]
    fn primitive_group_has_trivial_centralizer() {
        let a5 = GeneratedGroup::alternating(5);
        assert_eq!(centralizer_in_symmetric(&a5).unwrap().order(), 1);
    }

    #[test]
    fn non_normalizing_witness_is_rejected() {
        let s3 = GeneratedGroup::symmetric(3);
        let w = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        assert!(matches!(
            centralizer_of_transitive(&s3, &[w]),
            Err(PermError::WitnessNotNormalizing)
        ));
    }
}
