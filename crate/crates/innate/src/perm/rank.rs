use super::group::orbits_under;
use super::{GeneratedGroup, PermError};

/// Number of orbits of the stabilizer of point 0.
pub fn rank(g: &GeneratedGroup) -> Result<usize, PermError> {
    Ok(suborbit_lengths(g)?.len())
}

/// Sorted orbit lengths of the stabilizer of point 0.
pub fn suborbit_lengths(g: &GeneratedGroup) -> Result<Vec<usize>, PermError> {
    if !g.is_transitive() {
        return Err(PermError::NotTransitive);
    }
    let chain = g.chain_with_prefix(&[0]);
    let mut lens: Vec<usize> = orbits_under(chain.level_generators(1), g.degree())
        .iter()
        .map(Vec::len)
        .collect();
    lens.sort_unstable();
    Ok(lens)
}

/// Number of orbits on ordered pairs, by direct search.
pub fn orbital_count(g: &GeneratedGroup) -> usize {
    let n = g.degree();
    let mut seen = vec![false; n * n];
    let mut count = 0;
    for start in 0..n * n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            let (a, b) = (x / n, x % n);
            for s in g.generators() {
                let y = s.image(a) * n + s.image(b);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

pub fn is_two_transitive(g: &GeneratedGroup) -> bool {
    g.degree() > 1 && matches!(rank(g), Ok(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_of_small_groups() {
        assert_eq!(rank(&GeneratedGroup::symmetric(5)).unwrap(), 2);
        assert_eq!(orbital_count(&GeneratedGroup::symmetric(5)), 2);
        let c5 = GeneratedGroup::new(
            5,
            vec![super::super::Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap()],
        )
        .unwrap();
        assert_eq!(rank(&c5).unwrap(), 5);
        assert_eq!(orbital_count(&c5), 5);
    }

    #[test]
    fn intransitive_rank_fails() {
        let g = GeneratedGroup::trivial(3);
        assert!(matches!(rank(&g), Err(PermError::NotTransitive)));
    }
}
