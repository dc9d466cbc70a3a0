use std::collections::{BTreeSet, HashMap};

use crate::actions::{projective_domain, scaled_projective_action};
use crate::algebra::{Elem, FiniteField};
use crate::classify::IncidenceStructure;
use crate::perm::{quotient_on_blocks, GeneratedGroup, Permutation};

use super::CatalogError;

/// A partial linear space with a group preserving it.
#[derive(Clone, Debug)]
pub struct Example {
    pub design: IncidenceStructure,
    pub group: GeneratedGroup,
}

/// Generators of the automorphism group of the design on `Z_14`: the translation and one
/// further automorphism found by an exhaustive search over line-preserving bijections.
const Z14_GENERATORS: [[usize; 14]; 2] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 0],
    [0, 1, 5, 10, 6, 2, 4, 7, 8, 12, 3, 13, 9, 11],
];

/// Points `Z_14`, lines `{x, x+1, x+4, x+6}`.
pub fn example_z14_design() -> Result<Example, CatalogError> {
    let lines = (0..14).map(|x| [0, 1, 4, 6].iter().map(|d| (x + d) % 14).collect()).collect();
    let design = IncidenceStructure::new(14, lines)?;
    let gens = Z14_GENERATORS
        .iter()
        .map(|images| Permutation::from_images(images.to_vec()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Example {
        design,
        group: GeneratedGroup::new(14, gens)?,
    })
}

/// The 15 points of `PG(3,2)`, seen as the nonzero vectors of `GF(4)^2`, with every line
/// except the five `GF(4)`-lines of the Desarguesian spread; the group is `ΓL(2,4)`.
pub fn example_spread_design() -> Result<Example, CatalogError> {
    let f = FiniteField::new(2, 2)?;
    let scaled = scaled_projective_action(2, &f, 3)?;
    let n = scaled.action.degree();
    let domain = projective_domain(&f, 2);
    let vectors: Vec<Vec<Elem>> = (0..n)
        .map(|pt| {
            let scale = f.exp((pt % 3) as i64);
            domain.point(pt / 3).iter().map(|&x| f.mul(scale, x)).collect()
        })
        .collect();
    let index: HashMap<&Vec<Elem>, usize> = vectors.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut lines = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            if scaled.cells.cell_of(a) == scaled.cells.cell_of(b) {
                continue;
            }
            let sum: Vec<Elem> = vectors[a].iter().zip(&vectors[b]).map(|(&x, &y)| f.add(x, y)).collect();
            let mut line = vec![a, b, index[&sum]];
            line.sort_unstable();
            lines.insert(line);
        }
    }
    let design = IncidenceStructure::new(n, lines.into_iter().collect())?;
    Ok(Example {
        design,
        group: scaled.action.group(),
    })
}

/// `C_2 x PSL(2,5)` on 12 points.
pub fn example_pit_on_twelve() -> Result<GeneratedGroup, CatalogError> {
    let f = FiniteField::new(5, 1)?;
    Ok(scaled_projective_action(2, &f, 2)?.action.group_named(&["sl", "z"]))
}

/// The two groups `C_i x PSL(2,25)` for `i = 2, 3` and their actions on the 26 cells.
#[derive(Clone, Debug)]
pub struct PhiComparison {
    pub groups: Vec<GeneratedGroup>,
    pub cell_actions: Vec<GeneratedGroup>,
}

impl PhiComparison {
    pub fn images_equal(&self) -> bool {
        self.cell_actions.windows(2).all(|w| w[0].same_group(&w[1]))
    }
}

pub fn phi_images_on_26() -> Result<PhiComparison, CatalogError> {
    let f = FiniteField::new(5, 2)?;
    let mut groups = Vec::new();
    let mut cell_actions = Vec::new();
    for r in [2, 3] {
        let s = scaled_projective_action(2, &f, r)?;
        let g = s.action.group_named(&["sl", "z"]);
        cell_actions.push(quotient_on_blocks(&g, &s.cells)?.quotient_group);
        groups.push(g);
    }
    Ok(PhiComparison { groups, cell_actions })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spread_design_shape() {
        let ex = example_spread_design().unwrap();
        assert_eq!(ex.design.points(), 15);
        assert_eq!(ex.design.lines().len(), 30);
        assert_eq!(ex.group.order(), 360);
    }

    #[test]
    fn z14_group_order() {
        let ex = example_z14_design().unwrap();
        assert_eq!(ex.group.order(), 336);
        assert_eq!(ex.design.lines().len(), 14);
    }
}
