use std::collections::HashMap;
use std::path::Path;

use serde::Serialize;

use crate::actions::{
    isotropic_action, outer_specs, projective_action, semilinear_projective_action, AutLiftSpec, FormType,
    SymplecticActions,
};
use crate::algebra::{sl_generators, FiniteField};
use crate::classify::SCAN_CAP;
use crate::perm::{normal_subgroups_with_abelian_quotient, GeneratedGroup, Permutation};

use super::ingest::ingest_generators;
use super::CatalogError;

/// How to build the plinth `M` on a convenient faithful domain, with its outer automorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PlinthRecipe {
    /// `PSL(d, p^a)` on projective points; automorphisms from `PΓL`, plus the
    /// inverse-transpose automorphism when `graph` is set.
    Linear { d: usize, p: u32, a: u32, graph: bool },
    /// `PSU(3, q)` on isotropic points, where `p^a = q^2`; automorphisms from `PΓU`.
    Unitary { p: u32, a: u32 },
    /// `A_n` on `n` points; automorphisms from `S_n`.
    Alternating { n: usize },
    /// `Sp(2d, 2)` on the quadratic forms of one type; no outer automorphisms.
    Symplectic { d: usize, eps: FormType },
    /// Generators read from a file, with the certified group order; no outer automorphisms.
    DataFile { file: String, order: u128 },
}

/// The stabilizer `M_sigma` of a point of the cell domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SigmaRecipe {
    Point(usize),
    /// Setwise stabilizer of a family of subsets (a pair, a partition, a flag).
    Family(Vec<Vec<usize>>),
    /// Normalizer of the cyclic group generated by the first element of this order.
    CyclicNormalizer { order: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RShape {
    Any,
    Cyclic,
    NonCyclic,
}

/// The point stabilizer `R` of the final action: a normal subgroup of `M_sigma` with abelian
/// quotient of order `index`, of the given shape; the first in enumeration order wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RRecipe {
    pub index: u128,
    pub shape: RShape,
}

/// The ingredients of one catalog construction.
#[derive(Clone, Debug)]
pub struct Construction {
    pub plinth: GeneratedGroup,
    pub specs: Vec<AutLiftSpec>,
    pub m_sigma: GeneratedGroup,
    pub r_sub: GeneratedGroup,
}

fn linear_plinth(d: usize, p: u32, a: u32, graph: bool) -> Result<(GeneratedGroup, Vec<AutLiftSpec>), CatalogError> {
    let f = FiniteField::new(p, a)?;
    let full = semilinear_projective_action(d, &f)?;
    let plinth = full.group_named(&["sl"]);
    let mut specs = outer_specs(&full.group(), &plinth)?;
    if graph {
        let sl = sl_generators(d, &f)?;
        let dual = sl
            .matrices
            .iter()
            .map(|m| Ok(m.inverse(&f)?.transpose()))
            .collect::<Result<Vec<_>, CatalogError>>()?;
        let direct = projective_action(&f, &sl.matrices)?.generators;
        let images = projective_action(&f, &dual)?.generators;
        let table: HashMap<&Permutation, &Permutation> = direct.iter().zip(&images).collect();
        let images = plinth
            .generators()
            .iter()
            .map(|g| table.get(g).map(|&x| x.clone()))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| CatalogError::RecipeFailed("inverse-transpose images".into()))?;
        specs.push(AutLiftSpec {
            name: "graph".into(),
            images,
            conjugator: None,
        });
    }
    Ok((plinth, specs))
}

fn plinth_and_specs(recipe: &PlinthRecipe, data_dir: &Path) -> Result<(GeneratedGroup, Vec<AutLiftSpec>), CatalogError> {
    match recipe {
        &PlinthRecipe::Linear { d, p, a, graph } => linear_plinth(d, p, a, graph),
        &PlinthRecipe::Unitary { p, a } => {
            let full = isotropic_action(&FiniteField::new(p, a)?)?;
            let plinth = full.group_named(&["su"]);
            let specs = outer_specs(&full.group(), &plinth)?;
            Ok((plinth, specs))
        }
        &PlinthRecipe::Alternating { n } => {
            let plinth = GeneratedGroup::alternating(n);
            let specs = outer_specs(&GeneratedGroup::symmetric(n), &plinth)?;
            Ok((plinth, specs))
        }
        &PlinthRecipe::Symplectic { d, eps } => {
            let plinth = SymplecticActions::new(d)?.form_action(eps)?.group();
            Ok((plinth, Vec::new()))
        }
        PlinthRecipe::DataFile { file, order } => {
            let plinth = ingest_generators(&data_dir.join(file), Some(*order))?;
            Ok((plinth, Vec::new()))
        }
    }
}

fn canonical(family: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = family
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s
        })
        .collect();
    out.sort();
    out
}

/// Stabilizer of `family` in `m`, through the action on the orbit of `family` appended to
/// the original domain.
fn family_stabilizer(m: &GeneratedGroup, family: &[Vec<usize>]) -> Result<GeneratedGroup, CatalogError> {
    let start = canonical(family);
    let mut index = HashMap::from([(start.clone(), 0usize)]);
    let mut orbit = vec![start];
    let mut k = 0;
    while k < orbit.len() {
        for g in m.generators() {
            let image: Vec<Vec<usize>> = orbit[k].iter().map(|s| s.iter().map(|&x| g.image(x)).collect()).collect();
            let image = canonical(&image);
            if !index.contains_key(&image) {
                index.insert(image.clone(), orbit.len());
                orbit.push(image);
            }
        }
        k += 1;
    }
    let n = m.degree();
    let extended = m
        .generators()
        .iter()
        .map(|g| {
            let mut images: Vec<usize> = (0..n).map(|x| g.image(x)).collect();
            for fam in &orbit {
                let image: Vec<Vec<usize>> = fam.iter().map(|s| s.iter().map(|&x| g.image(x)).collect()).collect();
                images.push(n + index[&canonical(&image)]);
            }
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let big = GeneratedGroup::new(n + orbit.len(), extended)?;
    let stab = big.stabilizer(n);
    Ok(GeneratedGroup::new(n, stab.generators().iter().map(|g| g.restrict(n)).collect())?)
}

fn cyclic_normalizer(m: &GeneratedGroup, order: u64) -> Result<GeneratedGroup, CatalogError> {
    let mut elements = m.elements(SCAN_CAP)?;
    elements.sort();
    let x = elements
        .iter()
        .find(|e| e.order() == order)
        .cloned()
        .ok_or_else(|| CatalogError::RecipeFailed(format!("no element of order {order}")))?;
    let cyclic = GeneratedGroup::new(m.degree(), vec![x.clone()])?;
    let normalizing = elements.into_iter().filter(|y| cyclic.contains(&x.conjugate_by(y))).collect();
    Ok(GeneratedGroup::new(m.degree(), normalizing)?)
}

fn is_cyclic(g: &GeneratedGroup) -> Result<bool, CatalogError> {
    let n = g.order();
    Ok(g.elements(SCAN_CAP)?.iter().any(|e| e.order() as u128 == n))
}

fn choose_r(m_sigma: &GeneratedGroup, recipe: RRecipe) -> Result<GeneratedGroup, CatalogError> {
    let candidates = normal_subgroups_with_abelian_quotient(m_sigma, recipe.index, SCAN_CAP)?;
    for cand in candidates {
        if m_sigma.order() / cand.order() != recipe.index {
            continue;
        }
        let keep = match recipe.shape {
            RShape::Any => true,
            RShape::Cyclic => is_cyclic(&cand)?,
            RShape::NonCyclic => !is_cyclic(&cand)?,
        };
        if keep {
            return Ok(cand);
        }
    }
    Err(CatalogError::RecipeFailed(format!(
        "index {} subgroup of shape {:?}",
        recipe.index, recipe.shape
    )))
}

pub fn build_construction(
    plinth: &PlinthRecipe,
    sigma: &SigmaRecipe,
    r: RRecipe,
    data_dir: &Path,
) -> Result<Construction, CatalogError> {
    let (plinth, specs) = plinth_and_specs(plinth, data_dir)?;
    let m_sigma = match sigma {
        &SigmaRecipe::Point(p) => plinth.stabilizer(p),
        SigmaRecipe::Family(family) => family_stabilizer(&plinth, family)?,
        &SigmaRecipe::CyclicNormalizer { order } => cyclic_normalizer(&plinth, order)?,
    };
    let r_sub = choose_r(&m_sigma, r)?;
    Ok(Construction {
        plinth,
        specs,
        m_sigma,
        r_sub,
    })
}
