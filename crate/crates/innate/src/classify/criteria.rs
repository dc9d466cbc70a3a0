use serde::Serialize;

use crate::perm::{augment_with_cells, rank, GeneratedGroup, Permutation};

use super::pit::{phi_hat, PitDecomposition};
use super::special::is_special_pair;
use super::ClassifyError;

/// The rank together with the four equivalent reformulations of rank 3, each evaluated
/// independently. Here `alpha = 0` lies in the cell `sigma`, and `sigma'` is the cell of
/// the least point outside `sigma`, with least point `alpha'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rank3Criteria {
    pub rank: usize,
    /// Rank is 3.
    pub a: bool,
    /// `G_alpha` is transitive off `sigma`.
    pub b: bool,
    /// `G_(alpha, sigma')` is transitive on `sigma'`.
    pub c: bool,
    /// `G_(sigma, sigma')` is transitive on `sigma x sigma'`.
    pub d: bool,
    /// `G_(sigma, sigma') = G_(sigma, alpha') G_(alpha, sigma')`.
    pub e: bool,
}

impl Rank3Criteria {
    pub fn agree(&self) -> bool {
        [self.b, self.c, self.d, self.e].iter().all(|&x| x == self.a)
    }
}

/// `true` iff the quotient is `PΓL(2,8)` on 28 points, where the criteria need not agree.
fn is_line7_quotient(q: &GeneratedGroup) -> bool {
    q.degree() == 28 && q.order() == 1512
}

fn restrict(g: &GeneratedGroup, n: usize) -> GeneratedGroup {
    GeneratedGroup::new(n, g.generators().iter().map(|x| x.restrict(n)).collect()).expect("consistent degree")
}

fn pair_orbit_size(gens: &[Permutation], n: usize, a: usize, b: usize) -> usize {
    let mut seen = std::collections::HashSet::from([(a, b)]);
    let mut stack = vec![(a, b)];
    while let Some((x, y)) = stack.pop() {
        for g in gens {
            let next = (g.image(x), g.image(y));
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    debug_assert!(seen.len() <= n * n);
    seen.len()
}

/// Rank and the criteria record. Fails with `PreconditionFailed` unless the cell action with
/// the image of the plinth's point stabilizer is a special pair other than the `PΓL(2,8)` one.
pub fn rank3_criteria(d: &PitDecomposition) -> Result<Rank3Criteria, ClassifyError> {
    let g = &d.group;
    let raw_rank = rank(g)?;
    let ph = phi_hat(d);
    if is_line7_quotient(&ph.quotient) || !is_special_pair(&ph.quotient, &ph.r_sub, ph.sigma)?.holds {
        return Err(ClassifyError::PreconditionFailed { rank: raw_rank });
    }
    let n = g.degree();
    let r = d.r;
    let cells = d.blocks.cells();
    let sigma = d.sigma;
    let sigma2 = (0..cells.len()).find(|&k| k != sigma).expect("at least two cells");
    let alpha2 = cells[sigma2][0];
    let aug = GeneratedGroup::new(n + cells.len(), augment_with_cells(g.generators(), &d.blocks)?)?;
    let (cell_s, cell_s2) = (n + sigma, n + sigma2);

    let g_alpha = g.stabilizer(0);
    let b = g_alpha.orbit(alpha2).len() == n - r;
    let g_alpha_s2 = restrict(&aug.pointwise_stabilizer(&[0, cell_s2]), n);
    let c = g_alpha_s2.orbit(alpha2).len() == r;
    let g_s_s2 = restrict(&aug.pointwise_stabilizer(&[cell_s, cell_s2]), n);
    let d_ok = pair_orbit_size(g_s_s2.generators(), n, 0, alpha2) == r * r;
    let g_s_a2 = aug.pointwise_stabilizer(&[cell_s, alpha2]).order();
    let g_a_a2 = g.pointwise_stabilizer(&[0, alpha2]).order();
    let e = g_s_a2 * g_alpha_s2.order() == g_s_s2.order() * g_a_a2;
    Ok(Rank3Criteria {
        rank: raw_rank,
        a: raw_rank == 3,
        b,
        c,
        d: d_ok,
        e,
    })
}

/// `true` iff `r_sub` is transitive on the points other than `sigma`.
pub fn r_transitive_off_sigma(r_sub: &GeneratedGroup, sigma: usize) -> bool {
    let n = r_sub.degree();
    let start = if sigma == 0 { 1 } else { 0 };
    n > 1 && r_sub.orbit(start).len() == n - 1
}
