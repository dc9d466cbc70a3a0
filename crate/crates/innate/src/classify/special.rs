use serde::Serialize;

use crate::perm::{
    coset_action, is_nonabelian_simple, is_two_transitive, minimal_normal_subgroups,
    normal_subgroups_with_abelian_quotient, perm_isomorphic_constrained, prime_power, GeneratedGroup, IsoConstraint,
    IsoWitness, PermError, Permutation,
};

use super::ClassifyError;

/// Cap on the abelianization of the socle's point stabilizer in [`oracle_special_scan`].
pub const SCAN_CAP: u128 = 10_000;

/// Default node budget for [`pairs_equivalent`].
pub const PAIR_BUDGET: u64 = 2_000_000;

/// The first condition of a special pair that fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FailedCondition {
    Not2Transitive,
    SocleNotSimple,
    RNotNormalInvariant,
    QuotientNotElemAbelian,
    ConjugationNotTransitive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialPairVerdict {
    pub holds: bool,
    /// `r = p^c` is the order of the quotient, when it is a prime power.
    pub p: Option<u64>,
    pub c: Option<u32>,
    pub failed_condition: Option<FailedCondition>,
}

impl SpecialPairVerdict {
    fn fail(cond: FailedCondition, pc: Option<(u128, u32)>) -> Self {
        SpecialPairVerdict {
            holds: false,
            p: pc.map(|(p, _)| p as u64),
            c: pc.map(|(_, c)| c),
            failed_condition: Some(cond),
        }
    }

    pub fn r(&self) -> Option<u64> {
        Some(self.p?.pow(self.c?))
    }
}

/// Product of the minimal normal subgroups.
pub fn socle(x: &GeneratedGroup) -> GeneratedGroup {
    let mins = minimal_normal_subgroups(x);
    let gens: Vec<Permutation> = mins.iter().flat_map(|m| m.generators().iter().cloned()).collect();
    GeneratedGroup::new(x.degree(), gens).expect("consistent degree")
}

/// Orbit of the coset with index `start` under conjugation by `xs`.
fn conjugation_orbit(m_sigma: &GeneratedGroup, r_sub: &GeneratedGroup, xs: &[Permutation]) -> Result<usize, PermError> {
    let cosets = coset_action(m_sigma, r_sub)?;
    let reps = cosets.space.representatives();
    let mut seen = vec![false; reps.len()];
    seen[1] = true;
    let mut stack = vec![1usize];
    let mut count = 1;
    while let Some(k) = stack.pop() {
        for x in xs {
            let j = cosets.space.locate(&reps[k].conjugate_by(x)).ok_or(PermError::NotSubgroup)?;
            if !seen[j] {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    Ok(count)
}

/// Tests whether `(x, r_sub)` is a special pair at the point `sigma`.
pub fn is_special_pair(
    x: &GeneratedGroup,
    r_sub: &GeneratedGroup,
    sigma: usize,
) -> Result<SpecialPairVerdict, ClassifyError> {
    use FailedCondition::*;
    if r_sub.generators().iter().any(|g| g.image(sigma) != sigma) {
        return Err(ClassifyError::SigmaNotFixed(sigma));
    }
    if !is_two_transitive(x) {
        return Ok(SpecialPairVerdict::fail(Not2Transitive, None));
    }
    let mins = minimal_normal_subgroups(x);
    if mins.len() != 1 || !is_nonabelian_simple(&mins[0]) {
        return Ok(SpecialPairVerdict::fail(SocleNotSimple, None));
    }
    let m_sigma = mins[0].stabilizer(sigma);
    let x_sigma = x.stabilizer(sigma);
    let nontrivial_proper = !r_sub.is_trivial() && r_sub.order() < m_sigma.order();
    if !nontrivial_proper
        || !r_sub.is_normal_in(&m_sigma)
        || !x_sigma.generators().iter().all(|g| r_sub.is_normalized_by(g))
    {
        return Ok(SpecialPairVerdict::fail(RNotNormalInvariant, None));
    }
    let index = m_sigma.order() / r_sub.order();
    let Some((p, c)) = prime_power(index) else {
        return Ok(SpecialPairVerdict::fail(QuotientNotElemAbelian, None));
    };
    let gens = m_sigma.generators();
    let abelian = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| r_sub.contains(&Permutation::commutator(a, b))));
    let exponent_p = gens.iter().all(|g| r_sub.contains(&g.pow(p as u64)));
    if !abelian || !exponent_p {
        return Ok(SpecialPairVerdict::fail(QuotientNotElemAbelian, Some((p, c))));
    }
    if index > 2 && conjugation_orbit(&m_sigma, r_sub, x_sigma.generators())? as u128 != index - 1 {
        return Ok(SpecialPairVerdict::fail(ConjugationNotTransitive, Some((p, c))));
    }
    Ok(SpecialPairVerdict {
        holds: true,
        p: Some(p as u64),
        c: Some(c),
        failed_condition: None,
    })
}

/// A candidate subgroup from [`oracle_special_scan`].
#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub r_sub: GeneratedGroup,
    /// Index of `r_sub` in the socle's point stabilizer.
    pub r: u128,
    pub verdict: SpecialPairVerdict,
}

/// Every normal subgroup of the socle's stabilizer of point 0 with prime-power index and
/// abelian quotient, with its verdict.
pub fn oracle_special_scan(x: &GeneratedGroup) -> Result<Vec<ScanEntry>, ClassifyError> {
    let s = socle(x);
    let m_sigma = s.stabilizer(0);
    let cands = normal_subgroups_with_abelian_quotient(&m_sigma, SCAN_CAP, SCAN_CAP)?;
    let mut out = Vec::new();
    for r_sub in cands {
        let r = m_sigma.order() / r_sub.order();
        if r == 1 || prime_power(r).is_none() {
            continue;
        }
        let verdict = is_special_pair(x, &r_sub, 0)?;
        out.push(ScanEntry { r_sub, r, verdict });
    }
    Ok(out)
}

/// A permutational isomorphism between `(g1, r1)` at `s1` and `(g2, r2)` at `s2` sending
/// `s1` to `s2` and `r1` onto `r2`.
pub fn pairs_equivalent(
    p1: (&GeneratedGroup, &GeneratedGroup, usize),
    p2: (&GeneratedGroup, &GeneratedGroup, usize),
    budget: u64,
) -> Result<IsoWitness, ClassifyError> {
    let (g1, r1, s1) = p1;
    let (g2, r2, s2) = p2;
    if g1.degree() != g2.degree() || g1.order() != g2.order() || r1.order() != r2.order() {
        return Err(PermError::NotFound.into());
    }
    let maps_r = |psi: &Permutation| r1.generators().iter().all(|g| r2.contains(&g.conjugate_by(psi)));
    let constraint = IsoConstraint {
        point: Some((s1, s2)),
        accept: Some(&maps_r),
    };
    Ok(perm_isomorphic_constrained(g1, g2, budget, &constraint)?)
}
