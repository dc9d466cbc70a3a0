//! Normal subgroups: exact lattice search for element-enumerable groups, and a
//! normal-closure descent for larger ones.

use std::collections::HashMap;

use super::blocks::blocks_containing_zero;
use super::centralizer::centralizer_in_symmetric;
use super::coset::coset_action_with_cap;
use super::{GeneratedGroup, PermError, Permutation};

/// Groups up to this order are handled by explicit element enumeration.
pub const SMALL_GROUP_CAP: u128 = 10_000;

/// Conjugacy classes of a small group, each given as its list of elements.
pub fn conjugacy_classes(h: &GeneratedGroup, cap: u128) -> Result<Vec<Vec<Permutation>>, PermError> {
    let elements = h.elements(cap)?;
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut classes = Vec::new();
    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.sort_by(|&a, &b| elements[a].cmp(&elements[b]));
    for start in order {
        if class_of[start] != usize::MAX {
            continue;
        }
        let c = classes.len();
        class_of[start] = c;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            let x = &elements[members[k]];
            for g in h.generators() {
                let y = index[&x.conjugate_by(g)];
                if class_of[y] == usize::MAX {
                    class_of[y] = c;
                    members.push(y);
                }
            }
            k += 1;
        }
        classes.push(members.into_iter().map(|i| elements[i].clone()).collect());
    }
    Ok(classes)
}

fn class_key(n: &GeneratedGroup, reps: &[Permutation]) -> Vec<bool> {
    reps.iter().map(|r| n.contains(r)).collect()
}

/// Every normal subgroup of `h` of index at most `max_index`, ordered by increasing order.
pub fn normal_subgroups_up_to_index(h: &GeneratedGroup, max_index: u128) -> Result<Vec<GeneratedGroup>, PermError> {
    normal_subgroups_with_cap(h, max_index, SMALL_GROUP_CAP)
}

pub fn normal_subgroups_with_cap(
    h: &GeneratedGroup,
    max_index: u128,
    cap: u128,
) -> Result<Vec<GeneratedGroup>, PermError> {
    let classes = conjugacy_classes(h, cap)?;
    let reps: Vec<Permutation> = classes.iter().map(|c| c[0].clone()).collect();
    let closures: Vec<GeneratedGroup> = reps
        .iter()
        .filter(|r| !r.is_identity())
        .map(|r| h.normal_closure(std::slice::from_ref(r)))
        .collect();
    let trivial = GeneratedGroup::trivial(h.degree());
    let mut found = vec![(class_key(&trivial, &reps), trivial)];
    let mut k = 0;
    while k < found.len() {
        let (key, n) = found[k].clone();
        for c in &closures {
            let ckey = class_key(c, &reps);
            if ckey.iter().zip(&key).all(|(a, b)| !a || *b) {
                continue;
            }
            let joined = n.join(c.generators());
            let jkey = class_key(&joined, &reps);
            if !found.iter().any(|(fk, _)| *fk == jkey) {
                found.push((jkey, joined));
            }
        }
        k += 1;
    }
    let order = h.order();
    let mut out: Vec<GeneratedGroup> = found
        .into_iter()
        .map(|(_, n)| n)
        .filter(|n| order / n.order() <= max_index)
        .collect();
    out.sort_by_key(|n| n.order());
    Ok(out)
}

/// Normal subgroups `R` of `h` with `h/R` abelian and `|h:R| <= max_index`; works for large
/// `h` as long as `|h : h'|` stays below `cap`.
pub fn normal_subgroups_with_abelian_quotient(
    h: &GeneratedGroup,
    max_index: u128,
    cap: u128,
) -> Result<Vec<GeneratedGroup>, PermError> {
    let derived = h.derived_subgroup();
    let ab_order = h.order() / derived.order();
    if ab_order > cap {
        return Err(PermError::GroupTooLarge { order: ab_order, cap });
    }
    let cosets = coset_action_with_cap(h, &derived, cap)?;
    let q = cosets.action.generators.clone();
    let mut out = Vec::new();
    for block in blocks_containing_zero(&q, ab_order as usize) {
        let index = ab_order / block.len() as u128;
        if index > max_index {
            continue;
        }
        let extra: Vec<Permutation> = block
            .iter()
            .map(|&p| cosets.space.representative(p).clone())
            .collect();
        out.push(derived.join(&extra));
    }
    out.sort_by_key(|n| std::cmp::Reverse(n.order()));
    Ok(out)
}

/// Prime-order powers of `x`.
fn prime_order_powers(x: &Permutation) -> Vec<Permutation> {
    let ord = x.order();
    let mut out = Vec::new();
    let mut m = ord;
    let mut p = 2;
    while m > 1 {
        if m % p == 0 {
            out.push(x.pow(ord / p));
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    out
}

/// Deterministic element sample used to probe a group for smaller normal subgroups.
fn probe_elements(k: &GeneratedGroup) -> Vec<Permutation> {
    let strong: Vec<Permutation> = k.chain().strong_generators().iter().take(24).cloned().collect();
    let mut base = strong.clone();
    for w in strong.windows(2) {
        base.push(w[0].compose(&w[1]));
    }
    for i in 0..strong.len().min(8) {
        for j in i + 1..strong.len().min(8) {
            base.push(Permutation::commutator(&strong[i], &strong[j]));
        }
    }
    if k.is_transitive() {
        if let Ok(c) = centralizer_in_symmetric(k) {
            base.extend(c.generators().iter().filter(|z| k.contains(z)).cloned());
        }
    }
    let mut out = Vec::new();
    for x in base.into_iter().filter(|x| !x.is_identity()) {
        for y in prime_order_powers(&x) {
            if !out.contains(&y) {
                out.push(y);
            }
        }
    }
    out
}

fn keep_minimal(cands: Vec<GeneratedGroup>) -> Vec<GeneratedGroup> {
    let mut uniq: Vec<GeneratedGroup> = Vec::new();
    for c in cands {
        if c.order() > 1 && !uniq.iter().any(|u| u.same_group(&c)) {
            uniq.push(c);
        }
    }
    let minimal: Vec<GeneratedGroup> = uniq
        .iter()
        .filter(|n| {
            !uniq
                .iter()
                .any(|k| k.order() < n.order() && n.contains_group(k))
        })
        .cloned()
        .collect();
    let mut minimal = minimal;
    minimal.sort_by_key(|n| n.order());
    minimal
}

/// Minimal normal subgroups, from normal closures of single elements pruned by containment.
///
/// Exact for groups of order at most [`SMALL_GROUP_CAP`] (one closure per conjugacy class).
/// Larger groups are probed with a deterministic element sample (strong generators, their
/// products and commutators, and central or centralizing elements for transitive
/// candidates), raised to prime order, followed by descent until no probe yields a smaller
/// normal closure.
pub fn minimal_normal_subgroups(g: &GeneratedGroup) -> Vec<GeneratedGroup> {
    if g.order() == 1 {
        return Vec::new();
    }
    if g.order() <= SMALL_GROUP_CAP {
        let classes = conjugacy_classes(g, SMALL_GROUP_CAP).expect("order checked");
        let cands = classes
            .iter()
            .filter(|c| !c[0].is_identity())
            .map(|c| g.normal_closure(&c[..1]))
            .collect();
        return keep_minimal(cands);
    }
    let mut found: Vec<GeneratedGroup> = Vec::new();
    let mut pool: Vec<GeneratedGroup> = probe_elements(g)
        .iter()
        .map(|x| g.normal_closure(std::slice::from_ref(x)))
        .collect();
    while let Some(start) = pool.pop() {
        let n = descend(g, start);
        if found.iter().any(|f| f.same_group(&n)) {
            continue;
        }
        if n.is_transitive() {
            if let Ok(c) = centralizer_in_symmetric(&n) {
                for z in c.generators().iter().filter(|z| g.contains(z)) {
                    for y in prime_order_powers(z) {
                        pool.push(g.normal_closure(&[y]));
                    }
                }
            }
        }
        found.push(n);
    }
    keep_minimal(found)
}

fn descend(g: &GeneratedGroup, mut n: GeneratedGroup) -> GeneratedGroup {
    loop {
        let smaller = probe_elements(&n)
            .into_iter()
            .map(|x| g.normal_closure(&[x]))
            .find(|k| k.order() < n.order());
        match smaller {
            Some(k) => n = k,
            None => return n,
        }
    }
}

/// `true` iff `s` is nonabelian and no probe produces a proper nontrivial normal subgroup.
/// Exact for groups within [`SMALL_GROUP_CAP`].
pub fn is_nonabelian_simple(s: &GeneratedGroup) -> bool {
    if s.order() == 1 || s.is_abelian() {
        return false;
    }
    let mins = minimal_normal_subgroups(s);
    mins.len() == 1 && mins[0].order() == s.order()
}

/// `Some((p, c))` when `n = p^c` with `p` prime.
pub fn prime_power(n: u128) -> Option<(u128, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    let mut c = 0;
    while m % p == 0 {
        m /= p;
        c += 1;
    }
    (m == 1).then_some((p, c))
}
