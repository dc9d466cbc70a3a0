//! Property checks shared by the property suites and the acceptance run.

#![allow(dead_code)]

use std::collections::HashSet;

use innate::actions::{
    dickson_class, intermediate_subgroups, linear_semilinear_generators, projective_domain, ree3_line7_action,
    outer_specs, normalizer_over_plinth, scaled_projective_action, semilinear_action, unitary_semilinear_generators,
    isotropic_domain, FormType, SymplecticActions, VectorDomain,
};
use innate::algebra::{Elem, FiniteField, SemilinearElement};
use innate::classify::{phi_hat, r_transitive_off_sigma, rank3_criteria, PitDecomposition, PitOutcome};
use innate::perm::{orbital_count, rank, GeneratedGroup, Permutation};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub const CASES: u32 = 100;

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).expect("shuffle is a bijection"))
}

/// A subgroup of `S_n` for `n` in `lo..=hi`, from one to three random generators.
fn group_strategy(lo: usize, hi: usize) -> impl Strategy<Value = GeneratedGroup> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(perm_strategy(n), 1..=3)
            .prop_map(move |gens| GeneratedGroup::new(n, gens).expect("same degree"))
    })
}

/// A transitive subgroup of `C_b wr S_m` containing `C_b wr C_m`, with `m` blocks of size `b`.
fn imprimitive_strategy() -> impl Strategy<Value = GeneratedGroup> {
    (2usize..=5, 2usize..=5).prop_flat_map(|(b, m)| {
        let n = b * m;
        let block_perm = (perm_strategy(m), prop::collection::vec(0..b, m));
        prop::collection::vec(block_perm, 0..=2).prop_map(move |extra| {
            let shift_blocks = (0..n).map(|x| ((x / b + 1) % m) * b + x % b).collect();
            let shift_first = (0..n).map(|x| if x < b { (x + 1) % b } else { x }).collect();
            let mut gens = vec![
                Permutation::from_images(shift_blocks).expect("bijection"),
                Permutation::from_images(shift_first).expect("bijection"),
            ];
            for (pi, shifts) in extra {
                let images = (0..n).map(|x| pi.image(x / b) * b + (x % b + shifts[x / b]) % b).collect();
                gens.push(Permutation::from_images(images).expect("bijection"));
            }
            GeneratedGroup::new(n, gens).expect("same degree")
        })
    })
}

fn closure_order(g: &GeneratedGroup) -> u128 {
    let id = Permutation::identity(g.degree());
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for s in g.generators() {
            let y = x.compose(s);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len() as u128
}

fn named_corpus() -> Vec<GeneratedGroup> {
    let mut out = vec![
        GeneratedGroup::symmetric(6),
        GeneratedGroup::alternating(7),
    ];
    for (d, p, a) in [(2, 7, 1), (3, 2, 1), (3, 3, 1), (2, 2, 3)] {
        let f = FiniteField::new(p, a).expect("field");
        let act = innate::actions::semilinear_projective_action(d, &f).expect("action");
        out.push(act.group_named(&["sl"]));
    }
    out
}

pub fn orbit_stabilizer() -> Result<(), String> {
    for g in named_corpus() {
        for p in 0..g.degree() {
            if g.orbit(p).len() as u128 * g.stabilizer(p).order() != g.order() {
                return Err(format!("orbit-stabilizer fails at point {p} of a group of order {}", g.order()));
            }
        }
    }
    run(CASES, group_strategy(2, 12), |g| {
        for p in 0..g.degree() {
            prop_assert_eq!(g.orbit(p).len() as u128 * g.stabilizer(p).order(), g.order());
        }
        Ok(())
    })
}

pub fn order_matches_closure() -> Result<(), String> {
    for g in named_corpus().into_iter().filter(|g| g.order() <= 10_000) {
        if closure_order(&g) != g.order() {
            return Err(format!("chain order {} disagrees with closure", g.order()));
        }
    }
    run(CASES, group_strategy(2, 7), |g| {
        prop_assert_eq!(closure_order(&g), g.order());
        Ok(())
    })
}

pub fn rank_matches_orbitals() -> Result<(), String> {
    let both = prop_oneof![imprimitive_strategy(), group_strategy(3, 10).prop_filter("transitive", |g| g.is_transitive())];
    run(CASES, both, |g| {
        prop_assert_eq!(rank(&g).expect("transitive"), orbital_count(&g));
        Ok(())
    })
}

struct SemilinearSetting {
    field: FiniteField,
    domain: VectorDomain,
    gens: Vec<SemilinearElement>,
    r: u32,
}

fn semilinear_settings() -> Vec<SemilinearSetting> {
    let mut out = Vec::new();
    for (d, p, a, r) in [(2, 3, 2, 2), (2, 2, 3, 7), (3, 2, 2, 3), (2, 5, 2, 3), (3, 7, 1, 2)] {
        let field = FiniteField::new(p, a).expect("field");
        let gens = linear_semilinear_generators(d, &field).expect("generators");
        out.push(SemilinearSetting {
            domain: projective_domain(&field, d),
            gens: gens.into_iter().map(|(_, g)| g).collect(),
            field,
            r,
        });
    }
    for (p, a, r) in [(3, 2, 2), (2, 4, 3)] {
        let field = FiniteField::new(p, a).expect("field");
        let gens = unitary_semilinear_generators(&field).expect("generators");
        out.push(SemilinearSetting {
            domain: isotropic_domain(&field).expect("domain"),
            gens: gens.into_iter().map(|(_, g)| g).collect(),
            field,
            r,
        });
    }
    out
}

fn word_product(s: &SemilinearSetting, word: &[usize]) -> SemilinearElement {
    let dim = s.domain.dim();
    word.iter().fold(SemilinearElement::linear(innate::algebra::Matrix::identity(dim)), |acc, &i| {
        acc.then(&s.field, &s.gens[i % s.gens.len()])
    })
}

/// Acting by `A` then `B` agrees with acting by the composite, on vectors and on the scaled
/// points.
pub fn semilinear_homomorphism() -> Result<(), String> {
    let settings = semilinear_settings();
    let words = prop::collection::vec(0usize..16, 1..8);
    let strategy = (0..settings.len(), words.clone(), words, prop::collection::vec(any::<u32>(), 3));
    run(CASES, strategy, |(k, wa, wb, coords)| {
        let s = &settings[k];
        let (a, b) = (word_product(s, &wa), word_product(s, &wb));
        let ab = a.then(&s.field, &b);
        let q = s.field.order();
        let v: Vec<Elem> = coords.iter().take(s.domain.dim()).map(|&c| c % q).collect();
        prop_assert_eq!(b.apply(&s.field, &a.apply(&s.field, &v)), ab.apply(&s.field, &v));
        let named = vec![("a".to_string(), a), ("b".to_string(), b), ("ab".to_string(), ab)];
        let act = semilinear_action("check", &s.field, &s.domain, s.r, &named).expect("invariant domain");
        let g = &act.action.generators;
        prop_assert_eq!(g[0].compose(&g[1]), g[2].clone());
        Ok(())
    })
}

/// `w^k I` is trivial on the scaled points exactly when `r | k`, and otherwise cycles
/// every cell.
pub fn scaled_kernel_is_y() -> Result<(), String> {
    let settings = [(2, 5, 1, 2), (2, 7, 1, 3), (2, 3, 2, 2), (2, 2, 2, 3), (3, 2, 2, 3), (2, 2, 4, 5), (2, 13, 1, 3)];
    run(CASES, (0..settings.len(), 0u32..256), |(k, e)| {
        let (d, p, a, r) = settings[k];
        let f = FiniteField::new(p, a).expect("field");
        let scalar = innate::algebra::Matrix::identity(d).scale(&f, f.exp(e as i64));
        let named = vec![("s".to_string(), SemilinearElement::linear(scalar))];
        let act = semilinear_action("kernel", &f, &projective_domain(&f, d), r, &named).expect("action");
        let x = &act.action.generators[0];
        let exponent = e % (f.order() - 1);
        prop_assert_eq!(x.is_identity(), exponent % r == 0);
        if exponent % r != 0 {
            for cycle in x.cycles() {
                prop_assert_eq!(cycle.len(), r as usize);
                let cell = act.cells.cell_of(cycle[0]);
                prop_assert!(cycle.iter().all(|&y| act.cells.cell_of(y) == cell));
            }
        }
        let scaled = scaled_projective_action(d, &f, r).expect("scaled action");
        prop_assert!(scaled.cells.is_invariant_under(&scaled.action.generators));
        prop_assert_eq!(scaled.action.degree(), r as usize * scaled.cells.cell_count());
        Ok(())
    })
}

/// The orthogonal group of the first form of type `eps` on the combined domain.
fn orthogonal_group(sp: &SymplecticActions, eps: FormType) -> (GeneratedGroup, u64) {
    let combined = sp.combined_action(eps).expect("combined action").group();
    let nv = (1usize << (2 * sp.d)) - 1;
    (combined.stabilizer(nv), sp.forms(eps)[0])
}

fn dickson_pair(sp: &SymplecticActions, c: u64, g: &Permutation, h: &Permutation) -> Result<(), String> {
    let class = |x: &Permutation| dickson_class(sp.d, &sp.matrix_of(x), c).map_err(|e| e.to_string());
    let (a, b, ab) = (class(g)?, class(h)?, class(&g.compose(h))?);
    if ab == (a + b) % 2 {
        Ok(())
    } else {
        Err(format!("Dickson classes {a} + {b} but product has {ab}"))
    }
}

/// Exhaustive over pairs in dimension 4; random pairs in dimension 6.
pub fn dickson_additivity() -> Result<(), String> {
    let sp2 = SymplecticActions::new(2).map_err(|e| e.to_string())?;
    for eps in [FormType::Plus, FormType::Minus] {
        let (o, c) = orthogonal_group(&sp2, eps);
        let elements = o.elements(10_000).map_err(|e| e.to_string())?;
        for g in &elements {
            for h in &elements {
                dickson_pair(&sp2, c, g, h)?;
            }
        }
    }
    let sp3 = SymplecticActions::new(3).map_err(|e| e.to_string())?;
    let groups = [orthogonal_group(&sp3, FormType::Plus), orthogonal_group(&sp3, FormType::Minus)];
    let words = prop::collection::vec(0usize..64, 1..24);
    run(10_000, (0..2usize, words.clone(), words), |(k, wg, wh)| {
        let (o, c) = &groups[k];
        let gens = o.generators();
        let product = |w: &[usize]| w.iter().fold(o.identity(), |acc, &i| acc.compose(&gens[i % gens.len()]));
        dickson_pair(&sp3, *c, &product(&wg), &product(&wh)).map_err(TestCaseError::fail)
    })
}

/// Groups whose cell action is a special pair, each with its plinth.
pub fn special_corpus() -> Vec<(GeneratedGroup, GeneratedGroup)> {
    let mut out = Vec::new();
    for (p, a, r, prefixes) in [
        (5, 1, 2, vec!["sl", "z"]),
        (5, 1, 2, vec!["sl", "z", "gl"]),
        (2, 2, 3, vec!["sl", "z", "gl", "phi"]),
        (13, 1, 2, vec!["sl", "z", "gl"]),
    ] {
        let f = FiniteField::new(p, a).expect("field");
        let s = scaled_projective_action(2, &f, r).expect("scaled action");
        out.push((s.action.group_named(&prefixes), s.action.group_named(&["sl"])));
    }
    let f9 = FiniteField::new(3, 2).expect("field");
    let s = scaled_projective_action(2, &f9, 2).expect("scaled action");
    let (m, base) = (s.action.group_named(&["sl"]), s.action.group_named(&["sl", "z"]));
    for g in intermediate_subgroups(&s.action.group(), &base).expect("intermediates") {
        out.push((g, m.clone()));
    }
    out
}

/// The Line-7 group of degree 56 with its plinth.
pub fn line7_group() -> (GeneratedGroup, GeneratedGroup) {
    let l = ree3_line7_action().expect("line 7");
    let specs = outer_specs(&l.ambient, &l.plinth).expect("specs");
    let nd = normalizer_over_plinth(&l.plinth, &l.omega, &specs).expect("normalizer");
    (nd.normalizer, nd.plinth)
}

fn decompose(g: &GeneratedGroup, m: &GeneratedGroup) -> Result<PitDecomposition, TestCaseError> {
    match PitDecomposition::with_plinth(g, m) {
        Ok(PitOutcome::Proper(d)) => Ok(*d),
        other => Err(TestCaseError::fail(format!("not properly innately transitive: {other:?}"))),
    }
}

fn relabelled(corpus: Vec<(GeneratedGroup, GeneratedGroup)>) -> impl Strategy<Value = (GeneratedGroup, GeneratedGroup)> {
    (0..corpus.len()).prop_flat_map(move |k| {
        let (g, m) = corpus[k].clone();
        perm_strategy(g.degree()).prop_map(move |pi| (g.relabel(&pi), m.relabel(&pi)))
    })
}

/// All five rank-3 criteria agree, under random relabelling of the points.
pub fn criteria_agree() -> Result<(), String> {
    run(CASES, relabelled(special_corpus()), |(g, m)| {
        let d = decompose(&g, &m)?;
        let crit = rank3_criteria(&d).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(crit.agree(), "{crit:?}");
        prop_assert_eq!(crit.rank, rank(&g).expect("transitive"));
        Ok(())
    })
}

/// `R` is transitive off `sigma`, except for the Line-7 group where it has three orbits
/// of length 9.
pub fn r_transitivity() -> Result<(), String> {
    let mut corpus = special_corpus();
    corpus.push(line7_group());
    run(CASES, relabelled(corpus), |(g, m)| {
        let d = decompose(&g, &m)?;
        let ph = phi_hat(&d);
        if ph.quotient.degree() == 28 && ph.quotient.order() == 1512 {
            let mut lens: Vec<usize> = ph
                .r_sub
                .orbits()
                .into_iter()
                .filter(|o| !o.contains(&ph.sigma))
                .map(|o| o.len())
                .collect();
            lens.sort_unstable();
            prop_assert_eq!(lens, vec![9, 9, 9]);
        } else {
            prop_assert!(r_transitive_off_sigma(&ph.r_sub, ph.sigma));
        }
        Ok(())
    })
}

pub type Suite = (&'static str, fn() -> Result<(), String>);

pub const SUITES: [Suite; 8] = [
    ("orbit-stabilizer identity", orbit_stabilizer),
    ("chain order vs brute-force closure", order_matches_closure),
    ("rank vs orbital count", rank_matches_orbitals),
    ("semilinear homomorphism law", semilinear_homomorphism),
    ("scaled-action kernel is Y", scaled_kernel_is_y),
    ("Dickson-class additivity", dickson_additivity),
    ("rank-3 criteria agreement", criteria_agree),
    ("R transitive off sigma, Line-7 exception", r_transitivity),
];
