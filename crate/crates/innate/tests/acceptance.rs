//! One line per acceptance criterion: PASS, FAIL or SKIP with a short detail.

mod common;

use std::time::{Duration, Instant};

use innate::actions::{
    dickson_kernel, intermediate_subgroups, isotropic_action, scaled_isotropic_action, scaled_projective_action,
    semilinear_projective_action, FormType, SymplecticActions,
};
use innate::algebra::FiniteField;
use innate::catalog::{
    builtin_catalog, data_dir, example_pit_on_twelve, example_spread_design, example_z14_design, ingest_generators,
    phi_images_on_26, run_catalog,
};
use innate::classify::{
    detect_pit, oracle_special_scan, table1_predicate, verify_pls, PitOutcome, PitReport, Table1Instance,
};
use innate::perm::{centralizer_in_symmetric, coset_action, rank, GeneratedGroup};

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

type Outcome = Result<Verdict, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn verdict(ok: bool, detail: String) -> Verdict {
    if ok {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn table_rows() -> Outcome {
    let entries: Vec<_> = builtin_catalog().into_iter().filter(|e| e.in_table).collect();
    let start = Instant::now();
    let report = run_catalog(&entries, &data_dir(), false);
    let elapsed = start.elapsed();
    let failed: Vec<&str> = report
        .entries
        .iter()
        .filter(|e| e.rows.iter().any(|r| !r.pass))
        .map(|e| e.id.as_str())
        .collect();
    let ok = report.all_passed() && report.rows_failed == 0 && elapsed < Duration::from_secs(300);
    Ok(verdict(
        ok,
        format!(
            "{} rows matched, {} mismatched, {:.1}s{}",
            report.rows_passed,
            report.rows_failed,
            elapsed.as_secs_f64(),
            if failed.is_empty() { String::new() } else { format!(", failing: {failed:?}") }
        ),
    ))
}

fn primes_up_to(n: u64) -> impl Iterator<Item = u64> {
    (2..=n).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
}

/// Compares the scan of `x` with the predicted line, for every prime up to 31.
fn oracle_agrees(x: &GeneratedGroup, line: impl Fn(u64) -> Option<Table1Instance>) -> Result<Option<String>, String> {
    let scan = oracle_special_scan(x).map_err(err)?;
    for e in &scan {
        if e.verdict.holds && primes_up_to(e.r as u64).last() != Some(e.r as u64) {
            return Ok(Some(format!("special R of composite index {}", e.r)));
        }
    }
    for r in primes_up_to(31) {
        let found = scan.iter().filter(|e| e.verdict.holds && e.r == r as u128).count();
        let predicted = match line(r) {
            Some(t) => table1_predicate(&t).map_err(err)?,
            None => false,
        };
        if found > 1 {
            return Ok(Some(format!("{found} special subgroups for r = {r}")));
        }
        if (found == 1) != predicted {
            return Ok(Some(format!("r = {r}: scan {}, predicate {predicted}", found == 1)));
        }
    }
    Ok(None)
}

/// M11 on the 12 cosets of a subgroup of order 660.
fn m11_on_twelve(m11: &GeneratedGroup) -> Result<GeneratedGroup, String> {
    let mut elements = m11.elements(10_000).map_err(err)?;
    elements.sort();
    let a = elements.iter().find(|e| e.order() == 2).ok_or("no involution")?;
    for b in elements.iter().filter(|e| e.order() == 3) {
        let h = GeneratedGroup::new(11, vec![a.clone(), b.clone()]).map_err(err)?;
        if h.order() == 660 {
            return Ok(coset_action(m11, &h).map_err(err)?.group());
        }
    }
    Err("no subgroup of order 660".into())
}

fn linear(d: usize, p: u32, a: u32) -> Result<innate::perm::LabeledAction, String> {
    semilinear_projective_action(d, &FiniteField::new(p, a).map_err(err)?).map_err(err)
}

fn oracle_equivalence() -> Outcome {
    type Line = Box<dyn Fn(u64) -> Option<Table1Instance>>;
    let mut corpus: Vec<(String, GeneratedGroup, Line)> = vec![
        ("A5 on 5".into(), GeneratedGroup::alternating(5), Box::new(|r| Some(Table1Instance::Line1 { r, full: false }))),
        ("S5 on 5".into(), GeneratedGroup::symmetric(5), Box::new(|r| Some(Table1Instance::Line1 { r, full: true }))),
    ];
    for (p, a) in [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (17, 1)] {
        let act = linear(2, p, a)?;
        let q0 = p as u64;
        for (name, prefixes) in [("PSL", vec!["sl"]), ("PGL", vec!["sl", "gl"])] {
            let line: Line = Box::new(move |r| Some(Table1Instance::Line2 { d: 2, q0, a, r, j: a }));
            corpus.push((format!("{name}(2,{})", q0.pow(a)), act.group_named(&prefixes), line));
        }
    }
    corpus.push(("PSL(3,2) on 7".into(), linear(3, 2, 1)?.group_named(&["sl"]), Box::new(|r| Some(Table1Instance::Line3 { r }))));
    corpus.push((
        "PSL(3,3) on 13".into(),
        linear(3, 3, 1)?.group_named(&["sl"]),
        Box::new(|r| Some(Table1Instance::Line2 { d: 3, q0: 3, a: 1, r, j: 1 })),
    ));
    let m11 = ingest_generators(&data_dir().join("m11.perm"), Some(7920)).map_err(err)?;
    corpus.push(("M11 on 12".into(), m11_on_twelve(&m11)?, Box::new(|_| None)));
    corpus.push(("M11 on 11".into(), m11, Box::new(|r| Some(Table1Instance::Line8 { r }))));
    let sp = SymplecticActions::new(3).map_err(err)?;
    for eps in [FormType::Minus, FormType::Plus] {
        let x = sp.form_action(eps).map_err(err)?.group();
        corpus.push((format!("Sp(6,2) on {}", x.degree()), x, Box::new(move |r| Some(Table1Instance::Line5 { d: 3, r, eps }))));
    }
    let f9 = FiniteField::new(3, 2).map_err(err)?;
    corpus.push((
        "PSU(3,3) on 28".into(),
        isotropic_action(&f9).map_err(err)?.group_named(&["su"]),
        Box::new(|r| Some(Table1Instance::Line4 { q0: 3, a: 1, r, j: 2 })),
    ));
    let l7 = innate::actions::ree3_line7_action().map_err(err)?;
    let n_r = {
        let elements = l7.ambient.elements(10_000).map_err(err)?;
        let x = &l7.r_sub.generators()[0];
        GeneratedGroup::new(9, elements.into_iter().filter(|y| l7.r_sub.contains(&x.conjugate_by(y))).collect()).map_err(err)?
    };
    corpus.push((
        "PGammaL(2,8) on 28".into(),
        coset_action(&l7.ambient, &n_r).map_err(err)?.group(),
        Box::new(|r| Some(Table1Instance::Line7 { r, full: true })),
    ));

    let mut problems = Vec::new();
    for (name, x, line) in &corpus {
        if let Some(problem) = oracle_agrees(x, line)? {
            problems.push(format!("{name}: {problem}"));
        }
    }
    let composite_rejected = table1_predicate(&Table1Instance::Line3 { r: 4 }).is_err();
    Ok(verdict(
        problems.is_empty() && composite_rejected,
        format!("{} groups scanned; {}", corpus.len(), if problems.is_empty() { "all agree".into() } else { problems.join("; ") }),
    ))
}

fn ranks_of(groups: &[GeneratedGroup]) -> Result<Vec<(u128, usize)>, String> {
    groups.iter().map(|g| Ok((g.order(), rank(g).map_err(err)?))).collect()
}

fn rank_trichotomy() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (p, a) in [(5, 1), (13, 1), (17, 1)] {
        let f = FiniteField::new(p, a).map_err(err)?;
        let s = scaled_projective_action(2, &f, 2).map_err(err)?;
        let found = (rank(&s.action.group_named(&["sl", "gl", "z"])).map_err(err)?, rank(&s.action.group_named(&["sl", "z"])).map_err(err)?);
        ok &= found == (3, 4);
        lines.push(format!("q={p}: {}/{}", found.0, found.1));
    }
    let f9 = FiniteField::new(3, 2).map_err(err)?;
    let s = scaled_projective_action(2, &f9, 2).map_err(err)?;
    let inter = intermediate_subgroups(&s.action.group(), &s.action.group_named(&["sl", "z"])).map_err(err)?;
    let mut found = ranks_of(&inter)?;
    found.sort_unstable();
    let expected = vec![(720, 4), (1440, 3), (1440, 3), (1440, 4), (2880, 3)];
    ok &= found == expected;
    lines.push(format!("q=9: {found:?}"));
    let f7 = FiniteField::new(7, 1).map_err(err)?;
    let full = scaled_projective_action(3, &f7, 2).map_err(err)?.action.group();
    let r7 = rank(&full).map_err(err)?;
    ok &= r7 == 3;
    lines.push(format!("(3,7): {r7}"));
    Ok(verdict(ok, lines.join(", ")))
}

fn unitary_ranks() -> Outcome {
    let f9 = FiniteField::new(3, 2).map_err(err)?;
    let s = scaled_isotropic_action(&f9, 2).map_err(err)?;
    let inter = intermediate_subgroups(&s.action.group(), &s.action.group_named(&["su", "z"])).map_err(err)?;
    let ranks = ranks_of(&inter)?;
    let all_four = !ranks.is_empty() && ranks.iter().all(|&(_, r)| r == 4) && s.action.degree() == 56;
    let f16 = FiniteField::new(2, 4).map_err(err)?;
    let big = scaled_isotropic_action(&f16, 3).map_err(err)?.action.group();
    let big_rank = rank(&big).map_err(err)?;
    let ok = all_four && big.degree() == 195 && big.order() == 748_800 && big_rank == 3;
    Ok(verdict(
        ok,
        format!("PSU(3,3) r=2: {ranks:?}; PSU(3,4) r=3: degree {}, order {}, rank {big_rank}", big.degree(), big.order()),
    ))
}

fn symplectic_ranks() -> Outcome {
    let sp = SymplecticActions::new(3).map_err(err)?;
    let mut parts = Vec::new();
    let mut ok = true;
    for (eps, degree) in [(FormType::Plus, 72), (FormType::Minus, 56)] {
        let combined = sp.combined_action(eps).map_err(err)?.group();
        let nv = (1usize << 6) - 1;
        let r_sub = dickson_kernel(&sp, &combined.stabilizer(nv), sp.forms(eps)[0]).map_err(err)?;
        let m = coset_action(&combined, &r_sub).map_err(err)?.group();
        let g = m.join(centralizer_in_symmetric(&m).map_err(err)?.generators());
        let rk = rank(&g).map_err(err)?;
        ok &= g.degree() == degree && g.order() == 2 * 1_451_520 && rk == 4;
        parts.push(format!("degree {} order {} rank {rk}", g.degree(), g.order()));
    }
    Ok(verdict(ok, parts.join("; ")))
}

fn exceptional_ranks() -> Outcome {
    let f4 = FiniteField::new(2, 2).map_err(err)?;
    let gl = scaled_projective_action(2, &f4, 3).map_err(err)?.action.group();
    let gl_rank = rank(&gl).map_err(err)?;
    let (line7, _) = common::line7_group();
    let l7_rank = rank(&line7).map_err(err)?;
    let ok = (gl.degree(), gl.order(), gl_rank) == (15, 360, 3) && (line7.degree(), line7.order(), l7_rank) == (56, 3024, 4);
    Ok(verdict(
        ok,
        format!(
            "GammaL(2,4): degree {} order {} rank {gl_rank}; Line 7: degree {} order {} rank {l7_rank}",
            gl.degree(),
            gl.order(),
            line7.degree(),
            line7.order()
        ),
    ))
}

fn proper_report(g: &GeneratedGroup) -> Result<Option<PitReport>, String> {
    match detect_pit(g).map_err(err)? {
        PitOutcome::Proper(d) => Ok(Some(PitReport::from_decomposition(&d).map_err(err)?)),
        _ => Ok(None),
    }
}

fn examples() -> Outcome {
    let mut parts = Vec::new();
    let z14 = example_z14_design().map_err(err)?;
    let pls = verify_pls(&z14.design, &z14.group).map_err(err)?;
    let ok1 = pls.preserved && pls.rank == 3 && pls.orbitals_match && z14.group.degree() == 14 && z14.group.order() == 336;
    parts.push(format!("Z14 design: order {} rank {}", z14.group.order(), pls.rank));

    let spread = example_spread_design().map_err(err)?;
    let pls = verify_pls(&spread.design, &spread.group).map_err(err)?;
    let ok2 = pls.preserved && pls.rank == 3 && spread.group.degree() == 15 && spread.group.order() == 360;
    parts.push(format!("spread design: order {} rank {}", spread.group.order(), pls.rank));

    let phi = phi_images_on_26().map_err(err)?;
    let degrees: Vec<usize> = phi.groups.iter().map(GeneratedGroup::degree).collect();
    let mut proper = true;
    for g in &phi.groups {
        proper &= proper_report(g)?.is_some();
    }
    let ok3 = degrees == [52, 78] && proper && phi.images_equal();
    parts.push(format!("PSL(2,25): degrees {degrees:?}, equal images {}", phi.images_equal()));

    let twelve = example_pit_on_twelve().map_err(err)?;
    let report = proper_report(&twelve)?;
    let ok4 = report.as_ref().is_some_and(|r| r.degree == 12 && r.rank == 4 && r.special);
    parts.push(format!(
        "C2 x PSL(2,5): {}",
        report.map_or("not proper".into(), |r| format!("rank {} special {}", r.rank, r.special))
    ));
    Ok(verdict(ok1 && ok2 && ok3 && ok4, parts.join("; ")))
}

fn property_suites() -> Outcome {
    let mut failed = Vec::new();
    for (name, suite) in common::SUITES {
        if let Err(e) = suite() {
            failed.push(format!("{name}: {e}"));
        }
    }
    Ok(verdict(
        failed.is_empty(),
        if failed.is_empty() { format!("{} suites passed", common::SUITES.len()) } else { failed.join("; ") },
    ))
}

fn slow_suite() -> Outcome {
    let dir = data_dir();
    let missing: Vec<&str> = ["hs176.perm", "co3-276.perm"].into_iter().filter(|f| !dir.join(f).exists()).collect();
    if !missing.is_empty() {
        return Ok(Verdict::Skip(format!("data files absent: {missing:?}")));
    }
    let entries: Vec<_> = builtin_catalog().into_iter().filter(|e| e.slow).collect();
    let report = run_catalog(&entries, &dir, true);
    Ok(verdict(report.all_passed(), format!("{} rows matched, {} mismatched", report.rows_passed, report.rows_failed)))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("table rows reproduced", table_rows),
        ("special-pair oracle equivalence", oracle_equivalence),
        ("linear rank trichotomy", rank_trichotomy),
        ("unitary ranks", unitary_ranks),
        ("C2 x Sp(6,2) ranks", symplectic_ranks),
        ("GammaL(2,4) and Line-7 groups", exceptional_ranks),
        ("worked examples", examples),
        ("property suites", property_suites),
        ("HS and Co3 (slow)", slow_suite),
    ];
    let mut failures = Vec::new();
    for (k, (name, criterion)) in criteria.iter().enumerate() {
        let line = match criterion() {
            Ok(Verdict::Pass(detail)) => format!("PASS {}. {name}: {detail}", k + 1),
            Ok(Verdict::Skip(detail)) => format!("SKIP {}. {name}: {detail}", k + 1),
            Ok(Verdict::Fail(detail)) | Err(detail) => {
                failures.push(k + 1);
                format!("FAIL {}. {name}: {detail}", k + 1)
            }
        };
        println!("{line}");
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}
