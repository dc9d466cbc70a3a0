use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::actions::{intermediate_subgroups, normalizer_over_plinth};
use crate::classify::{phi_hat, r_transitive_off_sigma, rank3_criteria, PitDecomposition, PitOutcome, PitReport};
use crate::perm::{coset_action, GeneratedGroup};

use super::entries::{CatalogEntry, ExpectedRow, Matching};
use super::recipe::build_construction;
use super::CatalogError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowResult {
    pub expected: ExpectedRow,
    pub found: Option<PitReport>,
    pub pass: bool,
    /// Field-by-field differences when the matched group disagrees on `special`.
    pub diff: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub title: String,
    pub status: EntryStatus,
    pub rows: Vec<RowResult>,
    /// Produced groups matching no expected row.
    pub unexpected: Vec<PitReport>,
    pub checks: Vec<CheckResult>,
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<EntryReport>,
    pub rows_passed: usize,
    pub rows_failed: usize,
    pub entries_skipped: usize,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.rows_failed == 0 && self.entries.iter().all(|e| e.status != EntryStatus::Fail)
    }

    /// Drops wall-clock times so that reports of separate runs compare equal.
    pub fn without_timings(mut self) -> Self {
        for e in &mut self.entries {
            e.elapsed_ms = None;
        }
        self
    }
}

struct Produced {
    reports: Vec<PitReport>,
    checks: Vec<CheckResult>,
}

fn check(name: impl Into<String>, pass: bool) -> CheckResult {
    CheckResult { name: name.into(), pass }
}

/// Representatives of the `n`-conjugacy classes among `groups`, all of which contain `base`.
fn conjugacy_representatives(
    n: &GeneratedGroup,
    base: &GeneratedGroup,
    groups: Vec<GeneratedGroup>,
) -> Result<Vec<GeneratedGroup>, CatalogError> {
    let cosets = coset_action(n, base)?;
    let reps = cosets.space.representatives();
    let mut out: Vec<GeneratedGroup> = Vec::new();
    for g in groups {
        let seen = out
            .iter()
            .any(|k| k.order() == g.order() && reps.iter().any(|t| k.conjugate(t).same_group(&g)));
        if !seen {
            out.push(g);
        }
    }
    Ok(out)
}

fn produce(entry: &CatalogEntry, data_dir: &Path) -> Result<Produced, CatalogError> {
    let c = build_construction(&entry.plinth, &entry.sigma, entry.r_sub, data_dir)?;
    let cosets = coset_action(&c.plinth, &c.r_sub)?;
    let nd = normalizer_over_plinth(&c.plinth, &cosets, &c.specs)?;
    let m = &nd.plinth;
    let mut checks = Vec::new();

    let r = &c.r_sub;
    let normalizing = cosets
        .space
        .representatives()
        .iter()
        .filter(|y| r.generators().iter().all(|s| r.contains(&s.conjugate_by(y))))
        .count();
    checks.push(check(
        "centralizer order equals |N_M(R):R|",
        normalizing as u128 == nd.centralizer.order(),
    ));

    let centralizer = nd.centralizer.generators();
    let candidates: Vec<GeneratedGroup> = intermediate_subgroups(&nd.normalizer, m)?
        .into_iter()
        .filter(|g| centralizer.iter().any(|x| g.contains(x)))
        .collect();
    let groups = conjugacy_representatives(&nd.normalizer, m, candidates)?;

    let mut reports = Vec::new();
    for g in &groups {
        let PitOutcome::Proper(d) = PitDecomposition::with_plinth(g, m)? else {
            checks.push(check(format!("order {} properly innately transitive", g.order()), false));
            continue;
        };
        let report = PitReport::from_decomposition(&d)?;
        if report.special {
            let ph = phi_hat(&d);
            let line7 = ph.quotient.degree() == 28 && ph.quotient.order() == 1512;
            let transitive = r_transitive_off_sigma(&ph.r_sub, ph.sigma);
            checks.push(check(
                format!("order {}: R transitive off sigma exactly when not PGammaL(2,8)", g.order()),
                transitive != line7,
            ));
            if !line7 {
                let crit = rank3_criteria(&d)?;
                checks.push(check(format!("order {}: rank-3 criteria agree", g.order()), crit.agree()));
            }
        }
        reports.push(report);
    }
    Ok(Produced { reports, checks })
}

fn key(degree: usize, order: u128, r: usize, rank: usize) -> (usize, u128, usize, usize) {
    (degree, order, r, rank)
}

fn match_rows(entry: &CatalogEntry, produced: Produced) -> EntryReport {
    let mut pool: Vec<Option<PitReport>> = produced.reports.into_iter().map(Some).collect();
    let mut rows = Vec::new();
    for exp in &entry.rows {
        let want = key(exp.degree, exp.order, exp.r, exp.rank);
        let slot = pool
            .iter_mut()
            .find(|p| p.as_ref().is_some_and(|p| key(p.degree, p.order, p.r, p.rank) == want));
        let found = slot.and_then(Option::take);
        let diff = match (&found, exp.special) {
            (Some(f), Some(s)) if f.special != s => Some(format!("special: expected {s}, found {}", f.special)),
            _ => None,
        };
        rows.push(RowResult {
            expected: exp.clone(),
            pass: found.is_some() && diff.is_none(),
            found,
            diff,
        });
    }
    let unexpected: Vec<PitReport> = pool.into_iter().flatten().collect();
    let ok = rows.iter().all(|r| r.pass)
        && produced.checks.iter().all(|c| c.pass)
        && (entry.matching == Matching::Includes || unexpected.is_empty());
    EntryReport {
        id: entry.id.clone(),
        title: entry.title.clone(),
        status: if ok { EntryStatus::Pass } else { EntryStatus::Fail },
        rows,
        unexpected,
        checks: produced.checks,
        error: None,
        elapsed_ms: None,
    }
}

fn unfinished(entry: &CatalogEntry, status: EntryStatus, message: String) -> EntryReport {
    EntryReport {
        id: entry.id.clone(),
        title: entry.title.clone(),
        status,
        rows: entry
            .rows
            .iter()
            .map(|exp| RowResult {
                expected: exp.clone(),
                found: None,
                pass: false,
                diff: None,
            })
            .collect(),
        unexpected: Vec::new(),
        checks: Vec::new(),
        error: Some(message),
        elapsed_ms: None,
    }
}

/// Builds and verifies one entry. A slow entry whose data file is absent is skipped.
pub fn run_entry(entry: &CatalogEntry, data_dir: &Path) -> EntryReport {
    let start = Instant::now();
    let mut report = match produce(entry, data_dir) {
        Ok(p) => match_rows(entry, p),
        Err(e @ CatalogError::DataFileMissing(_)) if entry.slow => unfinished(entry, EntryStatus::Skipped, e.to_string()),
        Err(e) => unfinished(entry, EntryStatus::Fail, e.to_string()),
    };
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    report
}

/// Runs the given entries concurrently; reports keep the input order. Slow entries are
/// skipped unless `include_slow`.
pub fn run_catalog(entries: &[CatalogEntry], data_dir: &Path, include_slow: bool) -> VerificationReport {
    let entries: Vec<EntryReport> = entries
        .par_iter()
        .map(|e| {
            if e.slow && !include_slow {
                unfinished(e, EntryStatus::Skipped, "slow entry; pass --include-slow".into())
            } else {
                run_entry(e, data_dir)
            }
        })
        .collect();
    let counted = entries.iter().filter(|e| e.status != EntryStatus::Skipped);
    let (mut rows_passed, mut rows_failed) = (0, 0);
    for e in counted {
        for r in &e.rows {
            if r.pass {
                rows_passed += 1;
            } else {
                rows_failed += 1;
            }
        }
    }
    let entries_skipped = entries.iter().filter(|e| e.status == EntryStatus::Skipped).count();
    VerificationReport {
        entries,
        rows_passed,
        rows_failed,
        entries_skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_catalog, data_dir};

    fn entry(id: &str) -> CatalogEntry {
        builtin_catalog().into_iter().find(|e| e.id == id).unwrap()
    }

    #[test]
    fn degree_twelve_entry_passes() {
        let rep = run_entry(&entry("psl2-5-r2"), &data_dir());
        assert_eq!(rep.status, EntryStatus::Pass, "{rep:#?}");
        assert_eq!(rep.rows.len(), 2);
    }

    #[test]
    fn slow_entries_are_skipped_by_default() {
        let rep = run_catalog(&[entry("hs-r2")], &data_dir(), false);
        assert_eq!(rep.entries_skipped, 1);
        assert!(rep.all_passed());
    }
}
