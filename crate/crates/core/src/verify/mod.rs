//! Named checks of known facts about solubilizers, run over catalog groups
//! and collected into a serializable report.

mod checks;
mod context;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};

pub use checks::{check_ids, CheckInfo, CHECKS};
use context::GroupContext;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Evidence {
    Bool(bool),
    Int(i64),
}

impl From<bool> for Evidence {
    fn from(b: bool) -> Self {
        Evidence::Bool(b)
    }
}

macro_rules! int_evidence {
    ($($t:ty),*) => {$(
        impl From<$t> for Evidence {
            fn from(n: $t) -> Self {
                Evidence::Int(i64::try_from(n).expect("evidence value fits in i64"))
            }
        }
    )*};
}
int_evidence!(i64, u32, u64, u128, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub group_name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    pub status: Status,
    pub evidence: BTreeMap<String, Evidence>,
    pub paper_anchor: String,
    /// Skip reason, failure explanation, or exploratory finding.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogSnapshot {
    pub name: String,
    pub order: u64,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_soluble_expected: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTiming {
    pub group_name: String,
    pub check_id: String,
    pub micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub catalog: Vec<CatalogSnapshot>,
    pub results: Vec<CheckResult>,
    pub timings: Vec<CheckTiming>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    /// 0 when no check failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failures().next().is_some() {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("malformed report: {e}")))
    }
}

/// Resolves a list of check ids; an empty list selects every check.
pub fn resolve_suite(ids: &[&str]) -> Result<Vec<&'static CheckInfo>> {
    if ids.is_empty() {
        return Ok(CHECKS.iter().collect());
    }
    let mut selected: Vec<&'static CheckInfo> = Vec::new();
    for id in ids {
        let check = CHECKS.iter().find(|c| c.id == *id).ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
        if !selected.iter().any(|c| c.id == check.id) {
            selected.push(check);
        }
    }
    Ok(selected)
}

struct GroupRun {
    snapshot: CatalogSnapshot,
    results: Vec<CheckResult>,
    timings: Vec<CheckTiming>,
}

fn run_group(entry: &CatalogEntry, suite: &[&'static CheckInfo]) -> GroupRun {
    let snapshot = CatalogSnapshot {
        name: entry.name.clone(),
        order: u64::try_from(entry.group.order()).unwrap_or(u64::MAX),
        degree: entry.group.degree(),
        is_soluble_expected: entry.is_soluble_expected,
    };
    let ctx = GroupContext::new(entry);
    let mut results = Vec::with_capacity(suite.len());
    let mut timings = Vec::with_capacity(suite.len());
    for check in suite {
        let start = Instant::now();
        let outcome = match &ctx {
            Ok(ctx) => checks::run(check, ctx),
            Err(e) => checks::Outcome::skipped(format!("group not enumerable: {e}")),
        };
        timings.push(CheckTiming {
            group_name: entry.name.clone(),
            check_id: check.id.to_string(),
            micros: u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX),
        });
        results.push(outcome.into_result(check, &entry.name));
    }
    GroupRun { snapshot, results, timings }
}

pub fn verify_group(entry: &CatalogEntry, suite: &[&str]) -> Result<VerificationReport> {
    verify_catalog(std::slice::from_ref(entry), suite)
}

/// Runs the suite on every entry, groups in parallel; results keep catalog order.
pub fn verify_catalog(entries: &[CatalogEntry], suite: &[&str]) -> Result<VerificationReport> {
    let suite = resolve_suite(suite)?;
    let runs: Vec<GroupRun> = entries.par_iter().map(|e| run_group(e, &suite)).collect();
    let mut report = VerificationReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        catalog: Vec::with_capacity(runs.len()),
        results: Vec::new(),
        timings: Vec::new(),
    };
    for run in runs {
        report.catalog.push(run.snapshot);
        report.results.extend(run.results);
        report.timings.extend(run.timings);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{by_name, default_catalog};

    fn single(name: &str, check: &str) -> CheckResult {
        let report = verify_group(&by_name(name).unwrap(), &[check]).unwrap();
        assert_eq!(report.results.len(), 1);
        report.results.into_iter().next().unwrap()
    }

    #[test]
    fn a5_six_values() {
        let r = single("A5", "lem_six_values");
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.evidence["sol_size"], Evidence::Int(24));
    }

    #[test]
    fn s4_thompson() {
        let r = single("S4", "thompson_complete");
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.evidence["complete"], Evidence::Bool(true));
        assert_eq!(r.evidence["soluble"], Evidence::Bool(true));
    }

    #[test]
    fn psl27_lower_bound() {
        let r = single("PSL2-7", "cor_geq_10");
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.evidence["min_sol_size"], Evidence::Int(21));
    }

    #[test]
    fn unknown_check() {
        assert_eq!(
            verify_group(&by_name("S3").unwrap(), &["no_such_check"]).unwrap_err(),
            Error::UnknownCheck("no_such_check".into())
        );
    }

    #[test]
    fn skip_policies() {
        assert_eq!(single("S4", "thm_B_not_p_squared").status, Status::Skipped);
        assert_eq!(single("A5", "cor_cubo").status, Status::Skipped);
        assert_eq!(single("A5xC2", "cor_cubo").status, Status::Pass);
        assert_eq!(single("A5", "quotient_law").status, Status::Skipped);
        assert!(single("A5", "cor_cubo").note.is_some());
    }

    #[test]
    fn every_check_once_per_group() {
        let catalog: Vec<_> = default_catalog(false).into_iter().filter(|e| e.group.order() <= 120).collect();
        let report = verify_catalog(&catalog, &[]).unwrap();
        assert_eq!(report.results.len(), catalog.len() * CHECKS.len());
        for entry in &catalog {
            for check in CHECKS {
                let n = report.results.iter().filter(|r| r.group_name == entry.name && r.check_id == check.id).count();
                assert_eq!(n, 1);
            }
        }
        assert_eq!(report.exit_code(), 0, "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn json_round_trip() {
        let report = verify_group(&by_name("A5").unwrap(), &[]).unwrap();
        let text = report.to_json().unwrap();
        assert_eq!(VerificationReport::from_json(&text).unwrap(), report);
    }

    #[test]
    fn wrong_declaration_fails() {
        let mut entry = by_name("A5").unwrap();
        entry.is_soluble_expected = Some(true);
        let report = verify_group(&entry, &["thompson_complete"]).unwrap();
        assert_eq!(report.exit_code(), 1);
        assert_eq!(report.results[0].status, Status::Fail);
    }
}
