use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::format::PolytopeRecord;
use crate::checks::{
    ehrhart_check, grunbaum_facet_cuts, milman_pajor_check, minkowski_combined_check, CheckReport,
    Status,
};
use crate::error::{Error, Result};
use crate::kernel::{Rational, VPolytope};
use crate::lattice::root_symmetry_check;
use crate::toric::toric_report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    Ehrhart,
    MilmanPajor,
    Minkowski,
    Grunbaum,
    RootSymmetry,
    Toric,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Ehrhart,
        CheckKind::MilmanPajor,
        CheckKind::Minkowski,
        CheckKind::Grunbaum,
        CheckKind::RootSymmetry,
        CheckKind::Toric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Ehrhart => "ehrhart",
            CheckKind::MilmanPajor => "milman-pajor",
            CheckKind::Minkowski => "minkowski",
            CheckKind::Grunbaum => "grunbaum",
            CheckKind::RootSymmetry => "root-symmetry",
            CheckKind::Toric => "toric",
        }
    }

    pub fn run(self, k: &VPolytope) -> Result<CheckReport> {
        Ok(match self {
            CheckKind::Ehrhart => ehrhart_check(k),
            CheckKind::MilmanPajor => milman_pajor_check(k),
            CheckKind::Minkowski => minkowski_combined_check(k),
            CheckKind::Grunbaum => grunbaum_facet_cuts(k),
            CheckKind::RootSymmetry => root_symmetry_check(k),
            CheckKind::Toric => toric_report(k)?.to_check_report(),
        })
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(text: &str) -> Result<Vec<CheckKind>> {
        let mut out = Vec::new();
        for name in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if name == "all" {
                out.extend(CheckKind::ALL);
            } else {
                out.push(name.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown check `{s}`")))
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanError {
    pub id: String,
    pub check: CheckKind,
    pub error: Error,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub records: usize,
    /// Per check: number of reports with each status, plus `"error"`.
    pub counts: BTreeMap<CheckKind, BTreeMap<&'static str, usize>>,
    pub max_volume: Option<(String, Rational)>,
    pub max_degree: Option<(String, Rational)>,
    pub min_r: Option<(String, Rational)>,
    /// `(id, check)` of every violation.
    pub violations: Vec<(String, CheckKind)>,
    pub errors: Vec<ScanError>,
    /// All reports, sorted by id, then check.
    pub reports: Vec<(String, CheckReport)>,
}

impl ScanSummary {
    pub fn count(&self, check: CheckKind, status: &str) -> usize {
        self.counts
            .get(&check)
            .and_then(|m| m.get(status))
            .copied()
            .unwrap_or(0)
    }

    /// 0 when clean, 1 on any violation, 2 when only record errors occurred.
    pub fn exit_code(&self) -> i32 {
        if !self.violations.is_empty() {
            1
        } else if !self.errors.is_empty() {
            2
        } else {
            0
        }
    }

    fn record_extreme(slot: &mut Option<(String, Rational)>, id: &str, v: &Rational, larger: bool) {
        let better = match slot {
            None => true,
            Some((_, cur)) => (larger && v > cur) || (!larger && v < cur),
        };
        if better {
            *slot = Some((id.to_owned(), v.clone()));
        }
    }

    fn add(&mut self, id: &str, check: CheckKind, outcome: Result<CheckReport>) {
        let counts = self.counts.entry(check).or_default();
        match outcome {
            Ok(report) => {
                *counts.entry(report.status.as_str()).or_default() += 1;
                if report.status == Status::Violation {
                    self.violations.push((id.to_owned(), check));
                }
                if let Some(v) = report.scalar("volume") {
                    Self::record_extreme(&mut self.max_volume, id, v, true);
                }
                if let Some(v) = report.scalar("degree") {
                    Self::record_extreme(&mut self.max_degree, id, v, true);
                }
                for key in ["r_invariant", "r_variety", "r_dual"] {
                    if let Some(v) = report.scalar(key) {
                        Self::record_extreme(&mut self.min_r, id, v, false);
                    }
                }
                self.reports.push((id.to_owned(), report));
            }
            Err(error) => {
                *counts.entry("error").or_default() += 1;
                self.errors.push(ScanError {
                    id: id.to_owned(),
                    check,
                    error,
                });
            }
        }
    }
}

/// Runs `checks` on every record in parallel. Per-record failures are
/// collected, not propagated.
pub fn scan(records: &[PolytopeRecord], checks: &[CheckKind]) -> ScanSummary {
    let mut outcomes: Vec<(usize, &str, CheckKind, Result<CheckReport>)> = records
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, r)| {
            let polytope = r.polytope();
            checks
                .iter()
                .map(move |&c| {
                    let outcome = polytope.clone().and_then(|k| c.run(&k));
                    (i, r.id.as_str(), c, outcome)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    outcomes.sort_by(|a, b| (a.1, a.0, a.2).cmp(&(b.1, b.0, b.2)));

    let mut summary = ScanSummary {
        records: records.len(),
        ..ScanSummary::default()
    };
    for &c in checks {
        summary.counts.entry(c).or_default();
    }
    for (_, id, check, outcome) in outcomes {
        summary.add(id, check, outcome);
    }
    summary
}
