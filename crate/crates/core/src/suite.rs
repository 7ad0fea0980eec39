//! Named check suites with prerequisite gating, and the report document.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::checks;
use crate::drinfeld::verify_drinfeld;
use crate::report::{CheckReport, ReportEntry, Status};
use crate::structure::{validate_structure, QhsaStructure};
use crate::tensor::TensorElement;
use crate::twist::{check_cocycle, check_opposite_twist, check_twistor, twist_structure, verify_twist_by_r, Twistor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Algebra,
    Structure,
    QuasiBialgebra,
    Antipode,
    QuasiTriangular,
    Triangular,
    Qqybe,
    Pentagon,
    Sweedler,
    Eta,
    TwistByR,
    Drinfeld,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Algebra,
        Suite::Structure,
        Suite::QuasiBialgebra,
        Suite::Antipode,
        Suite::QuasiTriangular,
        Suite::Triangular,
        Suite::Qqybe,
        Suite::Pentagon,
        Suite::Sweedler,
        Suite::Eta,
        Suite::TwistByR,
        Suite::Drinfeld,
    ];

    /// Everything except the triangularity check, which most quasi-triangular
    /// structures are not expected to satisfy.
    pub fn defaults() -> Vec<Suite> {
        Self::ALL.into_iter().filter(|s| *s != Suite::Triangular).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Structure => "structure",
            Suite::QuasiBialgebra => "quasi-bialgebra",
            Suite::Antipode => "antipode",
            Suite::QuasiTriangular => "quasi-triangular",
            Suite::Triangular => "triangular",
            Suite::Qqybe => "qqybe",
            Suite::Pentagon => "pentagon",
            Suite::Sweedler => "sweedler",
            Suite::Eta => "eta",
            Suite::TwistByR => "twist-by-r",
            Suite::Drinfeld => "drinfeld",
        }
    }

    pub fn prerequisite(self) -> Option<Suite> {
        match self {
            Suite::Algebra => None,
            Suite::Structure => Some(Suite::Algebra),
            Suite::QuasiBialgebra => Some(Suite::Structure),
            Suite::Antipode | Suite::QuasiTriangular | Suite::Pentagon => Some(Suite::QuasiBialgebra),
            Suite::Triangular | Suite::Qqybe | Suite::TwistByR => Some(Suite::QuasiTriangular),
            Suite::Sweedler | Suite::Eta | Suite::Drinfeld => Some(Suite::Antipode),
        }
    }

    fn needs_r(self) -> bool {
        matches!(
            self,
            Suite::QuasiTriangular | Suite::Triangular | Suite::Qqybe | Suite::TwistByR
        )
    }

    fn run(self, h: &QhsaStructure) -> CheckReport {
        match self {
            Suite::Algebra => h.algebra().validate(),
            Suite::Structure => validate_structure(h),
            Suite::QuasiBialgebra => checks::check_quasi_bialgebra(h),
            Suite::Antipode => checks::check_antipode_axioms(h),
            Suite::QuasiTriangular => checks::check_quasi_triangular(h),
            Suite::Triangular => checks::check_triangular(h),
            Suite::Qqybe => checks::check_qqybe(h),
            Suite::Pentagon => checks::check_pentagon_consequences(h),
            Suite::Sweedler => checks::check_sweedler_identities(h),
            Suite::Eta => checks::check_eta_identities(h),
            Suite::TwistByR => verify_twist_by_r(h),
            Suite::Drinfeld => verify_drinfeld(h),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite \"{}\"", self.0)
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub entries: Vec<ReportEntry>,
}

impl SuiteResult {
    fn from_report(suite: &str, report: CheckReport) -> Self {
        let status = if report.passed() { Status::Pass } else { Status::Fail };
        SuiteResult {
            suite: suite.to_string(),
            status,
            reason: None,
            entries: report.entries,
        }
    }

    fn skipped(suite: &str, reason: String) -> Self {
        SuiteResult {
            suite: suite.to_string(),
            status: Status::Skipped,
            reason: Some(reason),
            entries: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteTiming {
    pub suite: String,
    pub millis: f64,
}

/// Entries are in suite declaration order; timing is kept apart so that the
/// rest of the document is reproducible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub fixture: String,
    pub engine_version: String,
    pub status: Status,
    pub suites: Vec<SuiteResult>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub timing: Vec<SuiteTiming>,
}

impl ReportDocument {
    pub fn new(fixture: impl Into<String>) -> Self {
        ReportDocument {
            fixture: fixture.into(),
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
            status: Status::Pass,
            suites: Vec::new(),
            timing: Vec::new(),
        }
    }

    pub fn push(&mut self, result: SuiteResult, millis: f64) {
        if result.status == Status::Fail {
            self.status = Status::Fail;
        }
        self.timing.push(SuiteTiming {
            suite: result.suite.clone(),
            millis,
        });
        self.suites.push(result);
    }

    pub fn push_report(&mut self, suite: &str, report: CheckReport, millis: f64) {
        self.push(SuiteResult::from_report(suite, report), millis);
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.suite == name)
    }

    pub fn failed_ids(&self) -> Vec<String> {
        self.suites
            .iter()
            .flat_map(|s| &s.entries)
            .filter(|e| e.status == Status::Fail)
            .map(|e| e.id.clone())
            .collect()
    }

    pub fn without_timing(&self) -> Self {
        ReportDocument {
            timing: Vec::new(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

impl fmt::Display for ReportDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.fixture, self.status)?;
        for s in &self.suites {
            write!(f, "[{}] {}", s.suite, s.status)?;
            if let Some(r) = &s.reason {
                write!(f, " ({r})")?;
            }
            writeln!(f)?;
            let report = CheckReport {
                entries: s.entries.clone(),
            };
            for line in report.to_string().lines() {
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1000.0)
}

/// Runs the selected suites in declaration order. A suite whose prerequisite
/// did not pass is marked skipped; prerequisites outside the selection are
/// evaluated for gating but not reported.
pub fn run_suites(h: &QhsaStructure, selection: &[Suite]) -> ReportDocument {
    let mut doc = ReportDocument::new(h.name());
    let mut outcome: Vec<(Suite, Status)> = Vec::new();
    for suite in Suite::ALL {
        let selected = selection.contains(&suite);
        let needed = selection.iter().any(|s| depends_on(*s, suite));
        if !selected && !needed {
            continue;
        }
        let gate = suite
            .prerequisite()
            .and_then(|p| outcome.iter().find(|(s, _)| *s == p).map(|(_, st)| *st))
            .unwrap_or(Status::Pass);
        let result = if gate != Status::Pass {
            (
                SuiteResult::skipped(suite.name(), format!("prerequisite {} did not pass", suite.prerequisite().unwrap())),
                0.0,
            )
        } else if suite.needs_r() && h.r().is_none() {
            (SuiteResult::skipped(suite.name(), "no R-matrix".into()), 0.0)
        } else {
            let (report, ms) = timed(|| suite.run(h));
            (SuiteResult::from_report(suite.name(), report), ms)
        };
        outcome.push((suite, result.0.status));
        if selected {
            doc.push(result.0, result.1);
        }
    }
    doc
}

fn depends_on(suite: Suite, on: Suite) -> bool {
    let mut cur = suite.prerequisite();
    while let Some(p) = cur {
        if p == on {
            return true;
        }
        cur = p.prerequisite();
    }
    false
}

/// Twistor checks for `F` on `H`, followed, when `F` is usable, by the
/// opposite/twist compatibility and the default suites on `H_F`.
pub fn run_twistor_suites(
    h: &QhsaStructure,
    f: &TensorElement,
    declared_inverse: Option<&TensorElement>,
    doc: &mut ReportDocument,
) {
    let (mut report, ms) = timed(|| check_twistor(h, f));
    let twistor = Twistor::for_structure(h, f.clone(), declared_inverse.cloned());
    match &twistor {
        Ok(t) => report.extend(check_cocycle(h, t)),
        Err(e) => report.skip("twistor.cocycle", e.to_string()),
    }
    doc.push_report("twistor", report, ms);
    let Ok(t) = twistor else {
        doc.push(SuiteResult::skipped("opposite-twist", "invalid twistor".into()), 0.0);
        doc.push(SuiteResult::skipped("twisted", "invalid twistor".into()), 0.0);
        return;
    };
    let (report, ms) = timed(|| check_opposite_twist(h, &t));
    doc.push_report("opposite-twist", report, ms);
    let (twisted, ms) = timed(|| run_suites(&twist_structure(h, &t), &Suite::defaults()));
    let mut entries = Vec::new();
    for s in twisted.suites {
        for mut e in s.entries {
            e.id = format!("twisted.{}", e.id);
            entries.push(e);
        }
    }
    doc.push_report("twisted", CheckReport { entries }, ms);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn r_suites_skip_without_r() {
        let h2 = fixtures::structure("h2").unwrap();
        let doc = run_suites(&h2, &Suite::defaults());
        assert!(doc.passed());
        for name in ["quasi-triangular", "qqybe", "twist-by-r"] {
            assert_eq!(doc.suite(name).unwrap().status, Status::Skipped, "{name}");
        }
        assert_eq!(doc.suite("drinfeld").unwrap().status, Status::Pass);
    }

    #[test]
    fn failed_prerequisite_skips_dependents() {
        let h = fixtures::structure("h2-broken-pentagon").unwrap();
        let doc = run_suites(&h, &Suite::defaults());
        assert_eq!(doc.failed_ids(), vec!["qb.pentagon", "qb.phi_outer_counit"]);
        for name in ["antipode", "pentagon", "sweedler", "eta", "drinfeld"] {
            assert_eq!(doc.suite(name).unwrap().status, Status::Skipped, "{name}");
        }
    }

    #[test]
    fn unselected_prerequisites_still_gate() {
        let h = fixtures::structure("h2-broken-antipode").unwrap();
        let doc = run_suites(&h, &[Suite::Drinfeld]);
        assert_eq!(doc.suites.len(), 1);
        assert_eq!(doc.suites[0].status, Status::Skipped);
    }

    #[test]
    fn report_is_deterministic_without_timing() {
        let h = fixtures::structure("ext").unwrap();
        let a = run_suites(&h, &Suite::ALL).without_timing().to_json();
        let b = run_suites(&h, &Suite::ALL).without_timing().to_json();
        assert_eq!(a, b);
        assert!(!a.contains("millis"));
    }
}
