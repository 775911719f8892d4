//! The claim ledger: every numerical statement of the construction,
//! recomputed and compared against its stated value.
//!
//! Claims are grouped by case tag (`g2p5`, `g4p3`, `g3p3`, `general`), the
//! prefix of their id. They run in parallel and the report is sorted by id.

mod claims;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use claims::CASES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A hypothesis that is recorded but not recomputed.
    Assumed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Assumed => "assumed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub paper_anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Restrict to one case tag.
    pub only: Option<String>,
    /// Seed for the randomized quartic certificates.
    pub seed: u64,
    pub max_group_order: usize,
    /// Test hook: perturb `Δ²` in the genus-3 product lattice.
    pub corrupt_gram: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            only: None,
            seed: 0,
            max_group_order: crate::monodromy::DEFAULT_MAX_GROUP_ORDER,
            corrupt_gram: false,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LedgerError {
    #[error("unknown case '{0}'; expected one of g2p5, g4p3, g3p3, general")]
    UnknownCase(String),
    #[error("malformed JSON report: {0}")]
    Json(String),
}

/// The outcome of a ledger run, sorted by claim id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LedgerReport {
    pub claims: Vec<ClaimReport>,
}

impl LedgerReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClaimReport> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// `0` if no claim failed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, LedgerError> {
        serde_json::from_str(text).map_err(|e| LedgerError::Json(e.to_string()))
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| claim | status | expected | computed | anchor |\n|---|---|---|---|---|\n");
        for c in &self.claims {
            let cell = |s: &str| s.replace('|', "\\|");
            let _ = writeln!(
                out,
                "| `{}` | {} | {} | {} | {} |",
                c.claim_id,
                c.status.as_str(),
                cell(&c.expected),
                cell(&c.computed),
                cell(&c.paper_anchor)
            );
        }
        let count = |s| self.claims.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "\n{} pass, {} fail, {} assumed",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Assumed)
        );
        out
    }
}

/// Run the ledger. Module errors mark the affected claim as failed.
pub fn verify_paper(options: &VerifyOptions) -> Result<LedgerReport, LedgerError> {
    if let Some(case) = &options.only {
        if !CASES.contains(&case.as_str()) {
            return Err(LedgerError::UnknownCase(case.clone()));
        }
    }
    let selected: Vec<_> = claims::all()
        .into_iter()
        .filter(|c| options.only.as_deref().is_none_or(|case| c.case() == case))
        .collect();
    let mut reports: Vec<ClaimReport> = selected.par_iter().map(|c| c.run(options)).collect();
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(LedgerReport { claims: reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let report = verify_paper(&VerifyOptions::default()).unwrap();
        let failed: Vec<_> = report.failures().collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert_eq!(report.exit_code(), 0);
        assert!(report.claims.windows(2).all(|w| w[0].claim_id < w[1].claim_id));
    }

    #[test]
    fn assumed_entries_are_recorded() {
        let report = verify_paper(&VerifyOptions::default()).unwrap();
        let assumed: Vec<_> = report.claims.iter().filter(|c| c.status == Status::Assumed).collect();
        assert!(assumed.iter().any(|c| c.claim_id.contains("q_rel")));
        assert!(assumed.iter().any(|c| c.claim_id.contains("flex_tangent")));
    }

    #[test]
    fn corrupted_gram_fails() {
        let opts = VerifyOptions { corrupt_gram: true, ..Default::default() };
        let report = verify_paper(&opts).unwrap();
        assert_eq!(report.exit_code(), 1);
        assert!(report.failures().any(|c| c.claim_id.contains("x_p")));
    }

    #[test]
    fn filtering_by_case() {
        let opts = VerifyOptions { only: Some("g4p3".into()), ..Default::default() };
        let report = verify_paper(&opts).unwrap();
        assert!(!report.claims.is_empty());
        assert!(report.claims.iter().all(|c| c.claim_id.starts_with("g4p3.")));
        let bad = VerifyOptions { only: Some("g9p9".into()), ..Default::default() };
        assert_eq!(verify_paper(&bad), Err(LedgerError::UnknownCase("g9p9".into())));
    }

    #[test]
    fn json_round_trip() {
        let report = verify_paper(&VerifyOptions::default()).unwrap();
        assert_eq!(LedgerReport::from_json(&report.to_json()).unwrap(), report);
        assert!(LedgerReport::from_json("{").is_err());
    }

    #[test]
    fn markdown_has_one_row_per_claim() {
        let report = verify_paper(&VerifyOptions { only: Some("general".into()), ..Default::default() }).unwrap();
        let md = report.to_markdown();
        assert_eq!(md.lines().filter(|l| l.starts_with("| `")).count(), report.claims.len());
    }
}
