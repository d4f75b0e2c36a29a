//! Report and check types produced by scenario runs. Everything here is
//! plain serializable data; field order and vector order are fixed by the
//! pipeline so serialized reports are reproducible byte-for-byte.

use serde::Serialize;

use crate::matrix::Mat2;
use crate::ring::{RingElem, RingId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One verified claim: an identifier, a verdict, and a human-readable
/// statement of what was compared.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn from_bool(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Divisor candidates attached to one commutator-defect candidate.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct ZDivisors {
    pub z: RingElem,
    pub ys: Vec<RingElem>,
}

/// One cell of the `x^2 = z/y + y + 4` table.
#[derive(Debug, Clone, Serialize)]
pub struct TableCell {
    pub y: RingElem,
    pub z: RingElem,
    pub divisible: bool,
    pub x2: Option<RingElem>,
}

/// A table value that passed the exact squareness test, with its roots.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct SquareSurvivor {
    pub x2: RingElem,
    pub roots: Vec<RingElem>,
}

/// Geodesic-length test of one square root against the stored spectrum.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct GeodesicElimination {
    pub x2: RingElem,
    pub root: RingElem,
    pub length: f64,
    pub eliminated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    /// Every surviving trace satisfies `x^2 = 4`, i.e. `x = +-2`.
    ParabolicOnly,
    SurvivorsRemain,
}

/// Row/column layout mirroring the source table orientation.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct TableLayout {
    /// Which candidate family labels the rows: "z" or "y".
    pub row_axis: &'static str,
    pub rows: Vec<LabeledElem>,
    pub cols: Vec<LabeledElem>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LabeledElem {
    pub label: String,
    pub elem: RingElem,
}

/// Full audit trail of one exact scenario run.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct ScenarioReport {
    pub ring: RingId,
    pub base_defect: RingElem,
    pub z_candidates: Vec<RingElem>,
    pub y_candidates: Vec<RingElem>,
    pub y_candidates_per_z: Vec<ZDivisors>,
    pub table: Vec<TableCell>,
    pub square_survivors: Vec<SquareSurvivor>,
    pub geodesic_eliminations: Vec<GeodesicElimination>,
    pub conclusion: Conclusion,
    pub layout: TableLayout,
}

/// Audit trail of the three-conjugate-generator verification.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct RemarkReport {
    pub ring: RingId,
    pub alpha_word: String,
    pub beta_word: String,
    pub gamma_word: String,
    pub alpha: Mat2,
    pub beta: Mat2,
    pub gamma: Mat2,
    pub recovery_word: String,
    pub common_trace: RingElem,
    pub loxodromic: bool,
}

/// Audit trail of the numeric triangle-group construction.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct TriangleReport {
    pub q: u32,
    pub trace: f64,
    pub expected_trace: f64,
    pub trace_deviation: f64,
    pub power_exponent: u32,
    pub power_deviation: f64,
    pub c_squared_deviation: f64,
    pub d_power_deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum ReportBody {
    Pipeline(ScenarioReport),
    Remark(RemarkReport),
    Triangle(TriangleReport),
    /// A run that aborted before producing a report.
    Failure { error: String },
}

impl ReportBody {
    pub fn as_pipeline(&self) -> Option<&ScenarioReport> {
        match self {
            ReportBody::Pipeline(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_remark(&self) -> Option<&RemarkReport> {
        match self {
            ReportBody::Remark(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_triangle(&self) -> Option<&TriangleReport> {
        match self {
            ReportBody::Triangle(r) => Some(r),
            _ => None,
        }
    }
}

/// One named verification run: its checks and its report.
#[derive(Debug, Clone, Serialize)]
pub struct ScenarioRun {
    pub name: String,
    pub checks: Vec<Check>,
    pub report: ReportBody,
}

impl ScenarioRun {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}
