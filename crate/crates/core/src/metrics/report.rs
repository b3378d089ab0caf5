use serde::{Deserialize, Serialize};

use super::structure::DissimilarityMatrix;
use crate::lyrics::Language;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Result of one metric in a report. Undefined and skipped values are
/// explicit and never collapse to zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MetricOutcome {
    Value { value: f64 },
    Undefined { reason: String },
    Skipped,
    Failed { error: String },
}

impl MetricOutcome {
    pub fn value(&self) -> Option<f64> {
        match self {
            MetricOutcome::Value { value } => Some(*value),
            _ => None,
        }
    }

    pub fn is_value(&self) -> bool {
        matches!(self, MetricOutcome::Value { .. })
    }
}

impl From<f64> for MetricOutcome {
    fn from(value: f64) -> Self {
        MetricOutcome::Value { value }
    }
}

/// All metrics for one aligned pair, plus the intermediate artifacts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    pub schema_version: u32,
    pub title: String,
    pub source_language: Language,
    pub target_language: Language,
    pub singable: bool,
    pub dis_syl: MetricOutcome,
    pub sim_pho: MetricOutcome,
    pub dis_mus: MetricOutcome,
    pub line_sem: MetricOutcome,
    pub sim_sem: MetricOutcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_section_pho_source: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_section_pho_target: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_matrix: Option<DissimilarityMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_matrix: Option<DissimilarityMatrix>,
}

impl MetricReport {
    /// Checks every present value against its metric's range.
    pub fn ranges_hold(&self) -> bool {
        let nonneg = |o: &MetricOutcome| o.value().is_none_or(|v| v >= 0.0 && v.is_finite());
        let corr = |o: &MetricOutcome| o.value().is_none_or(|v| (-1.0 - 1e-12..=1.0 + 1e-12).contains(&v));
        let pho_ok = |p: &Option<Vec<f64>>| p.as_ref().is_none_or(|v| v.iter().all(|x| *x > 0.0 && *x <= 1.0));
        nonneg(&self.dis_syl)
            && nonneg(&self.dis_mus)
            && corr(&self.sim_pho)
            && corr(&self.sim_sem)
            && corr(&self.line_sem)
            && pho_ok(&self.per_section_pho_source)
            && pho_ok(&self.per_section_pho_target)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_json_shape() {
        let v = serde_json::to_value(MetricOutcome::from(0.5)).unwrap();
        assert_eq!(v, serde_json::json!({"status": "value", "value": 0.5}));
        let u = serde_json::to_value(MetricOutcome::Undefined {
            reason: "constant".into(),
        })
        .unwrap();
        assert_eq!(u["status"], "undefined");
        assert_eq!(MetricOutcome::Skipped.value(), None);
    }
}
