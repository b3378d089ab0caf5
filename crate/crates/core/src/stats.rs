//! Batch evaluation and per-direction averages over a corpus.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lyrics::{AlignedPair, Language};
use crate::metrics::{
    line_syllable_count_distance, matrix_distance, phoneme_repetition_similarity, section_pho_profile,
    self_dissimilarity_matrix, MetricOutcome, MetricReport, REPORT_SCHEMA_VERSION,
};
use crate::phonology::Phonology;
use crate::semantics::{line_wise_semantic_similarity, semantic_similarity, SemanticContext};

/// Which metrics to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricSelection {
    pub syl: bool,
    pub pho: bool,
    pub mus: bool,
    pub sem: bool,
}

impl MetricSelection {
    pub const ALL: MetricSelection = MetricSelection {
        syl: true,
        pho: true,
        mus: true,
        sem: true,
    };

    /// Everything except the semantic metrics, which need a provider.
    pub const FORM: MetricSelection = MetricSelection {
        syl: true,
        pho: true,
        mus: true,
        sem: false,
    };

    pub fn is_empty(&self) -> bool {
        !(self.syl || self.pho || self.mus || self.sem)
    }
}

impl Default for MetricSelection {
    fn default() -> Self {
        MetricSelection::ALL
    }
}

impl FromStr for MetricSelection {
    type Err = Error;

    /// Parses a comma-separated list drawn from `syl,pho,mus,sem`.
    fn from_str(s: &str) -> Result<Self> {
        let mut sel = MetricSelection {
            syl: false,
            pho: false,
            mus: false,
            sem: false,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "syl" => sel.syl = true,
                "pho" => sel.pho = true,
                "mus" => sel.mus = true,
                "sem" => sel.sem = true,
                "all" => sel = MetricSelection::ALL,
                other => {
                    return Err(Error::Validation(format!(
                        "unknown metric {other:?} (expected syl, pho, mus, sem or all)"
                    )))
                }
            }
        }
        if sel.is_empty() {
            return Err(Error::Validation("at least one metric must be selected".into()));
        }
        Ok(sel)
    }
}

impl fmt::Display for MetricSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [
            (self.syl, "syl"),
            (self.pho, "pho"),
            (self.mus, "mus"),
            (self.sem, "sem"),
        ]
        .into_iter()
        .filter_map(|(on, n)| on.then_some(n))
        .collect();
        f.write_str(&names.join(","))
    }
}

fn failure(e: &Error) -> MetricOutcome {
    match e {
        Error::Domain(reason) => MetricOutcome::Undefined { reason: reason.clone() },
        e => MetricOutcome::Failed { error: e.to_string() },
    }
}

fn outcome(r: Result<f64>) -> MetricOutcome {
    match r {
        Ok(v) => MetricOutcome::Value { value: v },
        Err(e) => failure(&e),
    }
}

/// Computes [`MetricReport`]s. Holds the phonology and, when semantic
/// metrics are selected, the embedding context.
pub struct Evaluator {
    phonology: Phonology,
    semantics: Option<SemanticContext>,
    selection: MetricSelection,
}

impl Evaluator {
    pub fn new(phonology: Phonology, selection: MetricSelection, semantics: Option<SemanticContext>) -> Result<Self> {
        if selection.is_empty() {
            return Err(Error::Config("at least one metric must be selected".into()));
        }
        if selection.sem && semantics.is_none() {
            return Err(Error::Config("semantic metrics need an embedding provider".into()));
        }
        Ok(Evaluator {
            phonology,
            semantics,
            selection,
        })
    }

    /// All metrics, standard phonology, stub embeddings.
    pub fn offline() -> Self {
        Evaluator::new(
            Phonology::standard(),
            MetricSelection::ALL,
            Some(SemanticContext::stub()),
        )
        .expect("valid configuration")
    }

    pub fn phonology(&self) -> &Phonology {
        &self.phonology
    }

    pub fn semantics(&self) -> Option<&SemanticContext> {
        self.semantics.as_ref()
    }

    pub fn selection(&self) -> MetricSelection {
        self.selection
    }

    /// Evaluates one pair. Metric failures are recorded in the report
    /// rather than returned.
    pub fn evaluate_pair(&self, pair: &AlignedPair) -> MetricReport {
        let sel = self.selection;
        let p = &self.phonology;
        let mut report = MetricReport {
            schema_version: REPORT_SCHEMA_VERSION,
            title: pair.source().metadata().title.clone(),
            source_language: pair.source().language(),
            target_language: pair.target().language(),
            singable: pair.singable(),
            dis_syl: MetricOutcome::Skipped,
            sim_pho: MetricOutcome::Skipped,
            dis_mus: MetricOutcome::Skipped,
            line_sem: MetricOutcome::Skipped,
            sim_sem: MetricOutcome::Skipped,
            per_section_pho_source: None,
            per_section_pho_target: None,
            source_matrix: None,
            target_matrix: None,
        };
        if sel.syl {
            report.dis_syl = outcome(line_syllable_count_distance(pair, p));
        }
        if sel.pho {
            report.per_section_pho_source = section_pho_profile(pair.source(), p).ok();
            report.per_section_pho_target = section_pho_profile(pair.target(), p).ok();
            report.sim_pho = match phoneme_repetition_similarity(pair, p) {
                Ok(Some(v)) => MetricOutcome::Value { value: v },
                Ok(None) => MetricOutcome::Undefined {
                    reason: "per-section pho profile has zero variance".into(),
                },
                Err(e) => failure(&e),
            };
        }
        if sel.mus {
            let a = self_dissimilarity_matrix(pair.source(), p);
            let b = self_dissimilarity_matrix(pair.target(), p);
            report.dis_mus = match (&a, &b) {
                (Ok(a), Ok(b)) => outcome(matrix_distance(a, b)),
                (Err(e), _) | (_, Err(e)) => failure(e),
            };
            report.source_matrix = a.ok();
            report.target_matrix = b.ok();
        }
        if sel.sem {
            let ctx = self.semantics.as_ref().expect("checked in Evaluator::new");
            report.line_sem = outcome(line_wise_semantic_similarity(pair, ctx));
            report.sim_sem = outcome(semantic_similarity(pair, ctx));
        }
        report
    }

    /// Evaluates pairs in parallel; output order follows input order.
    pub fn evaluate_all(&self, pairs: &[AlignedPair]) -> Vec<MetricReport> {
        pairs.par_iter().map(|p| self.evaluate_pair(p)).collect()
    }
}

/// Translation direction plus singability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupKey {
    pub source: Language,
    pub target: Language,
    pub singable: bool,
}

impl GroupKey {
    pub fn of(report: &MetricReport) -> Self {
        GroupKey {
            source: report.source_language,
            target: report.target_language,
            singable: report.singable,
        }
    }
}

impl fmt::Display for GroupKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.singable { "singable" } else { "non-singable" };
        write!(f, "{}→{} ({kind})", self.source, self.target)
    }
}

/// Mean of the defined values of one metric, with how many there were.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricMean {
    pub mean: Option<f64>,
    pub count: usize,
}

impl MetricMean {
    /// Sums in sorted order so the result does not depend on input order,
    /// and keeps the mean inside `[min, max]` despite rounding.
    fn of(mut values: Vec<f64>) -> Self {
        if values.is_empty() {
            return MetricMean { mean: None, count: 0 };
        }
        values.sort_by(f64::total_cmp);
        let n = values.len();
        let mean = (values.iter().sum::<f64>() / n as f64).clamp(values[0], values[n - 1]);
        MetricMean {
            mean: Some(mean),
            count: n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub key: GroupKey,
    pub pairs: usize,
    pub dis_syl: MetricMean,
    pub sim_pho: MetricMean,
    pub dis_mus: MetricMean,
    pub line_sem: MetricMean,
    pub sim_sem: MetricMean,
}

impl GroupSummary {
    /// `(name, mean)` for every metric, in report order.
    pub fn metrics(&self) -> [(&'static str, MetricMean); 5] {
        [
            ("dis_syl", self.dis_syl),
            ("sim_pho", self.sim_pho),
            ("dis_mus", self.dis_mus),
            ("line_sem", self.line_sem),
            ("sim_sem", self.sim_sem),
        ]
    }
}

/// Per-group means, ordered by key.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GroupedAverages {
    pub groups: Vec<GroupSummary>,
}

impl GroupedAverages {
    pub fn get(&self, key: &GroupKey) -> Option<&GroupSummary> {
        self.groups.iter().find(|g| &g.key == key)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// One row per group × metric:
    /// `source,target,singable,metric,mean,count,pairs`. Undefined means are
    /// left empty.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["source", "target", "singable", "metric", "mean", "count", "pairs"])
            .expect("in-memory write");
        for g in &self.groups {
            for (name, m) in g.metrics() {
                w.write_record([
                    g.key.source.tag().to_string(),
                    g.key.target.tag().to_string(),
                    g.key.singable.to_string(),
                    name.to_string(),
                    m.mean.map(|v| v.to_string()).unwrap_or_default(),
                    m.count.to_string(),
                    g.pairs.to_string(),
                ])
                .expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

/// Groups reports by direction and singability and averages each metric
/// over its defined values.
pub fn grouped_averages(reports: &[MetricReport]) -> Result<GroupedAverages> {
    if reports.is_empty() {
        return Err(Error::Domain("no reports to average".into()));
    }
    let mut by_key: BTreeMap<GroupKey, Vec<&MetricReport>> = BTreeMap::new();
    for r in reports {
        by_key.entry(GroupKey::of(r)).or_default().push(r);
    }
    let groups = by_key
        .into_iter()
        .map(|(key, rs)| {
            let collect = |f: fn(&MetricReport) -> &MetricOutcome| {
                MetricMean::of(rs.iter().filter_map(|r| f(r).value()).collect())
            };
            GroupSummary {
                key,
                pairs: rs.len(),
                dis_syl: collect(|r| &r.dis_syl),
                sim_pho: collect(|r| &r.sim_pho),
                dis_mus: collect(|r| &r.dis_mus),
                line_sem: collect(|r| &r.line_sem),
                sim_sem: collect(|r| &r.sim_sem),
            }
        })
        .collect();
    Ok(GroupedAverages { groups })
}

fn slug(title: &str) -> String {
    let s: String = title
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() {
                c.to_ascii_lowercase()
            } else {
                '_'
            }
        })
        .collect();
    let s = s.trim_matches('_').to_string();
    if s.is_empty() {
        "pair".into()
    } else {
        s
    }
}

/// Writes one `NNN_<title>_<SRC>-<TGT>.json` file per report into `dir`.
pub fn write_pair_reports(dir: &Path, reports: &[MetricReport]) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::with_capacity(reports.len());
    for (i, r) in reports.iter().enumerate() {
        let name = format!(
            "{i:03}_{}_{}-{}.json",
            slug(&r.title),
            r.source_language.tag(),
            r.target_language.tag()
        );
        let path = dir.join(name);
        std::fs::write(&path, r.to_json() + "\n").map_err(|e| Error::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}
