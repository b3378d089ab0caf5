//! Embedding-backed semantic similarity between a lyric and its translation.
//!
//! Every non-English line is first rendered in English (gloss or
//! translator), then embedded; similarity is the cosine of the embeddings.

mod provider;
pub mod remote;
mod translate;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use provider::{CachedEmbedder, EmbeddingFile, EmbeddingProvider, EmbeddingVector, FileProvider, StubProvider};
pub use remote::{RemoteProvider, RemoteTranslator};
pub use translate::{english_text, english_texts, TranslationProvider};

use crate::error::{Error, Result};
use crate::lyrics::{AlignedPair, LyricsDocument};

/// Embedder plus optional translator, shared by all semantic operations.
pub struct SemanticContext {
    embedder: CachedEmbedder,
    translator: Option<Arc<dyn TranslationProvider>>,
}

impl SemanticContext {
    pub fn new(provider: Arc<dyn EmbeddingProvider>) -> Self {
        SemanticContext {
            embedder: CachedEmbedder::new(provider),
            translator: None,
        }
    }

    /// Deterministic offline context backed by [`StubProvider`].
    pub fn stub() -> Self {
        SemanticContext::new(Arc::new(StubProvider::default()))
    }

    pub fn with_translator(mut self, translator: Arc<dyn TranslationProvider>) -> Self {
        self.translator = Some(translator);
        self
    }

    pub fn embedder(&self) -> &CachedEmbedder {
        &self.embedder
    }

    pub fn translator(&self) -> Option<&dyn TranslationProvider> {
        self.translator.as_deref()
    }

    /// Cosine similarity of the embeddings of two texts.
    pub fn sts(&self, a: &str, b: &str) -> Result<f64> {
        if a.trim().is_empty() || b.trim().is_empty() {
            return Err(Error::Domain("sts needs two non-empty texts".into()));
        }
        let va = self.embedder.embed(a)?;
        let vb = self.embedder.embed(b)?;
        va.cosine(&vb)
    }

    fn line_texts(&self, doc: &LyricsDocument) -> Result<Vec<String>> {
        english_texts(&doc.lines().collect::<Vec<_>>(), doc.language(), self.translator())
    }

    /// English text of each section, lines joined by single spaces.
    fn section_texts(&self, doc: &LyricsDocument) -> Result<Vec<String>> {
        let lines = self.line_texts(doc)?;
        let mut out = Vec::with_capacity(doc.section_count());
        let mut at = 0;
        for s in doc.sections() {
            out.push(lines[at..at + s.len()].join(" "));
            at += s.len();
        }
        Ok(out)
    }

    fn prefetch(&self, a: &[String], b: &[String]) -> Result<()> {
        let all: Vec<String> = a.iter().chain(b).cloned().collect();
        self.embedder.prefetch(&all)
    }
}

/// Section sts weighted by each section's share of lines.
pub fn semantic_similarity(pair: &AlignedPair, ctx: &SemanticContext) -> Result<f64> {
    let src = ctx.section_texts(pair.source())?;
    let tgt = ctx.section_texts(pair.target())?;
    ctx.prefetch(&src, &tgt)?;
    let n = pair.line_count() as f64;
    let weights: Vec<f64> = pair.source().sections().iter().map(|s| s.len() as f64 / n).collect();
    debug_assert!((weights.iter().sum::<f64>() - 1.0).abs() < 1e-9);
    let mut total = 0.0;
    for ((a, b), w) in src.iter().zip(&tgt).zip(weights) {
        total += w * ctx.sts(a, b)?;
    }
    Ok(total)
}

/// Mean of per-line sts over all aligned lines.
pub fn line_wise_semantic_similarity(pair: &AlignedPair, ctx: &SemanticContext) -> Result<f64> {
    let sims = line_sts(pair, ctx)?;
    Ok(sims.iter().sum::<f64>() / sims.len() as f64)
}

/// Raw (unclamped) sts of every aligned line pair.
pub fn line_sts(pair: &AlignedPair, ctx: &SemanticContext) -> Result<Vec<f64>> {
    let src = ctx.line_texts(pair.source())?;
    let tgt = ctx.line_texts(pair.target())?;
    ctx.prefetch(&src, &tgt)?;
    src.iter().zip(&tgt).map(|(a, b)| ctx.sts(a, b)).collect()
}

/// Triangular grid of similarities over all contiguous line windows.
///
/// `levels[k - 1][i]` is the clamped sts of the window of `k` lines
/// starting at line `i`; the last level has a single whole-lyrics cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossScapeGrid {
    n: usize,
    levels: Vec<Vec<f64>>,
}

impl CrossScapeGrid {
    pub fn from_levels(levels: Vec<Vec<f64>>) -> Result<Self> {
        let n = levels.len();
        if n == 0 {
            return Err(Error::Domain("cross-scape grid needs at least one line".into()));
        }
        for (k, row) in levels.iter().enumerate() {
            if row.len() != n - k {
                return Err(Error::Domain(format!(
                    "cross-scape level {} has {} cells, expected {}",
                    k + 1,
                    row.len(),
                    n - k
                )));
            }
            if row.iter().any(|v| !(0.0..=1.0).contains(v)) {
                return Err(Error::Domain(format!(
                    "cross-scape level {} has a cell outside [0, 1]",
                    k + 1
                )));
            }
        }
        Ok(CrossScapeGrid { n, levels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &[Vec<f64>] {
        &self.levels
    }

    /// Cell for a window of `k` lines (1-based) starting at line `i` (0-based).
    pub fn cell(&self, k: usize, i: usize) -> f64 {
        self.levels[k - 1][i]
    }

    pub fn apex(&self) -> f64 {
        self.levels[self.n - 1][0]
    }
}

pub fn cross_scape(pair: &AlignedPair, ctx: &SemanticContext) -> Result<CrossScapeGrid> {
    let src = ctx.line_texts(pair.source())?;
    let tgt = ctx.line_texts(pair.target())?;
    let n = src.len();
    let windows: Vec<(usize, usize)> = (1..=n).flat_map(|k| (0..=n - k).map(move |i| (k, i))).collect();
    let joined: Vec<(String, String)> = windows
        .iter()
        .map(|&(k, i)| (src[i..i + k].join(" "), tgt[i..i + k].join(" ")))
        .collect();
    let (a, b): (Vec<String>, Vec<String>) = joined.iter().cloned().unzip();
    ctx.prefetch(&a, &b)?;
    let values: Vec<f64> = joined
        .par_iter()
        .map(|(a, b)| ctx.sts(a, b).map(|v| v.clamp(0.0, 1.0)))
        .collect::<Result<_>>()?;
    let mut levels: Vec<Vec<f64>> = (1..=n).map(|k| Vec::with_capacity(n - k + 1)).collect();
    for (&(k, _), v) in windows.iter().zip(values) {
        levels[k - 1].push(v);
    }
    CrossScapeGrid::from_levels(levels)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Granularity {
    Line,
    #[default]
    Section,
}

impl fmt::Display for Granularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Granularity::Line => "line",
            Granularity::Section => "section",
        })
    }
}

impl FromStr for Granularity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "line" => Ok(Granularity::Line),
            "section" => Ok(Granularity::Section),
            other => Err(Error::Validation(format!(
                "unknown granularity {other:?} (expected line or section)"
            ))),
        }
    }
}

/// Raw sts between every source unit (rows) and every target unit (columns).
pub fn section_similarity_matrix(
    pair: &AlignedPair,
    ctx: &SemanticContext,
    granularity: Granularity,
) -> Result<Vec<Vec<f64>>> {
    let (src, tgt) = match granularity {
        Granularity::Line => (ctx.line_texts(pair.source())?, ctx.line_texts(pair.target())?),
        Granularity::Section => (ctx.section_texts(pair.source())?, ctx.section_texts(pair.target())?),
    };
    ctx.prefetch(&src, &tgt)?;
    src.par_iter()
        .map(|a| tgt.iter().map(|b| ctx.sts(a, b)).collect::<Result<Vec<_>>>())
        .collect()
}
