//! Evaluates the fixture corpus and prints per-direction averages for
//! singable and non-singable translations.
//!
//! ```text
//! cargo run --release --example corpus_report [-- MANIFEST]
//! ```

use std::path::PathBuf;
use std::time::Instant;

use lyreval::corpus::{load_corpus, LoadMode};
use lyreval::stats::{grouped_averages, Evaluator};

fn main() -> lyreval::Result<()> {
    let manifest = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/corpus"));

    let started = Instant::now();
    let corpus = load_corpus(&manifest, LoadMode::Strict)?;
    let reports = Evaluator::offline().evaluate_all(&corpus.pairs);
    let grouped = grouped_averages(&reports)?;

    println!(
        "{:<22} {:>5} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "group", "pairs", "Dis_syl", "Sim_pho", "Dis_mus", "line", "Sim_sem"
    );
    let cell = |m: lyreval::stats::MetricMean| m.mean.map_or("-".to_string(), |v| format!("{v:.3}"));
    for g in &grouped.groups {
        println!(
            "{:<22} {:>5} {:>8} {:>8} {:>8} {:>8} {:>8}",
            g.key.to_string(),
            g.pairs,
            cell(g.dis_syl),
            cell(g.sim_pho),
            cell(g.dis_mus),
            cell(g.line_sem),
            cell(g.sim_sem)
        );
    }
    println!("{} pairs in {:.2?}", reports.len(), started.elapsed());
    Ok(())
}
