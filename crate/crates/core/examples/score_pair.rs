//! Scores an aligned pair with every metric and prints the report.
//!
//! ```text
//! cargo run --example score_pair [-- SOURCE.json TARGET.json]
//! ```
//!
//! Defaults to the bundled Snowman excerpt (English → Japanese).

use std::path::PathBuf;

use lyreval::corpus::read_document;
use lyreval::make_aligned_pair;
use lyreval::stats::Evaluator;

fn main() -> lyreval::Result<()> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut args = std::env::args_os().skip(1).map(PathBuf::from);
    let source = args.next().unwrap_or_else(|| fixtures.join("snowman_en.json"));
    let target = args.next().unwrap_or_else(|| fixtures.join("snowman_ja.json"));

    let pair = make_aligned_pair(read_document(&source)?, read_document(&target)?, true)?;
    let report = Evaluator::offline().evaluate_pair(&pair);

    println!(
        "{} ({} → {})",
        report.title, report.source_language, report.target_language
    );
    for (name, outcome) in [
        ("Dis_syl", &report.dis_syl),
        ("Sim_pho", &report.sim_pho),
        ("Dis_mus", &report.dis_mus),
        ("line-wise sts", &report.line_sem),
        ("Sim_sem", &report.sim_sem),
    ] {
        match outcome.value() {
            Some(v) => println!("  {name:<14} {v:.4}"),
            None => println!("  {name:<14} {outcome:?}"),
        }
    }
    if let (Some(a), Some(b)) = (&report.per_section_pho_source, &report.per_section_pho_target) {
        println!("  pho by section  source {a:.2?}");
        println!("                  target {b:.2?}");
    }
    Ok(())
}
