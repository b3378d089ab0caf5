//! Cross-scape grid: semantic similarity of every contiguous window of
//! lines, from single lines up to the whole lyric.
//!
//! ```text
//! cargo run --example cross_scape [-- SOURCE.json TARGET.json]
//! ```
//!
//! Uses the offline stub embedder, so the numbers only reflect surface
//! overlap between the English text and the target's glosses.

use std::path::PathBuf;

use lyreval::corpus::read_document;
use lyreval::make_aligned_pair;
use lyreval::semantics::{cross_scape, SemanticContext};

fn main() -> lyreval::Result<()> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut args = std::env::args_os().skip(1).map(PathBuf::from);
    let source = args.next().unwrap_or_else(|| fixtures.join("twinkle_en.json"));
    let target = args.next().unwrap_or_else(|| fixtures.join("twinkle_ko.json"));

    let pair = make_aligned_pair(read_document(&source)?, read_document(&target)?, true)?;
    let grid = cross_scape(&pair, &SemanticContext::stub())?;

    // Apex first, like the usual pyramid drawing.
    for (k, row) in grid.levels().iter().enumerate().rev() {
        let indent = " ".repeat(3 * k);
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.2}")).collect();
        println!("{:>2} {indent}{}", k + 1, cells.join(" "));
    }
    println!("whole-lyric similarity: {:.3}", grid.apex());
    Ok(())
}
