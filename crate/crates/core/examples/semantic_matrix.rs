//! Line-wise and section-wise semantic similarity between a lyric and its
//! translation, with the full source × target similarity matrices.
//!
//! ```text
//! cargo run --example semantic_matrix [-- SOURCE.json TARGET.json]
//! ```
//!
//! Set `LYREVAL_PROVIDER_URL` to use a running embedding service instead of
//! the offline stub.

use std::path::PathBuf;
use std::sync::Arc;

use lyreval::corpus::read_document;
use lyreval::make_aligned_pair;
use lyreval::semantics::{
    line_wise_semantic_similarity, section_similarity_matrix, semantic_similarity, Granularity, RemoteProvider,
    SemanticContext,
};

fn main() -> lyreval::Result<()> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut args = std::env::args_os().skip(1).map(PathBuf::from);
    let source = args.next().unwrap_or_else(|| fixtures.join("snowman_en.json"));
    let target = args.next().unwrap_or_else(|| fixtures.join("snowman_ko.json"));

    let ctx = match std::env::var("LYREVAL_PROVIDER_URL") {
        Ok(url) => SemanticContext::new(Arc::new(RemoteProvider::connect(&url)?)),
        Err(_) => SemanticContext::stub(),
    };
    println!("provider: {}", ctx.embedder().provider().provider_id());

    let pair = make_aligned_pair(read_document(&source)?, read_document(&target)?, true)?;
    println!(
        "line-wise similarity:    {:.3}",
        line_wise_semantic_similarity(&pair, &ctx)?
    );
    println!("section-wise similarity: {:.3}", semantic_similarity(&pair, &ctx)?);

    for granularity in [Granularity::Section, Granularity::Line] {
        println!("\n{granularity} × {granularity}:");
        for row in section_similarity_matrix(&pair, &ctx, granularity)? {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:5.2}")).collect();
            println!("  {}", cells.join(" "));
        }
    }
    Ok(())
}
