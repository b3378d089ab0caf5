//! Self-dissimilarity matrices of the Snowman excerpt in three languages,
//! and the musical structure distance between them.
//!
//! ```text
//! cargo run --example self_dissimilarity [-- OUT_DIR]
//! ```
//!
//! With `OUT_DIR`, each matrix is also written as an SVG heatmap.

use std::path::PathBuf;

use lyreval::corpus::read_document;
use lyreval::metrics::{matrix_distance, section_pho_profile, self_dissimilarity_matrix};
use lyreval::{render, Phonology};

fn main() -> lyreval::Result<()> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let out = std::env::args_os().nth(1).map(PathBuf::from);
    let phonology = Phonology::standard();

    let mut matrices = Vec::new();
    for lang in ["en", "ja", "ko"] {
        let doc = read_document(&fixtures.join(format!("snowman_{lang}.json")))?;
        let labels: Vec<&str> = doc.sections().iter().map(|s| s.label().unwrap_or("?")).collect();
        let pho = section_pho_profile(&doc, &phonology)?;
        let m = self_dissimilarity_matrix(&doc, &phonology)?;

        println!("{} sections {labels:?}", doc.language());
        println!("  pho {pho:.2?}");
        for row in m.rows() {
            println!("  {row:.2?}");
        }
        if let Some(dir) = &out {
            std::fs::create_dir_all(dir).expect("create output directory");
            let svg = render::heatmap_svg(&format!("Snowman ({})", doc.language()), m.rows());
            std::fs::write(dir.join(format!("snowman_{lang}.svg")), svg).expect("write svg");
        }
        matrices.push((doc.language(), m));
    }

    let (en_lang, en) = &matrices[0];
    for (lang, m) in &matrices[1..] {
        println!("Dis_mus({en_lang}, {lang}) = {:.4}", matrix_distance(en, m)?);
    }
    Ok(())
}
