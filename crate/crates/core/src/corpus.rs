//! Corpus manifests: lists of aligned document pairs on disk.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lyrics::{make_aligned_pair, parse_document, AlignedPair, LyricsDocument};

pub const MANIFEST_FILE_NAME: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub source: PathBuf,
    pub target: PathBuf,
    pub singable: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusManifest {
    pub pairs: Vec<ManifestEntry>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LoadMode {
    /// Any bad entry aborts the load.
    #[default]
    Strict,
    /// Bad entries are skipped and reported.
    Lenient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkippedEntry {
    pub index: usize,
    pub entry: ManifestEntry,
    pub reason: String,
}

#[derive(Debug)]
pub struct LoadedCorpus {
    pub pairs: Vec<AlignedPair>,
    pub skipped: Vec<SkippedEntry>,
}

pub fn read_document(path: &Path) -> Result<LyricsDocument> {
    let raw = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_document(&raw).map_err(|e| match e {
        Error::Parse { line, column, message } => Error::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        Error::Validation(m) => Error::Validation(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn read_manifest(path: &Path) -> Result<CorpusManifest> {
    let raw = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&raw).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: format!("{}: {e}", path.display()),
    })
}

/// Loads every pair listed in a manifest. `root` may be the manifest file or
/// a directory containing `manifest.json`. Document paths are resolved
/// relative to the manifest's directory. Output order follows the manifest.
pub fn load_corpus(root: &Path, mode: LoadMode) -> Result<LoadedCorpus> {
    let manifest_path = if root.is_dir() {
        root.join(MANIFEST_FILE_NAME)
    } else {
        root.to_path_buf()
    };
    let manifest = read_manifest(&manifest_path)?;
    let base = manifest_path.parent().unwrap_or(Path::new("."));

    let results: Vec<Result<AlignedPair>> = manifest
        .pairs
        .par_iter()
        .map(|entry| {
            let source = read_document(&base.join(&entry.source))?;
            let target = read_document(&base.join(&entry.target))?;
            make_aligned_pair(source, target, entry.singable)
        })
        .collect();

    let mut pairs = Vec::with_capacity(results.len());
    let mut skipped = Vec::new();
    for (index, (result, entry)) in results.into_iter().zip(manifest.pairs).enumerate() {
        match result {
            Ok(pair) => pairs.push(pair),
            Err(e) if mode == LoadMode::Lenient => {
                log::warn!("skipping manifest entry {index}: {e}");
                skipped.push(SkippedEntry {
                    index,
                    entry,
                    reason: e.to_string(),
                });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(LoadedCorpus { pairs, skipped })
}
