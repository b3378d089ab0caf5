//! Command-line front end. [`run`] does all the work so it can be driven
//! from tests; the binary only forwards `std::env::args`.
//!
//! Exit status: 0 on success, 1 on usage or validation errors, 2 on I/O or
//! provider errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use crate::corpus::{load_corpus, read_document, LoadMode};
use crate::error::{Error, Result};
use crate::lyrics::{make_aligned_pair, AlignedPair};
use crate::metrics::self_dissimilarity_matrix;
use crate::phonology::Phonology;
use crate::render;
use crate::semantics::{
    cross_scape, section_similarity_matrix, FileProvider, Granularity, RemoteProvider, RemoteTranslator,
    SemanticContext, StubProvider,
};
use crate::stats::{grouped_averages, write_pair_reports, Evaluator, MetricSelection};

/// Environment variable consulted when `--provider remote:` has no URL.
pub const PROVIDER_URL_ENV: &str = "LYREVAL_PROVIDER_URL";

#[derive(Debug, Parser)]
#[command(name = "lyreval", version, about = "Evaluate singable lyric translations (EN/JA/KO)")]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Embedding provider: stub, file:PATH or remote:URL
    #[arg(long, global = true, default_value = "stub")]
    provider: String,

    /// Translator for lines without a gloss: none or remote:URL
    #[arg(long, global = true, default_value = "none")]
    translator: String,

    /// Directory for output artifacts; stdout only when omitted
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Artifact formats written to --out: any of json,csv,svg
    #[arg(long, global = true, default_value = "json,csv,svg")]
    format: String,

    /// Pronunciation dictionary in CMUdict format (replaces the bundled one)
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,

    /// JSON vowel merge tables, keyed by language tag
    #[arg(long, global = true)]
    merge_table: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score one aligned pair and print the report as JSON
    Score {
        source: PathBuf,
        target: PathBuf,
        /// Comma-separated subset of syl,pho,mus,sem
        #[arg(long, default_value = "all")]
        metrics: String,
        /// Mark the pair as a non-singable translation
        #[arg(long)]
        non_singable: bool,
    },
    /// Self-dissimilarity matrix of one document
    Matrix { document: PathBuf },
    /// Cross-scape grid of semantic similarity over line windows
    Crossscape { source: PathBuf, target: PathBuf },
    /// Semantic similarity between every source and target unit
    Semmatrix {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, default_value = "section")]
        granularity: String,
    },
    /// Evaluate a corpus manifest and print grouped averages
    Corpus {
        manifest: PathBuf,
        #[arg(long, default_value = "all")]
        metrics: String,
        /// Skip unreadable or misaligned pairs instead of failing
        #[arg(long)]
        lenient: bool,
    },
    /// Print the phoneme stream of every line
    Phonemize { document: PathBuf },
    /// Print the syllable count of every line
    Syllables { document: PathBuf },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Formats {
    json: bool,
    csv: bool,
    svg: bool,
}

impl FromStr for Formats {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut f = Formats::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "json" => f.json = true,
                "csv" => f.csv = true,
                "svg" => f.svg = true,
                other => return Err(Error::Validation(format!("unknown format {other:?}"))),
            }
        }
        Ok(f)
    }
}

/// How to build the embedding provider.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProviderSpec {
    Stub,
    File(PathBuf),
    Remote(String),
}

impl ProviderSpec {
    /// Parses `stub`, `file:PATH` or `remote:URL`. An empty remote URL
    /// falls back to `env_url`.
    pub fn parse(s: &str, env_url: Option<&str>) -> Result<Self> {
        if s == "stub" {
            return Ok(ProviderSpec::Stub);
        }
        if let Some(path) = s.strip_prefix("file:") {
            if path.is_empty() {
                return Err(Error::Validation("file provider needs a path".into()));
            }
            return Ok(ProviderSpec::File(PathBuf::from(path)));
        }
        if let Some(url) = s.strip_prefix("remote:") {
            let url = if url.is_empty() { env_url.unwrap_or("") } else { url };
            if url.is_empty() {
                return Err(Error::Config(format!(
                    "remote provider needs a URL (remote:URL or {PROVIDER_URL_ENV})"
                )));
            }
            return Ok(ProviderSpec::Remote(url.to_string()));
        }
        Err(Error::Validation(format!(
            "unknown provider {s:?} (expected stub, file:PATH or remote:URL)"
        )))
    }
}

struct Session {
    common: Common,
    formats: Formats,
    phonology: Phonology,
    artifacts: Vec<(PathBuf, String)>,
}

impl Session {
    fn semantic_context(&self) -> Result<SemanticContext> {
        let env_url = std::env::var(PROVIDER_URL_ENV).ok();
        let ctx = match ProviderSpec::parse(&self.common.provider, env_url.as_deref())? {
            ProviderSpec::Stub => SemanticContext::new(Arc::new(StubProvider::default())),
            ProviderSpec::File(p) => SemanticContext::new(Arc::new(FileProvider::load(&p)?)),
            ProviderSpec::Remote(url) => SemanticContext::new(Arc::new(RemoteProvider::connect(&url)?)),
        };
        match self.common.translator.as_str() {
            "none" => Ok(ctx),
            t => match t.strip_prefix("remote:") {
                Some(url) => {
                    let url = if url.is_empty() {
                        env_url.unwrap_or_default()
                    } else {
                        url.to_string()
                    };
                    if url.is_empty() {
                        return Err(Error::Config(format!(
                            "remote translator needs a URL (remote:URL or {PROVIDER_URL_ENV})"
                        )));
                    }
                    Ok(ctx.with_translator(Arc::new(RemoteTranslator::new(&url))))
                }
                None => Err(Error::Validation(format!(
                    "unknown translator {t:?} (expected none or remote:URL)"
                ))),
            },
        }
    }

    /// Queues `contents` for `<out>/<name>` if an output directory is set.
    fn artifact(&mut self, name: &str, contents: String) {
        if let Some(dir) = &self.common.out {
            self.artifacts.push((dir.join(name), contents));
        }
    }

    fn flush(&self) -> Result<()> {
        for (path, contents) in &self.artifacts {
            if let Some(parent) = path.parent() {
                std::fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
            }
            std::fs::write(path, contents).map_err(|e| Error::io(path, e))?;
        }
        Ok(())
    }
}

fn load_pair(source: &Path, target: &Path, singable: bool) -> Result<AlignedPair> {
    make_aligned_pair(read_document(source)?, read_document(target)?, singable)
}

fn title_of(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let formats: Formats = cli.common.format.parse()?;
    let phonology = Phonology::from_files(cli.common.lexicon.as_deref(), cli.common.merge_table.as_deref())?;
    let mut s = Session {
        common: cli.common,
        formats,
        phonology,
        artifacts: Vec::new(),
    };
    let text = match cli.command {
        Command::Score {
            source,
            target,
            metrics,
            non_singable,
        } => {
            let selection: MetricSelection = metrics.parse()?;
            let pair = load_pair(&source, &target, !non_singable)?;
            let ctx = if selection.sem {
                Some(s.semantic_context()?)
            } else {
                None
            };
            let evaluator = Evaluator::new(s.phonology.clone(), selection, ctx)?;
            let json = evaluator.evaluate_pair(&pair).to_json() + "\n";
            if s.formats.json {
                s.artifact("report.json", json.clone());
            }
            json
        }
        Command::Matrix { document } => {
            let doc = read_document(&document)?;
            let m = self_dissimilarity_matrix(&doc, &s.phonology)?;
            let csv = render::matrix_csv(m.rows());
            if s.formats.csv {
                s.artifact("matrix.csv", csv.clone());
            }
            if s.formats.json {
                s.artifact(
                    "matrix.json",
                    serde_json::to_string_pretty(&m).expect("serializable") + "\n",
                );
            }
            if s.formats.svg {
                let title = format!("Self-dissimilarity: {}", title_of(&document));
                s.artifact("matrix.svg", render::heatmap_svg(&title, m.rows()));
            }
            csv
        }
        Command::Crossscape { source, target } => {
            let pair = load_pair(&source, &target, true)?;
            let grid = cross_scape(&pair, &s.semantic_context()?)?;
            let csv = render::cross_scape_csv(&grid);
            if s.formats.csv {
                s.artifact("crossscape.csv", csv.clone());
            }
            if s.formats.json {
                s.artifact(
                    "crossscape.json",
                    serde_json::to_string_pretty(&grid).expect("serializable") + "\n",
                );
            }
            if s.formats.svg {
                let title = format!("Cross-scape: {} / {}", title_of(&source), title_of(&target));
                s.artifact("crossscape.svg", render::cross_scape_svg(&title, &grid));
            }
            csv
        }
        Command::Semmatrix {
            source,
            target,
            granularity,
        } => {
            let granularity: Granularity = granularity.parse()?;
            let pair = load_pair(&source, &target, true)?;
            let m = section_similarity_matrix(&pair, &s.semantic_context()?, granularity)?;
            let csv = render::matrix_csv(&m);
            let stem = format!("semmatrix_{granularity}");
            if s.formats.csv {
                s.artifact(&format!("{stem}.csv"), csv.clone());
            }
            if s.formats.json {
                s.artifact(
                    &format!("{stem}.json"),
                    serde_json::to_string_pretty(&m).expect("serializable") + "\n",
                );
            }
            if s.formats.svg {
                let title = format!(
                    "Semantic similarity ({granularity}): {} / {}",
                    title_of(&source),
                    title_of(&target)
                );
                s.artifact(&format!("{stem}.svg"), render::heatmap_svg(&title, &m));
            }
            csv
        }
        Command::Corpus {
            manifest,
            metrics,
            lenient,
        } => {
            let selection: MetricSelection = metrics.parse()?;
            let mode = if lenient { LoadMode::Lenient } else { LoadMode::Strict };
            let corpus = load_corpus(&manifest, mode)?;
            for skip in &corpus.skipped {
                let _ = writeln!(stderr, "lyreval: skipped pair {}: {}", skip.index, skip.reason);
            }
            let ctx = if selection.sem {
                Some(s.semantic_context()?)
            } else {
                None
            };
            let evaluator = Evaluator::new(s.phonology.clone(), selection, ctx)?;
            let reports = evaluator.evaluate_all(&corpus.pairs);
            let grouped = grouped_averages(&reports)?;
            let csv = grouped.to_csv();
            if s.formats.csv {
                s.artifact("grouped.csv", csv.clone());
            }
            if s.formats.json {
                s.artifact("grouped.json", grouped.to_json() + "\n");
            }
            if let (Some(dir), true) = (&s.common.out, s.formats.json) {
                // Written directly: the file names depend on the reports.
                write_pair_reports(&dir.join("pairs"), &reports)?;
            }
            csv
        }
        Command::Phonemize { document } => {
            let doc = read_document(&document)?;
            let mut out = String::new();
            for (i, section) in doc.sections().iter().enumerate() {
                for (j, line) in section.lines().iter().enumerate() {
                    let seq = s.phonology.phonemize(line, doc.language())?;
                    out.push_str(&format!("{i}\t{j}\t{}\t{}\n", line.text(), seq.symbols().join(" ")));
                }
            }
            out
        }
        Command::Syllables { document } => {
            let doc = read_document(&document)?;
            let mut out = String::new();
            for (i, section) in doc.sections().iter().enumerate() {
                for (j, line) in section.lines().iter().enumerate() {
                    let n = s.phonology.count_syllables(line, doc.language())?;
                    out.push_str(&format!("{i}\t{j}\t{n}\t{}\n", line.text()));
                }
            }
            out
        }
    };
    s.flush()?;
    stdout.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e))
}

/// Parses `args` (including the program name) and runs the subcommand.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    1
                }
            };
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "lyreval: {e}");
            if e.is_validation() {
                1
            } else {
                2
            }
        }
    }
}
