use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the evaluation pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("alignment error at section {section}: {message}")]
    Alignment { section: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported script: {0}")]
    UnsupportedScript(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("provider error: {0}")]
    Provider(String),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by the content of the inputs rather than the
    /// environment (files, network, providers).
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Io { .. } | Error::Provider(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
