//! Error taxonomy shared across the library.

use std::path::PathBuf;

use crate::manifest::ValidationReport;

/// Top-level error type. The command-line layer maps variants to exit codes:
/// I/O and parse failures exit 1, manifest validation failures exit 2.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        /// 1-based line of the offending input, 0 when not line-addressable.
        line: usize,
        message: String,
    },

    #[error("manifest validation failed with {} error(s)", report.error_count())]
    Manifest { report: ValidationReport },

    #[error("{statistic}: {diagnostic}")]
    Solver { statistic: String, diagnostic: String },

    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse { path: path.into(), line, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Error::Usage(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
