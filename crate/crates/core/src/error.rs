use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("{what}: size {size} exceeds supported maximum {max}")]
    UnsupportedSize {
        what: &'static str,
        size: usize,
        max: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("numerical error in {what}: {detail}")]
    Numerical { what: &'static str, detail: String },

    #[error("{path}: line {line}: {source}")]
    Line {
        path: PathBuf,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("search aborted after {processed} graphs: {source}")]
    SearchAborted {
        processed: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
