use thiserror::Error;

/// Errors produced by the extraction pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Two distinct constituents share at least one word; the grid schema
    /// cannot express overlaps.
    #[error("overlapping constituents: {0}")]
    Overlap(String),

    /// Two annotations demand different labels for the same grid cell.
    #[error("conflicting cell labels: {0}")]
    Conflict(String),

    /// A grid's diagonal blocks are not solid squares.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Subword sequence exceeds the encoder's maximum length.
    #[error("sequence too long: {got} subword pieces, max {max}")]
    Length { got: usize, max: usize },

    /// Malformed or missing dependency parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// An aggregate was requested over an empty input set.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// Invalid domain data (spans out of range, bad triples, bad records).
    #[error("data error: {0}")]
    Data(String),

    /// Line-oriented file with a malformed record.
    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    /// Checkpoint missing, corrupt, or inconsistent with the requested config.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// External process (backend or splitter) failed.
    #[error("backend error: {0}")]
    Backend(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
