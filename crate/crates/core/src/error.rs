use thiserror::Error;

/// Errors raised by the model, the data loaders and the report writer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the formula being evaluated.
    #[error("domain error: {0}")]
    Domain(String),

    /// A formula diverges for the given input (e.g. the critical radius at v = 0).
    #[error("divergence: {0}")]
    Divergence(String),

    /// A nuclide or configuration value breaks one of its invariants.
    #[error("validation error for {subject}: {reason}")]
    Validation { subject: String, reason: String },

    /// A row of an input CSV could not be parsed.
    #[error("line {line}, column `{column}`: {reason}")]
    Parse { line: u64, column: String, reason: String },

    #[error("duplicate nuclide (z={z}, a={a}) on line {line}")]
    DuplicateNuclide { z: u32, a: u32, line: u64 },

    #[error("empty input: {0}")]
    Empty(String),

    /// The precondition of an identity check does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("original formula underdetermined for {0}: no volumetric coefficient and no tabulated value")]
    Underdetermined(String),

    #[error("missing subset: {0}")]
    MissingSubset(String),

    #[error("unsupported format `{0}` (expected `csv` or `json`)")]
    UnsupportedFormat(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
