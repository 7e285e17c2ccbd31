//! Crate-wide error type.
//!
//! Variants map onto the CLI exit codes: argument/config problems exit 2,
//! data parse/validation problems exit 3, numeric failures exit 4.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller passed an out-of-range or inconsistent argument.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A run configuration failed validation. All problems are collected,
    /// not just the first.
    #[error("invalid configuration:\n{}", .0.join("\n"))]
    Config(Vec<String>),

    /// An input file could not be parsed.
    #[error("failed to parse {path}: {message}")]
    Parse { path: PathBuf, message: String },

    /// Parsed data violated a documented invariant.
    #[error("validation failed: {0}")]
    Validation(String),

    /// A backend was asked for something it does not support.
    #[error("unsupported capability: {0}")]
    Capability(String),

    /// A rewrite backend failed; carries the serialized input it choked on.
    #[error("rewrite failed on input {input:?}: {message}")]
    Rewrite { input: String, message: String },

    /// Two components disagreed about shapes, masks, or geometry.
    /// Indicates a bug, not bad user input.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A NaN or other numeric failure surfaced at runtime.
    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("no decodable span: {0}")]
    Decode(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code for the CLI: 2 config, 3 data, 4 numeric, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Argument(_) | Error::Config(_) => 2,
            Error::Parse { .. } | Error::Validation(_) => 3,
            Error::Numeric(_) => 4,
            _ => 1,
        }
    }
}
