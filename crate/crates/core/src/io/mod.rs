//! Structure-constant documents, the example catalog and the command
//! drivers behind the CLI.
//!
//! Documents are JSON objects:
//!
//! ```json
//! {
//!   "dim": 3,
//!   "basis": ["h", "e", "f"],
//!   "mu": [[1, 2, 2, "2"], [1, 3, 3, "-2"], [2, 3, 1, "1"]],
//!   "r": [[2, 3, "1"]]
//! }
//! ```
//!
//! Indices are 1-based. `mu` and `gamma` entries `[i, j, k, c]` mean
//! `[b_i, b_j] = c b_k` with `i < j`; `phi` entries `[i, j, k, c]` are
//! coefficients of `b_i^b_j^b_k` with `i < j < k`; `r` entries `[i, j, c]`
//! (`i < j`) give `r ∈ Λ²G`; `r_tensor` entries `[i, j, c]` give a full
//! tensor. At most one of `gamma`/`phi`, `r`, `r_tensor` may be present;
//! none means the zero structure. Values are integers or `"p"`/`"p/q"`
//! strings.

mod catalog;
mod commands;
mod document;

pub use catalog::{example_catalog, example_description, example_names};
pub use commands::{run_check, run_double, run_rep_verify, DoubleOutput, Flags, Report, DEFAULT_MAX_DIM};
pub use document::{Entry, InputDocument, Structure, MAX_DOCUMENT_DIM};

use thiserror::Error;

/// Problems with the input rather than with the mathematics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("{field} entry {entry}: index {index} out of range 1..={dim}")]
    IndexOutOfRange { field: String, entry: usize, index: usize, dim: usize },

    #[error("{field} entry {entry}: duplicate entry")]
    Duplicate { field: String, entry: usize },

    #[error("{field} entry {entry}: malformed rational {value}")]
    MalformedRational { field: String, entry: usize, value: String },

    #[error("{field} entry {entry}: {message}")]
    Entry { field: String, entry: usize, message: String },

    #[error("{0}")]
    Invalid(String),

    #[error("unknown example {0:?}")]
    UnknownExample(String),

    #[error("dimension {dim} exceeds --max-dim {max}")]
    DimensionCap { dim: usize, max: usize },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}
