//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input text could not be parsed. `offset` is a byte offset for binary-ish
    /// formats (graph6) and a line number for line-oriented formats.
    #[error("parse error at {unit} {offset}: {msg}")]
    Parse {
        unit: &'static str,
        offset: usize,
        msg: String,
    },

    /// A parameter is outside the domain where the requested quantity is defined
    /// (e.g. the double Slater number of a graph with an isolated vertex).
    #[error("undefined: {0}")]
    Undefined(String),

    /// A size cap protecting an exhaustive algorithm was exceeded.
    #[error("input too large: {0}")]
    TooLarge(String),

    /// A family constructor was given parameters that violate its invariants.
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),

    /// Branch-and-bound ran out of its node budget. Carries the best incumbent
    /// value found so far (if any) and the proven lower bound.
    #[error("node budget exhausted: incumbent {incumbent:?}, lower bound {lower_bound}")]
    BudgetExceeded {
        incumbent: Option<usize>,
        lower_bound: usize,
    },

    /// An orientation failed a transitivity check; carries one violating pair
    /// of arcs (x,y),(y,z) whose composition (x,z) is missing or reversed.
    #[error("orientation not transitive: arcs ({0},{1}) and ({1},{2}) lack arc ({0},{2})")]
    NotTransitive(usize, usize, usize),

    /// Unknown theorem identifier passed to the verification harness.
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(unit: &'static str, offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            unit,
            offset,
            msg: msg.into(),
        }
    }
}
