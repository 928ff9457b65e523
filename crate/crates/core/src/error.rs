use thiserror::Error;

/// Errors raised by the engine.
///
/// `Input*` variants are caller mistakes. `Divisibility` and `Internal`
/// indicate a broken invariant inside the engine and should never occur on
/// valid data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("quiver has an oriented cycle through vertex {0}")]
    OrientedCycle(usize),

    #[error("quiver is not alternating: vertex {0} is neither a source nor a sink")]
    NotAlternating(usize),

    #[error(
        "vertices {0} and {1} are adjacent; a block mutation needs pairwise non-adjacent vertices"
    )]
    Adjacent(usize, usize),

    #[error("group action is not admissible: {0}")]
    NotAdmissible(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("polynomial division is not exact")]
    Divisibility,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// True for errors caused by the caller rather than by the engine.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Divisibility | Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
