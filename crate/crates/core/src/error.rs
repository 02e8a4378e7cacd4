use thiserror::Error;

/// Errors raised by graph construction, path algebra and the subsemigroup
/// machinery. Every variant belongs to one named category (see
/// [`Error::category`]), which the CLI reports verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition undefined: path ends at `{end}` but next path starts at `{start}`")]
    CompositionUndefined { end: String, start: String },

    #[error("initial vertex mismatch: `{left}` vs `{right}`")]
    InitialVertexMismatch { left: String, right: String },

    #[error("not a circuit: {0}")]
    NotACircuit(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),

    #[error("graph must have at least one vertex and one edge")]
    EmptyGraph,

    #[error("edges `{0}` and `{1}` are not incident")]
    NotIncident(String, String),

    #[error("the up-set of 0 is the whole semigroup")]
    InfiniteUpSet,

    #[error("invalid subsemigroup: {0}")]
    InvalidSubsemigroup(String),

    #[error("wrong subsemigroup type: expected {expected}, got {actual}")]
    WrongType {
        expected: &'static str,
        actual: &'static str,
    },

    #[error("not a coset representative: {0}")]
    NotACoset(String),

    #[error("index is infinite; coset representatives cannot be listed")]
    InfiniteIndex,

    #[error("operation requires a proper closed inverse subsemigroup")]
    ImproperArgument,

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("path count exceeds u128")]
    CountOverflow,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub fn category(&self) -> &'static str {
        match self {
            Error::CompositionUndefined { .. } => "composition-undefined",
            Error::InitialVertexMismatch { .. } => "initial-vertex-mismatch",
            Error::NotACircuit(_) => "not-a-circuit",
            Error::UnknownVertex(_) => "unknown-vertex",
            Error::UnknownEdge(_) => "unknown-edge",
            Error::DuplicateId(_) => "duplicate-id",
            Error::EmptyGraph => "empty-graph",
            Error::NotIncident(..) => "not-incident",
            Error::InfiniteUpSet => "infinite-up-set",
            Error::InvalidSubsemigroup(_) => "invalid-subsemigroup",
            Error::WrongType { .. } => "wrong-type",
            Error::NotACoset(_) => "not-a-coset",
            Error::InfiniteIndex => "infinite-index",
            Error::ImproperArgument => "improper-argument",
            Error::EmptyGenerators => "empty-generators",
            Error::CountOverflow => "count-overflow",
            Error::Parse { .. } => "parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
