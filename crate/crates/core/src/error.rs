use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown cell: {0}")]
    UnknownCell(String),

    #[error("boundary level {level} out of range for a {dim}-cell")]
    DimensionOutOfRange { level: u32, dim: u32 },

    #[error("cannot compose a {left}-cell with a {right}-cell at level {level}")]
    DimensionMismatch { level: u32, left: u32, right: u32 },

    #[error("not composable at level {level}: {detail}")]
    NotComposable { level: u32, detail: String },

    #[error("cell maps do not share a target")]
    TargetMismatch,

    #[error("module action left the declared value: {0}")]
    ActionMismatch(String),

    #[error("a 0-dimensional generator has no faces")]
    NoFaces,

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("ambient too large: {0}")]
    AmbientTooLarge(String),

    #[error("malformed construction: {0}")]
    Malformed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema violation at {pointer}: {message}")]
    Schema { pointer: String, message: String },
}

impl Error {
    pub(crate) fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}
