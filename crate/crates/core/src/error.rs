use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid multiset: {0}")]
    Multiset(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("multiset size {size} exceeds the enumeration bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("node index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),

    #[error("variable context mismatch: expected {expected} variables, found {found}")]
    ContextMismatch { expected: usize, found: usize },

    #[error("gamma expansion failed: {0}")]
    Expansion(String),

    #[error("series arithmetic: {0}")]
    Series(String),
}

pub type Result<T> = std::result::Result<T, Error>;
