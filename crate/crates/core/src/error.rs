use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must be non-empty, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },
    #[error("expected {expected} entries, got {actual}")]
    EntryCount { expected: usize, actual: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("value does not fit in machine integers: {0}")]
    Overflow(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("resource guard exceeded: {what} needs {size}, limit is {limit} (raise LAPCODE_GUARD_LIMIT)")]
    GuardExceeded {
        what: &'static str,
        size: String,
        limit: u64,
    },
    #[error("the Laplacian simplex is not reflexive")]
    NotReflexive,
    #[error("code has no nonzero codeword")]
    TrivialCode,
}

impl Error {
    pub(crate) fn guard(what: &'static str, size: impl ToString, limit: u64) -> Self {
        Error::GuardExceeded {
            what,
            size: size.to_string(),
            limit,
        }
    }
}
