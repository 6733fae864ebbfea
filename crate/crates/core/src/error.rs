use thiserror::Error;

/// Errors raised by set and point-set operations, auditors and parsers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty set")]
    EmptySet,
    #[error("zero divisor element")]
    ZeroDivisor,
    #[error("domain error: {0}")]
    Domain(String),
    /// A pairwise enumeration would exceed the configured pair budget.
    #[error("infeasible: {what} needs an estimated {pairs} pairs (limit {limit})")]
    Infeasible {
        what: String,
        pairs: u128,
        limit: u64,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Error::Infeasible { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
