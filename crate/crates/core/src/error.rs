//! Error type shared across the crate.

/// Errors returned by library operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed caller input: out-of-range vertex ids, loops, duplicate
    /// arcs, incomplete colorings, and the like.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An operation was invoked outside its stated contract, e.g. asking
    /// for a Hamilton dicycle of a non-strong digraph.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// An exhaustive sweep or enumeration would exceed the configured
    /// budget. The caller gets a refusal rather than a truncation.
    #[error("budget exceeded: size {required} over the limit {allowed}")]
    BudgetExceeded { required: usize, allowed: usize },

    /// A witness could not be constructed even after every repair
    /// strategy. Carries diagnostics for the caller.
    #[error("witness not constructed: {0}")]
    Unconstructed(String),

    /// A document failed to parse. Line numbers are 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
