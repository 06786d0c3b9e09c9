//! Error type shared by the whole library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual input (presentation files, scalars, words).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A generator or basis symbol that the alphabet does not know.
    #[error("unknown symbol: {0}")]
    UnknownSymbol(String),

    /// Reduction did not finish within the step guard; the system is
    /// badly oriented or the guard is too tight.
    #[error("reduction exceeded {0} steps (non-termination guard)")]
    NonTermination(usize),

    /// Bounded completion produced more rules than the guard allows.
    #[error("completion exceeded {0} rules")]
    CompletionOverflow(usize),

    /// A tensor monomial fell outside the computed window.
    #[error("window overflow: {0}")]
    WindowOverflow(String),

    /// An operation was invoked on an input it does not support
    /// (e.g. exact-only solvers on infinite-dimensional presentations).
    #[error("unsupported mode: {0}")]
    Unsupported(String),

    /// A declared precondition failed.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A candidate map did not kill the defining relations.
    #[error("ill-defined map: {0}")]
    IllDefined(String),

    /// Structural validation failed (axioms, flags, map properties).
    #[error("validation failed: {0}")]
    Validation(String),

    /// Arguments outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A resource guard (memory, dimension) tripped.
    #[error("resource guard: {0}")]
    Resource(String),

    /// Inconsistent configuration of windows, degrees or modes.
    #[error("configuration error: {0}")]
    Config(String),

    /// Catalog lookup with an unknown name.
    #[error("unknown catalog presentation: {0}")]
    UnknownCatalog(String),

    /// An internal consistency check failed; indicates a bug or a
    /// mathematically impossible state.
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
