use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("stable range n ≥ k ≥ 2 required (got k={k}, n={n})")]
    StableRange { k: usize, n: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("capacity exceeded: {what} (limit {limit})")]
    Capacity { what: String, limit: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

/// Rejects `(k, n)` outside `n ≥ k ≥ 2`.
pub(crate) fn check_stable_range(k: usize, n: usize) -> Result<()> {
    if k < 2 || n < k {
        Err(Error::StableRange { k, n })
    } else {
        Ok(())
    }
}
