use thiserror::Error;

/// Errors raised by the graph, matching and forcing routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Invalid input: bad parameters, malformed edge sets, unknown names.
    #[error("domain error: {0}")]
    Domain(String),

    /// The edge set handed in is not a perfect matching of the graph.
    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),

    /// The two forcing engines disagreed. Always an implementation bug.
    #[error(
        "engine mismatch on matching {matching:?}: hitting-set gives {hitting_set}, subset search gives {subset_search}"
    )]
    EngineMismatch {
        matching: Vec<usize>,
        hitting_set: usize,
        subset_search: usize,
    },

    /// Two members of one symmetry orbit carry different forcing numbers.
    #[error("orbit inconsistency: {0:?} has forcing number {1}, but {2:?} has {3}")]
    OrbitInconsistency(Vec<usize>, usize, Vec<usize>, usize),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors that can only come from a bug in this crate.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::EngineMismatch { .. } | Error::OrbitInconsistency(..)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
