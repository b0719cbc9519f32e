use thiserror::Error;

use crate::model::Violation;

/// Errors raised by library operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid temporal graph: {}", join_violations(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An exhaustive search refused to start because its input exceeds the
    /// configured bound.
    #[error("guard exceeded: {what} is {actual}, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("graph is not temporally connected under {0} journeys")]
    NotTemporallyConnected(crate::model::Strictness),

    #[error("candidate is not a subgraph of the input: {0}")]
    NotSubgraph(String),

    #[error("graph has no contacts")]
    NoContacts,

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub(crate) fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::GuardExceeded {
            what,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}
