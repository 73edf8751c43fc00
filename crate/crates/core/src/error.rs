use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The three sets of a triplet overlap.
    #[error("invalid triplet: {0}")]
    InvalidTriplet(String),

    /// A universe, enumeration or scan exceeded its configured bound.
    #[error("capacity exceeded: {what} needs {requested}, limit is {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    /// A variable set or value lies outside the model it is applied to.
    #[error("domain error: {0}")]
    Domain(String),

    /// Conditioning on an event of probability zero.
    #[error("zero evidence: {0}")]
    ZeroEvidence(String),

    /// A covariance block is not positive definite (within tolerance).
    #[error("regularity error: {0}")]
    Regularity(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// Malformed input: bad orderings, bad files, inconsistent arguments.
    #[error("input error: {0}")]
    Input(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
