use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The signal carries too little energy for the requested inversion.
    #[error("degenerate signal: {0}")]
    DegenerateSignal(String),

    /// Two polynomials were expected to have equal modulus on the unit circle.
    #[error("moduli differ on the unit circle: {0}")]
    NotCircleEqual(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
