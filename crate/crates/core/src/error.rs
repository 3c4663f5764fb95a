use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Params(String),

    /// An input broke a precondition the caller was responsible for.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),

    #[error("simplex exceeded its iteration cap of {0} pivots")]
    IterationLimit(usize),

    #[error("could not realize LP solution as a simple graph: {0}")]
    Realization(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("malformed graph file: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
