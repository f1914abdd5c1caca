use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An iterative routine hit its iteration cap or produced a non-finite value.
    #[error("numeric failure: {0}")]
    NumericFailure(String),

    /// The evaluation point coincides with a pole (e.g. `z` equals an eigenvalue).
    #[error("singular input: {0}")]
    SingularInput(String),

    /// Input falls in an excluded degenerate case, e.g. a minor sharing an eigenvalue.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
