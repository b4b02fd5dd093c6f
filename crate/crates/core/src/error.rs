use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("size limit exceeded: {what} is {got}, maximum is {max}")]
    SizeLimit { what: &'static str, got: usize, max: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("sequence domain error: {0}")]
    Domain(String),

    #[error("evaluation point {0} is a root; perturb the endpoint")]
    EndpointIsRoot(String),

    #[error("no case matrix matches {matrix} at r = {r}")]
    Classification { matrix: String, r: usize },

    #[error("family is not downward closed: {0}")]
    NotDownwardClosed(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
