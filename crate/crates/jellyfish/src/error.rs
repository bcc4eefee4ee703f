use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("endpoint set {0} is not valid for this case")]
    InvalidEndpoints(String),
    #[error("shape {0} is not admissible for this case")]
    InvalidShape(String),
    #[error("monomial is not standard: {0}")]
    NotStandard(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParameters(_) => "invalid_parameters",
            Error::InvalidEndpoints(_) => "invalid_endpoints",
            Error::InvalidShape(_) => "invalid_shape",
            Error::NotStandard(_) => "not_standard",
            Error::Parse(_) => "parse",
            Error::Unsupported(_) => "unsupported",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
