use thiserror::Error;

/// Errors raised by the library.
///
/// `Domain` means the inputs are outside what an operation supports (it never
/// silently clamps). `Evaluation` and `Convergence` come from numerical
/// kernels and carry enough context to reproduce the failing call.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    #[error("evaluation error in {op}: {msg}")]
    Evaluation { op: &'static str, msg: String },

    #[error("{op} did not converge: {msg}")]
    Convergence { op: &'static str, msg: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(op: &'static str, msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain { op, msg: msg.into() })
}

pub(crate) fn eval_err<T>(op: &'static str, msg: impl Into<String>) -> Result<T> {
    Err(Error::Evaluation { op, msg: msg.into() })
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
