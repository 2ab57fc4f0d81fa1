use std::io;

/// Crate-wide error type. Variants map onto the CLI exit-code contract:
/// `Input`/`Parse` are caller mistakes (exit 2), `Capability`/`Budget` mean
/// the instance is too large for the configured limits (exit 3), `Policy`
/// flags an illegal move by a strategy (exit 4), and `Internal`/`Io` are
/// bugs or environment failures (exit 1).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("instance exceeds capability limit: {0}")]
    Capability(String),

    #[error("computation budget exceeded: {0}")]
    Budget(String),

    #[error("illegal policy action: {0}")]
    Policy(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] io::Error),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }

    pub fn policy(msg: impl Into<String>) -> Self {
        Error::Policy(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code for this error under the CLI contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Parse { .. } => 2,
            Error::Capability(_) | Error::Budget(_) => 3,
            Error::Policy(_) => 4,
            Error::Internal(_) | Error::Io(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
