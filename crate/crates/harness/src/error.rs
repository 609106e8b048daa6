use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{what} = {value} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported instance file version {found} (expected 1)")]
    VersionMismatch { found: String },
    #[error("unknown inequality '{0}'")]
    UnknownInequality(String),
    #[error(transparent)]
    Core(#[from] gruss::Error),
}

impl From<serde_json::Error> for HarnessError {
    fn from(e: serde_json::Error) -> Self {
        if e.is_io() {
            return HarnessError::Io(e.into());
        }
        HarnessError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
