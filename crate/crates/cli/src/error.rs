use thiserror::Error;

/// Failures that end a command before a verdict is reached.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),

    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("{0}")]
    Lib(tumatroid::Error),

    #[error("{0}")]
    Usage(String),
}

impl From<tumatroid::Error> for CliError {
    fn from(e: tumatroid::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    /// 3 for size guards, 2 for everything else (parse, shape, I/O).
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_guard() => 3,
            _ => 2,
        }
    }
}
