use std::fmt;
use std::io;
use std::path::PathBuf;

/// Anything that makes a command unusable: bad arguments, unparsable input
/// or an I/O failure. All of these exit with status 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Core(vidcore::Error),
    Io { path: PathBuf, source: io::Error },
    Json(serde_json::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Json(e) => write!(f, "json: {e}"),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Io { source, .. } => Some(source),
            CliError::Json(e) => Some(e),
            CliError::Core(e) => Some(e),
            _ => None,
        }
    }
}

impl From<vidcore::Error> for CliError {
    fn from(e: vidcore::Error) -> CliError {
        match e {
            vidcore::Error::Parse(msg) => CliError::Parse(msg),
            other => CliError::Core(other),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError::Json(e)
    }
}
