use abcolim_core::Error;
use thiserror::Error as ThisError;

/// Everything that makes a command exit with status 2.
#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("unresolved reference `{name}` at {path}")]
    Reference { name: String, path: String },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] Error),
}

impl CliError {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Schema { path: path.into(), message: message.into() }
    }

    pub(crate) fn reference(name: impl Into<String>, path: impl Into<String>) -> Self {
        CliError::Reference { name: name.into(), path: path.into() }
    }
}
