use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: undefined object `{name}`")]
    Undefined { line: usize, name: String },
    #[error("line {line}: {message}")]
    Arity { line: usize, message: String },
    #[error("unknown family `{0}` (expected power-of-m, rm-ord-example, random-ideal or random-module)")]
    UnknownFamily(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error(transparent)]
    Core(#[from] gamma_depth_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        CliError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    /// Moves a core parse error for a fragment starting at `column` of `line`.
    pub(crate) fn rebase(e: gamma_depth_core::Error, line: usize, column: usize) -> Self {
        match e {
            gamma_depth_core::Error::Parse { column: c, message, .. } => CliError::syntax(line, column + c - 1, message),
            other => CliError::syntax(line, column, other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
