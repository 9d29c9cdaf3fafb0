use std::path::PathBuf;

use thiserror::Error;

/// A problem inside a single line of text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("column {}: {message}", column + 1)]
    Syntax { column: usize, message: String },
    /// Well-formed text that the core rejected while building the value.
    #[error("column {}: {error}", column + 1)]
    Cell { column: usize, error: squier_core::Error },
}

impl FormatError {
    pub fn column(&self) -> usize {
        match self {
            FormatError::Syntax { column, .. } | FormatError::Cell { column, .. } => *column,
        }
    }
}

/// A problem in a multi-line input file. Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
    #[error("line {line}, column {column}: {error}")]
    Cell { line: usize, column: usize, error: squier_core::Error },
}

impl ParseError {
    pub(crate) fn at_line(line: usize, column_base: usize, e: FormatError) -> Self {
        match e {
            FormatError::Syntax { column, message } => {
                ParseError::Syntax { line, column: column_base + column + 1, message }
            }
            FormatError::Cell { column, error } => {
                ParseError::Cell { line, column: column_base + column + 1, error }
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] squier_core::Error),
    /// The certificate does not fill the shell.
    #[error("face mismatch: {0}")]
    Rejected(squier_core::Face),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use squier_core::Error as E;
        match self {
            CliError::Rejected(_) => 1,
            CliError::Core(E::FaceMismatch { .. } | E::FillerRejected { .. }) => 1,
            CliError::Core(E::FuelExhausted { .. }) => 3,
            _ => 2,
        }
    }
}
