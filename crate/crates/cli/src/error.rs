use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Engine(#[from] elias_core::Error),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Stable name of the failure, as matched by corpus `error` expectations.
    pub fn kind(&self) -> String {
        match self {
            CliError::Engine(e) => {
                let debug = format!("{e:?}");
                debug
                    .split(|c: char| !c.is_alphanumeric())
                    .next()
                    .unwrap_or_default()
                    .to_string()
            }
            CliError::Parse(_) => "ParseError".into(),
            CliError::Unsupported(_) => "Unsupported".into(),
            CliError::Corpus { .. } => "CorpusError".into(),
            CliError::Io(_) => "IoError".into(),
        }
    }
}
