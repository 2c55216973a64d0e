use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Engine(#[from] rankin_core::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}
