use thiserror::Error;

/// Errors raised by the engine. User-facing validation failures are distinct
/// from internal certification failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid context: {0}")]
    Context(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("world mismatch: {0}")]
    WorldMismatch(String),
    #[error("extension F_{ell}^{degree} exceeds the supported table size")]
    ExtensionTooLarge { ell: u64, degree: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown line: {0}")]
    UnknownLine(String),
    #[error("invalid line {label}: {reason}")]
    InvalidLine { label: String, reason: String },
    #[error("invalid cuspidal: {0}")]
    InvalidSymbol(String),
    #[error("segment not generic: k={k}, e(ρ)={e}")]
    NotGeneric { k: u64, e: u64 },
    #[error("linked segments: {0} and {1}")]
    Linked(String, String),
    #[error("precision window: {0}")]
    Window(String),
    #[error("certification failed: {0}")]
    Certification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
