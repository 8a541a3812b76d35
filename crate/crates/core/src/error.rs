use thiserror::Error;

/// Errors produced by the partcert library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} requires n >= {min}, got {n}")]
    Range { what: &'static str, min: u64, n: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("partition table is empty")]
    EmptyTable,

    #[error("oracle ceiling exceeded: p_brute({n}) requested but ceiling is {ceiling}")]
    OracleCeiling { n: u64, ceiling: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("could not resolve p({n}) from the series (last N = {terms}, precision = {precision_bits} bits)")]
    Resolution {
        n: u64,
        terms: u64,
        precision_bits: u32,
    },

    #[error("unknown check: {0}")]
    UnknownCheck(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(message: impl Into<String>) -> Error {
    Error::Domain(message.into())
}
