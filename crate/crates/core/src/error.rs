use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series has zero constant term; it is not invertible")]
    ZeroConstantTerm,
    #[error("bad constant term: {0}")]
    BadConstantTerm(&'static str),
    #[error("unstable topological type {0}")]
    UnstableType(String),
    #[error("closed type has no double genus")]
    ClosedType,
    #[error("frame sample {0} has zero determinant")]
    DegenerateFrame(usize),
    #[error("phase jump of at least pi between samples {0} and {1}")]
    UndersampledLoop(usize, usize),
    #[error("malformed frame loop: {0}")]
    MalformedLoop(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("maslov factor must be nonzero")]
    ZeroMaslovFactor,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}
