use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("short cycle length {ell} is not supported: {reason}")]
    EllNotSupported { ell: u32, reason: &'static str },

    #[error("n = {n} is too small, need n >= {min}")]
    NTooSmall { n: u32, min: u32 },

    #[error("cycle has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid Skolem order {0}")]
    InvalidOrder(u32),

    #[error("Skolem sequence of order {found} does not fit, expected order {expected}")]
    SkolemMismatch { expected: u32, found: u32 },

    #[error("interval path request rejected: {0}")]
    SpecViolation(String),

    #[error("enumeration size {size} exceeds the limit {limit}")]
    TooLarge { size: i64, limit: i64 },

    #[error("the set cannot be split into pairs of consecutive integers")]
    NotPairable,

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("lifted cycle has the wrong shape: {0}")]
    ShapeMismatch(String),

    #[error("no label cycle reaches the target sum {0}")]
    NoMuFound(u32),

    #[error("sign maps overlap at {0}")]
    DomainOverlap(i64),

    #[error("sign maps leave {0} uncovered")]
    DomainGap(i64),

    #[error("flip pool has {available} elements, need {needed}")]
    InsufficientFlipSet { needed: usize, available: usize },

    #[error("partial sum at index {index} is {found}, expected {expected}")]
    AnchorViolation {
        index: usize,
        found: u32,
        expected: u32,
    },

    #[error("base cycles must pass the difference check before development")]
    DevelopBeforeCheck,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
