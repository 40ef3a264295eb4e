use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("slope 0/0 is not a slope")]
    DegenerateSlope,

    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: i64, b: i64 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifert(String),

    #[error("invalid Alexander polynomial: {0}")]
    InvalidAlexander(String),

    #[error("not consistent with an L-space knot: {0}")]
    NotLSpaceKnot(String),

    /// A nonzero characteristic-polynomial coefficient whose sign could not
    /// be certified at the top of the precision ladder.
    #[error("near-singular signature evaluation at r={r}, p={p} (tried up to {bits} bits)")]
    NearSingular { r: i64, p: i64, bits: u32 },

    #[error("knot {0} has no Seifert matrix")]
    MissingSeifert(String),

    #[error("invalid truncation window: {0}")]
    InvalidWindow(String),

    #[error("unstable truncation: {0}")]
    UnstableTruncation(String),

    #[error("V/H profile is not homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("hypothesis not met: {0}")]
    HypothesisFailed(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("the unknot is excluded: {0}")]
    TrivialKnot(String),

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("knot {knot}: {violation}")]
    Validation { knot: String, violation: String },

    #[error("duplicate knot name {0}")]
    DuplicateName(String),

    #[error("no knot named {0}")]
    UnknownKnot(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
