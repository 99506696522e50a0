use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),

    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("rings support at most {max} variables, got {got}")]
    TooManyVariables { max: usize, got: usize },

    #[error("invalid ring declaration: {0}")]
    InvalidRing(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("inhomogeneous input rejected in homogeneous-only mode")]
    Inhomogeneous,

    #[error("degree guard exceeded: reached degree {reached}, limit {limit}")]
    DegreeGuard { limit: u32, reached: u32 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("subschemes are not disjoint: V(I+J) has affine dimension {dim}")]
    NotDisjoint { dim: i64 },

    #[error("index {index} outside the valid range [{lo}, {hi}]")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("the zero ideal has no generators")]
    ZeroIdeal,

    #[error("could not draw {count} independent linear forms after {attempts} attempts")]
    DegenerateDraw { count: usize, attempts: usize },

    #[error("genericity uncertain: seeds {seeds:?} disagree on {quantity}")]
    GenericityUncertain { seeds: Vec<u64>, quantity: String },

    #[error("module is not certified finite on the computed window")]
    Uncertified,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("wrong monomial order: {0}")]
    WrongOrder(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
