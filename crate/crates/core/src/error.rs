use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("variable index w{index} out of range 1..={k}")]
    VariableOutOfRange { index: usize, k: usize },

    #[error("invalid Grassmannian parameters k={k}, n={n} (need n >= k >= 2)")]
    InvalidContext { k: usize, n: u32 },

    #[error("classes live in different Grassmannians")]
    ContextMismatch,

    #[error("expected a tuple of length {expected}, got {actual}")]
    TupleLength { expected: usize, actual: usize },

    #[error("negative entry {value} at position {position}")]
    NegativeEntry { position: usize, value: i64 },

    #[error("multi-index {index:?} has sum {sum} > n + 1 = {bound}")]
    OutsideFamily {
        index: Vec<u32>,
        sum: u64,
        bound: u64,
    },

    #[error("index out of range: {0}")]
    IndexRange(String),

    #[error("instance has {size} basis elements, over the cap of {cap}")]
    OverCap { size: u64, cap: u64 },

    #[error("n = {0} is not a positive multiple of 8")]
    NotMultipleOfEight(u32),

    #[error("polynomial in the root variables is not symmetric (offending term {0})")]
    NotSymmetric(String),

    #[error("degree {requested} exceeds the top dimension {top}")]
    DegreeTooLarge { requested: u32, top: u32 },
}
