//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is rank deficient: rank {rank} < {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("configuration has codimension {got}, expected {expected}")]
    WrongCodimension { got: usize, expected: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("factorial-ratio spec is not balanced: sum p = {sum_p}, sum q = {sum_q}")]
    Unbalanced { sum_p: u64, sum_q: u64 },

    #[error("shift entries must be natural numbers")]
    NegativeShift,

    #[error("exponent {0:?} is not a vertex of the denominator Newton polytope")]
    NotAVertex([i64; 2]),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("region has a recession cone of dimension {0}, need 2")]
    RecessionTooSmall(usize),

    #[error("truncation order {order} too small: need at least {need}")]
    InsufficientTruncation { order: u32, need: u32 },

    #[error("polynomial is not squarefree (resultant with derivative vanishes)")]
    NotSquarefree,

    #[error("resultant of two constants is undefined")]
    BothConstant,

    #[error("exponent {0:?} does not lie in the kernel lattice")]
    NotInKernel(Vec<num::BigInt>),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("json: {0}")]
    Json(String),
}
