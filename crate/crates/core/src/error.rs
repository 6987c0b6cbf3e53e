use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("box parameters differ: ({0},{1}) vs ({2},{3})")]
    BoxMismatch(usize, usize, usize, usize),

    #[error("partition {partition} has {len} parts but only {vars} variables are available")]
    TooManyParts {
        partition: String,
        len: usize,
        vars: usize,
    },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("pattern {0} is not dominant")]
    NotDominant(String),

    #[error("matrix is not scalar")]
    NotScalar,

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("index sets must differ")]
    SameIndexSet,

    #[error("weight is not totally subordinate: {found} constituents, expected {expected}")]
    NotTotallySubordinate { found: usize, expected: usize },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("collision with overlapping index sets at full depth: nu={nu}, I={i}, J={j}, r={r}")]
    OverlappingCollision {
        nu: String,
        i: String,
        j: String,
        r: usize,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
