use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {input:?}: {reason}")]
    InvalidPartition { input: String, reason: String },

    #[error("rank {rank} too small for mixed weight: {parts} nonzero parts")]
    RankTooSmall { rank: usize, parts: usize },

    #[error("word weight bound {k} exceeds word length {m}")]
    WeightExceedsLength { k: usize, m: usize },

    #[error("module needs {needed} basis vectors, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("module was not built as a tensor module")]
    NotTensorModule,

    #[error("subspace is not invariant under {generator}")]
    NotInvariant { generator: String },

    #[error("filtration is not ascending at step {step}")]
    NotAscending { step: usize },

    #[error("generator {0} is not part of the module action")]
    UnknownGenerator(String),

    #[error("unknown suite {0:?}; expected hopf, branching, brute or all")]
    UnknownSuite(String),

    #[error("generators {0} and {1} do not commute")]
    NonCommuting(String, String),

    #[error("{0} does not act diagonalizably with rational eigenvalues")]
    NotDiagonalizable(String),

    #[error("component {0} is not an eigenvector of the diagonal generator")]
    NotAnEigenvector(usize),

    #[error("component {0} is zero")]
    ZeroComponent(usize),

    #[error("repeated eigenvalue {value} among components {first} and {second}")]
    RepeatedEigenvalue {
        value: String,
        first: usize,
        second: usize,
    },

    #[error("invalid parabolic: need 0 < b < N, got N = {rank}, b = {b}")]
    InvalidParabolic { rank: usize, b: usize },

    #[error("malformed matrix dump at line {line}: {reason}")]
    MatrixParse { line: usize, reason: String },

    #[error("module action violates bracket relation [{0}, {1}]")]
    BracketViolation(String, String),

    #[error("nilradical does not act nilpotently")]
    NotNilpotent,

    #[error("computation cancelled")]
    Cancelled,
}
