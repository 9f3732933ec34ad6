use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("row {row} has a different length from row 0")]
    RaggedMatrix { row: usize },
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator {index} is not a square matrix of rank {rank}")]
    BadGenerator { index: usize, rank: usize },
    #[error("generator {index} is not invertible")]
    Singular { index: usize },
    #[error("group enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invalid Weyl type {kind} with n = {n}")]
    InvalidType { kind: String, n: usize },
    #[error("not a subgroup: element {0} of the smaller group is missing")]
    NotSubgroup(String),
    #[error("index is {index}, expected 2")]
    IndexNotTwo { index: String },
    #[error("subgroup is not normal")]
    NotNormal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("wrong case: expected {expected}, found {found}")]
    WrongCase { expected: String, found: String },
    #[error("{0}")]
    InvalidSpec(String),
    #[error("kernel of restriction is not principal: {0}")]
    NotPrincipal(String),
    #[error("trichotomy contradiction: {0}")]
    Trichotomy(String),
}
