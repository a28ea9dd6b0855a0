use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("inexact division")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("not a coset representative: {0}")]
    NotRepresentative(String),
    #[error("unavailable in symbolic mode: {0}")]
    Symbolic(String),
    #[error("verification mismatch: {0}")]
    VerificationMismatch(String),
    #[error("outside span: {0}")]
    OutsideSpan(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
