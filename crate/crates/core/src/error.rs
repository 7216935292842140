use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} does not fit below 2^31")]
    ModulusTooLarge(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("variable name `{0}` is invalid")]
    InvalidVariable(String),
    #[error("variable `{0}` is declared twice")]
    DuplicateVariable(String),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("exponent vector has length {got}, ring has {expected} variables")]
    ExponentLength { expected: usize, got: usize },
    #[error("polynomial involves variable `{0}` and cannot be restricted")]
    InvolvesDroppedVariable(String),
}

/// Error produced by the polynomial text parser. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("codimension of an empty cell is undefined")]
    EmptyCell,
    #[error("time budget exhausted")]
    Timeout,
}
