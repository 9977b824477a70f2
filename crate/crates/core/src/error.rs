use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{op} expects a tensor of order {expected}, got order {found}")]
    WrongOrder {
        op: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("r is not skew-symmetric (τ(r) ≠ -r)")]
    NotSkew,
    #[error("taft construction needs [a, b] = k b with k ≠ 0: {0}")]
    NotTaftPair(String),
    #[error("{0}")]
    InvalidWindow(String),
    #[error("not an L₀-submodule: {0}")]
    NotInvariant(String),
    #[error(transparent)]
    Parse(#[from] crate::dsl::ParseError),
    #[error("{0}")]
    Compile(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{0}")]
    Io(String),
}
