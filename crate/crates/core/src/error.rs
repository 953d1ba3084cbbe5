use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("exponent exceeds the per-variable cap of 2^15")]
    DegreeOverflow,
    #[error("rings are limited to {max} variables (asked for {got})")]
    TooManyVariables { max: usize, got: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("generators have mixed degrees")]
    MixedDegrees,
    #[error("expected a form of degree {expected}, got degree {got}")]
    WrongDegree { expected: u32, got: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} did not stabilize within the iteration guard")]
    NonTermination(String),
    #[error("{what}: {needed} exceeds the budget of {cap}")]
    Budget { what: String, needed: u128, cap: u128 },
    #[error("{op}: retries exhausted after {attempts} attempts")]
    RetriesExhausted { op: String, attempts: u32 },
    #[error("containment violated: {0}")]
    Containment(String),
    #[error("degenerate pencil: {0}")]
    DegeneratePencil(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("fixture resource: {0}")]
    Fixture(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
