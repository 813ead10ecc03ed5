use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: operands live in F_{left} and F_{right}")]
    FieldMismatch { left: u64, right: u64 },

    #[error("{0} is not a prime of at most 62 bits")]
    NotPrime(u64),

    #[error("CRT range error: {0}")]
    CrtRange(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate gate id `{name}`")]
    DuplicateGate { line: usize, name: String },

    #[error("line {line}: unknown gate `{name}`")]
    UnknownGate { line: usize, name: String },

    #[error("cycle through gate `{0}`")]
    Cycle(String),

    #[error("line {line}: constant {value} is not one of -1, 0, 1")]
    BadConstant { line: usize, value: String },

    #[error("output arity: {0}")]
    OutputArity(String),

    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("enumeration too large: {0}")]
    TooLarge(String),

    #[error("parameter violation: syntactic degree {syntdeg} exceeds k = {k}")]
    ParameterViolation { syntdeg: u64, k: u64 },

    #[error("field too small: modulus {modulus} must exceed {required}")]
    FieldTooSmall { modulus: u64, required: u64 },

    #[error("set too small: |S| = {size} but k + 1 = {required} points are needed")]
    SetTooSmall { size: usize, required: usize },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    /// True for errors caused by an input violating an algorithm's
    /// precondition, as opposed to malformed input or a resource guard.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::ParameterViolation { .. }
                | Error::FieldTooSmall { .. }
                | Error::SetTooSmall { .. }
                | Error::Domain(_)
                | Error::Arity { .. }
                | Error::CrtRange(_)
                | Error::NotPrime(_)
                | Error::Config(_)
        )
    }
}
