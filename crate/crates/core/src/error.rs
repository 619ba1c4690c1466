use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported field order {0}; expected 2, 3 or 5")]
    UnsupportedField(u8),
    #[error("entry {value} at ({row}, {col}) is not a residue mod {q}")]
    InvalidResidue { row: usize, col: usize, value: u8, q: u8 },
    #[error("matrix dimensions must be positive (got {rows}x{cols})")]
    EmptyMatrix { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation requires a binary code, got GF({0})")]
    NotBinary(u8),
    #[error("{0} is not an admissible prime (need an odd prime 3 < p <= 31)")]
    InvalidPrime(u32),
    #[error("support element {element} out of range for p = {p}")]
    SupportOutOfRange { p: u32, element: u32 },
    #[error("support size {got} differs from the required {expected}")]
    SupportSize { expected: usize, got: usize },
    #[error("circulant condition failed: {0}")]
    CirculantCondition(String),
    #[error("not a Hadamard matrix: {0}")]
    NotHadamard(String),
    #[error("design verification failed: {0}")]
    DesignViolation(String),
    #[error("index {index} out of range (< {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("{0}")]
    BadCongruence(String),
    #[error("code has no nonzero codeword")]
    ZeroCode,
    #[error("enumeration of about {estimate:.3e} codewords exceeds the guard of {limit:.3e}")]
    GuardExceeded { estimate: f64, limit: f64 },
    #[error("unknown weight-enumerator family {0:?}")]
    UnknownFamily(String),
    #[error(
        "extremality is defined only for doubly even binary or ternary codes (q = {q}, doubly even = {doubly_even})"
    )]
    UnsupportedExtremality { q: u8, doubly_even: bool },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("resource guard: {0}")]
    Resource(String),
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
