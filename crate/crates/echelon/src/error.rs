//! Error type shared across the crate.

use std::fmt;

/// Errors reported by the kernel and the text-format layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Multiplicative inverse of the zero element was requested.
    DivisionByZero,
    /// A prime-field modulus that is not prime (or is < 2).
    CompositeModulus(u64),
    /// Elements of two different fields were mixed at a construction boundary.
    FieldMismatch,
    /// A dimension or shape precondition failed at a fallible boundary.
    Shape(String),
    /// A row operation encoding violated its validity constraints.
    InvalidRowOp(String),
    /// The matrix is singular; carries the row rank found by reduction.
    NotInvertible { rank: usize },
    /// The linear system has no solution; carries the row of the reduced
    /// right-hand side that is nonzero below the coefficient rank.
    Unsolvable { witness_row: usize },
    /// The coefficient matrix does not have full column rank, so a unique
    /// solution cannot be extracted.
    RankDeficient { rank: usize, cols: usize },
    /// A single element token could not be read in the declared field.
    InvalidElement { token: String, reason: String },
    /// A syntax or format error in a text input, with 1-based position.
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::CompositeModulus(p) => {
                write!(
                    f,
                    "modulus {p} is not prime; prime fields require a prime modulus"
                )
            }
            Error::FieldMismatch => write!(f, "elements belong to different fields"),
            Error::Shape(msg) => write!(f, "shape error: {msg}"),
            Error::InvalidRowOp(msg) => write!(f, "invalid row operation: {msg}"),
            Error::NotInvertible { rank } => {
                write!(f, "matrix is not invertible (row rank {rank})")
            }
            Error::Unsolvable { witness_row } => {
                write!(
                    f,
                    "system is unsolvable (reduced rhs is nonzero at row {witness_row})"
                )
            }
            Error::RankDeficient { rank, cols } => {
                write!(f, "row rank {rank} is below the column count {cols}")
            }
            Error::InvalidElement { token, reason } => {
                write!(f, "invalid element '{token}': {reason}")
            }
            Error::Parse { line, col, msg } => write!(f, "line {line}, column {col}: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
