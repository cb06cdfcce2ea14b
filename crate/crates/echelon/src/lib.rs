//! Exact linear algebra over abstract fields.
//!
//! This crate computes with matrices over the exact rationals or a prime
//! field GF(p) — never floating point. The core is reduction to reduced
//! row-echelon form, exposed three ways that provably agree: as a direct
//! procedure ([`rref::row_reduce`]), as a replayable trace of elementary
//! row operations ([`rowops::row_reduce_ops`]), and as left-multiplication
//! by a product of elementary matrices ([`rowops::row_reduce_mat`]). On
//! top of the reduction sit row rank, invertibility and two inversion
//! methods, determinants with cofactors and the adjugate, and a complete
//! linear-system solver (unsolvable / unique / parametric, plus Cramer's
//! rule).
//!
//! ```
//! use echelon::{FieldSpec, Matrix};
//! use echelon::rref::{row_rank, row_reduce};
//!
//! let f = FieldSpec::rational();
//! let a = Matrix::from_i64_rows(f, &[&[1, 2], &[3, 4], &[4, 6]]).unwrap();
//! assert_eq!(row_rank(&a), 2);
//! assert_eq!(row_reduce(&a), Matrix::from_i64_rows(f, &[&[1, 0], &[0, 1], &[0, 0]]).unwrap());
//! ```
//!
//! The `examples/` directory walks through each capability; the `echelon`
//! binary exposes the same operations over a small text format (see
//! [`io`]).

pub mod cli;
pub mod det;
pub mod error;
pub mod field;
pub mod inverse;
pub mod io;
pub mod matrix;
pub mod rowops;
pub mod rref;
pub mod solve;

pub use error::Error;
pub use field::{FieldElement, FieldSpec};
pub use matrix::Matrix;
pub use rowops::{RowOp, RowOpTrace};
pub use rref::ReductionReport;
pub use solve::{LinearSystem, SolveOutcome};
