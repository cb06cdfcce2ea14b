//! Row operations as first-class values: their application, the trace a
//! reduction performs, elementary matrices, trace inversion, and the
//! reduction matrix P.
//!
//! A trace records the exact operations [`crate::rref::row_reduce`]
//! performs, in order, including add-multiple operations with coefficient
//! zero — the trace is a faithful log, not a minimized one, and replaying
//! it reproduces the reduction step for step.

use std::fmt;

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::matrix::Matrix;
use crate::rref::{
    ero_addmul, ero_scale, ero_swap, first_nonzero, row_with_nonzero_at_least_index,
};

/// One elementary row operation, encoded with its parameters.
///
/// Validity, mirroring the reduction's needs: a `Scale` coefficient must
/// be nonzero and an `AddMul` must target a row other than its source.
/// `Swap` may name the same row twice (the identity operation); reduction
/// traces emit such swaps when a pivot row is already in place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowOp {
    /// Multiply row k by the nonzero scalar c.
    Scale { c: FieldElement, k: usize },
    /// Add c times row j to row k, j != k.
    AddMul { c: FieldElement, j: usize, k: usize },
    /// Exchange rows j and k.
    Swap { j: usize, k: usize },
}

impl RowOp {
    pub fn scale(c: FieldElement, k: usize) -> Result<RowOp, Error> {
        if c.is_zero() {
            return Err(Error::InvalidRowOp(
                "scale coefficient must be nonzero".into(),
            ));
        }
        Ok(RowOp::Scale { c, k })
    }

    pub fn addmul(c: FieldElement, j: usize, k: usize) -> Result<RowOp, Error> {
        if j == k {
            return Err(Error::InvalidRowOp(
                "addmul source and target rows must differ".into(),
            ));
        }
        Ok(RowOp::AddMul { c, j, k })
    }

    pub fn swap(j: usize, k: usize) -> RowOp {
        RowOp::Swap { j, k }
    }

    /// Full validity of the encoding relative to a row count.
    pub fn is_valid_for(&self, m: usize) -> bool {
        match self {
            RowOp::Scale { c, k } => !c.is_zero() && *k < m,
            RowOp::AddMul { j, k, .. } => j != k && *j < m && *k < m,
            RowOp::Swap { j, k } => *j < m && *k < m,
        }
    }

    /// The inverse operation: scaling inverts its coefficient, an add-
    /// multiple negates it, and a swap is its own inverse.
    pub fn invert(&self) -> RowOp {
        match self {
            RowOp::Scale { c, k } => RowOp::Scale {
                c: c.inv().expect("scale coefficient is nonzero"),
                k: *k,
            },
            RowOp::AddMul { c, j, k } => RowOp::AddMul {
                c: -c,
                j: *j,
                k: *k,
            },
            RowOp::Swap { .. } => self.clone(),
        }
    }
}

impl fmt::Display for RowOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowOp::Scale { c, k } => write!(f, "scale {c} {k}"),
            RowOp::AddMul { c, j, k } => write!(f, "addmul {c} {j} {k}"),
            RowOp::Swap { j, k } => write!(f, "swap {j} {k}"),
        }
    }
}

/// An ordered sequence of row operations, all valid for a declared row
/// count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowOpTrace {
    ops: Vec<RowOp>,
    row_count: usize,
}

impl RowOpTrace {
    pub fn new(ops: Vec<RowOp>, row_count: usize) -> Result<RowOpTrace, Error> {
        for (idx, op) in ops.iter().enumerate() {
            if !op.is_valid_for(row_count) {
                return Err(Error::InvalidRowOp(format!(
                    "operation {idx} ({op}) is invalid for {row_count} rows"
                )));
            }
        }
        Ok(RowOpTrace { ops, row_count })
    }

    pub fn ops(&self) -> &[RowOp] {
        &self.ops
    }

    pub fn row_count(&self) -> usize {
        self.row_count
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// The trace that undoes this one: per-operation inverses in reverse
    /// order. Its operation matrix is a two-sided inverse of this trace's.
    pub fn invert(&self) -> RowOpTrace {
        RowOpTrace {
            ops: self.ops.iter().rev().map(RowOp::invert).collect(),
            row_count: self.row_count,
        }
    }
}

/// Apply one operation to a matrix.
pub fn apply_row_op(op: &RowOp, a: &Matrix) -> Matrix {
    assert!(
        op.is_valid_for(a.nrows()),
        "row operation ({op}) invalid for {} rows",
        a.nrows()
    );
    match op {
        RowOp::Scale { c, k } => ero_scale(a, c, *k),
        RowOp::AddMul { c, j, k } => ero_addmul(a, c, *j, *k),
        RowOp::Swap { j, k } => ero_swap(a, *j, *k),
    }
}

/// Apply a trace left to right.
pub fn apply_row_ops(trace: &RowOpTrace, a: &Matrix) -> Matrix {
    assert_eq!(
        trace.row_count,
        a.nrows(),
        "trace row count disagrees with the matrix"
    );
    trace
        .ops
        .iter()
        .fold(a.clone(), |acc, op| apply_row_op(op, &acc))
}

/// The trace of operations that [`crate::rref::row_reduce`] performs on
/// this matrix, coefficient-zero add-multiples included.
pub fn row_reduce_ops(a: &Matrix) -> RowOpTrace {
    let m = a.nrows();
    let mut work = a.clone();
    let mut ops = Vec::new();
    let mut k = 0;
    while k < m {
        let Some(i) = row_with_nonzero_at_least_index(&work, m, k) else {
            break;
        };
        let j = first_nonzero(work.row(i));
        let inv = work.entry(i, j).inv().expect("pivot entry must be nonzero");
        let op = RowOp::scale(inv, i).expect("pivot inverse is nonzero");
        work = apply_row_op(&op, &work);
        ops.push(op);

        let op = RowOp::swap(i, k);
        work = apply_row_op(&op, &work);
        ops.push(op);

        for r in (0..m).rev() {
            if r == k {
                continue;
            }
            let c = -work.entry(r, j);
            let op = RowOp::addmul(c, k, r).expect("source and target rows differ");
            work = apply_row_op(&op, &work);
            ops.push(op);
        }
        k += 1;
    }
    RowOpTrace { ops, row_count: m }
}

/// The m×m elementary matrix of an operation: the operation applied to
/// the identity. Left-multiplying by it simulates the operation.
pub fn elem_mat(op: &RowOp, field: FieldSpec, m: usize) -> Matrix {
    apply_row_op(op, &Matrix::identity(field, m))
}

/// The product of the elementary matrices of a trace, composed right to
/// left so the first operation applied sits rightmost in the product.
/// Left-multiplying by it is the same as applying the whole trace.
pub fn row_ops_mat(trace: &RowOpTrace, field: FieldSpec) -> Matrix {
    let mut acc = Matrix::identity(field, trace.row_count);
    for op in &trace.ops {
        acc = elem_mat(op, field, trace.row_count).mat_mul(&acc);
    }
    acc
}

/// The reduction matrix P of a matrix: the operation matrix of its
/// reduction trace, satisfying P·A = rref(A).
pub fn row_reduce_mat(a: &Matrix) -> Matrix {
    row_ops_mat(&row_reduce_ops(a), a.field())
}
