//! The reduced row-echelon predicate, the conversion procedure, row rank,
//! and lead/free-index bookkeeping.
//!
//! A matrix is in reduced row-echelon form when every all-zero row is
//! preceded by every nonzero row, the first nonzero entry of each nonzero
//! row is 1 and is alone in its column, and the leading-1 columns strictly
//! increase down the rows.
//!
//! The conversion works pivot by pivot: among the rows not yet fixed, pick
//! the one whose leading nonzero entry sits in the leftmost column
//! (smallest row index on ties), scale it to a leading 1, swap it into
//! place, and clear its column. The pivot policy is deliberately rigid —
//! exact arithmetic needs no pivoting heuristics, and the operation traces
//! in [`crate::rowops`] depend on this order being reproducible.

use crate::field::FieldElement;
use crate::matrix::{flist_add, flist_is_zero, flist_scalar_mul, Matrix};
use crate::rowops::{row_ops_mat, row_reduce_ops, RowOpTrace};

/// Index of the first nonzero entry of a row, or `r.len()` as a sentinel
/// when the row is all-zero. Callers test for a zero row first; the
/// sentinel never drives a pivot choice.
pub fn first_nonzero(r: &[FieldElement]) -> usize {
    r.iter().position(|x| !x.is_zero()).unwrap_or(r.len())
}

/// Among rows `k..m`, the index of a nonzero row whose leading nonzero
/// entry has minimal column, ties broken toward the smallest row index;
/// `None` when all those rows are zero.
pub fn row_with_nonzero_at_least_index(a: &Matrix, m: usize, k: usize) -> Option<usize> {
    assert!(k <= m && m <= a.nrows(), "row range {k}..{m} out of bounds");
    let mut best: Option<(usize, usize)> = None;
    for i in k..m {
        let lead = first_nonzero(a.row(i));
        if lead == a.ncols() {
            continue;
        }
        if best.is_none_or(|(_, best_lead)| lead < best_lead) {
            best = Some((i, lead));
        }
    }
    best.map(|(i, _)| i)
}

fn column_is_clear(a: &Matrix, k: usize, j: usize, m: usize) -> bool {
    (0..m).all(|r| {
        let x = a.entry(r, j);
        if r == k {
            x.is_one()
        } else {
            x.is_zero()
        }
    })
}

/// True iff the matrix is in reduced row-echelon form.
pub fn is_row_echelon(a: &Matrix) -> bool {
    let m = a.nrows();
    for k in 0..m {
        match row_with_nonzero_at_least_index(a, m, k) {
            // All remaining rows are zero, so nothing further to check.
            None => return true,
            Some(i) => {
                if i != k {
                    return false;
                }
                let j = first_nonzero(a.row(k));
                if !column_is_clear(a, k, j, m) {
                    return false;
                }
            }
        }
    }
    true
}

/// Scale row k by c. Total on valid indices; the c != 0 requirement is
/// enforced where operations are encoded, not here.
pub fn ero_scale(a: &Matrix, c: &FieldElement, k: usize) -> Matrix {
    a.replace_row(k, flist_scalar_mul(c, a.row(k)))
}

/// Add c times row j to row k.
pub fn ero_addmul(a: &Matrix, c: &FieldElement, j: usize, k: usize) -> Matrix {
    a.replace_row(k, flist_add(&flist_scalar_mul(c, a.row(j)), a.row(k)))
}

/// Exchange rows j and k (the identity when j = k).
pub fn ero_swap(a: &Matrix, j: usize, k: usize) -> Matrix {
    let mut out = a.clone();
    out.swap_rows(j, k);
    out
}

/// With a leading 1 at (k, j), zero every other entry of column j among
/// the first m rows by adding the appropriate multiple of row k.
pub fn clear_column(a: &Matrix, k: usize, j: usize, m: usize) -> Matrix {
    assert!(
        k < m && m <= a.nrows() && j < a.ncols(),
        "clear_column indices out of range"
    );
    assert!(
        a.entry(k, j).is_one(),
        "pivot entry must be 1 before clearing its column"
    );
    let mut out = a.clone();
    for r in (0..m).rev() {
        if r == k {
            continue;
        }
        let c = -out.entry(r, j);
        out.set_row(r, flist_add(&flist_scalar_mul(&c, out.row(k)), out.row(r)));
    }
    out
}

/// One pivot step: scale row i so its leading entry at column j becomes 1,
/// swap it into position k, and clear column j. Requires the first k rows
/// already reduced, i the pivot row chosen by
/// [`row_with_nonzero_at_least_index`], and j its leading column.
pub fn row_reduce_step(a: &Matrix, m: usize, k: usize, i: usize, j: usize) -> Matrix {
    let inv = a.entry(i, j).inv().expect("pivot entry must be nonzero");
    let scaled = ero_scale(a, &inv, i);
    let swapped = ero_swap(&scaled, i, k);
    clear_column(&swapped, k, j, m)
}

/// Reduced row-echelon form of a matrix.
pub fn row_reduce(a: &Matrix) -> Matrix {
    let m = a.nrows();
    let mut out = a.clone();
    let mut k = 0;
    while k < m {
        let Some(i) = row_with_nonzero_at_least_index(&out, m, k) else {
            break;
        };
        let j = first_nonzero(out.row(i));
        out = row_reduce_step(&out, m, k, i, j);
        k += 1;
    }
    out
}

/// Number of leading nonzero rows. Zero rows trail nonzero rows in an
/// echelon matrix, so on reduced input this counts all nonzero rows.
pub fn num_nonzero_rows(a: &Matrix) -> usize {
    a.rows().iter().take_while(|r| !flist_is_zero(r)).count()
}

/// Row rank: the number of nonzero rows of the reduced row-echelon form.
/// Always at most min(m, n).
pub fn row_rank(a: &Matrix) -> usize {
    num_nonzero_rows(&row_reduce(a))
}

/// Columns of the leading entries of the leading nonzero rows, in row
/// order. Meaningful on reduced input, where the list is strictly
/// increasing with one entry per nonzero row.
pub fn lead_inds(a: &Matrix) -> Vec<usize> {
    a.rows()
        .iter()
        .take_while(|r| !flist_is_zero(r))
        .map(|r| first_nonzero(r))
        .collect()
}

/// Ascending complement of [`lead_inds`] in `{0, .., n-1}`: the columns
/// not led by any row. Meaningful on reduced input.
pub fn free_inds(a: &Matrix, n: usize) -> Vec<usize> {
    let lead = lead_inds(a);
    (0..n).filter(|j| !lead.contains(j)).collect()
}

/// Everything one reduction produces: the reduced matrix, its rank and
/// lead indices, the operation trace that got there, and the reduction
/// matrix P with P·A = rref(A). Computed once and shared so downstream
/// consumers (invertibility, solving) never re-reduce.
#[derive(Debug, Clone)]
pub struct ReductionReport {
    rref: Matrix,
    rank: usize,
    lead_inds: Vec<usize>,
    trace: RowOpTrace,
    p_mat: Matrix,
}

impl ReductionReport {
    pub fn new(a: &Matrix) -> ReductionReport {
        let rref = row_reduce(a);
        let trace = row_reduce_ops(a);
        let p_mat = row_ops_mat(&trace, a.field());
        let rank = num_nonzero_rows(&rref);
        let lead_inds = lead_inds(&rref);
        debug_assert_eq!(p_mat.mat_mul(a), rref);
        debug_assert_eq!(rank, lead_inds.len());
        ReductionReport {
            rref,
            rank,
            lead_inds,
            trace,
            p_mat,
        }
    }

    pub fn rref(&self) -> &Matrix {
        &self.rref
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn lead_inds(&self) -> &[usize] {
        &self.lead_inds
    }

    pub fn free_inds(&self) -> Vec<usize> {
        (0..self.rref.ncols())
            .filter(|j| !self.lead_inds.contains(j))
            .collect()
    }

    pub fn trace(&self) -> &RowOpTrace {
        &self.trace
    }

    /// The reduction matrix P, a product of elementary matrices with
    /// P·A = rref(A).
    pub fn p_mat(&self) -> &Matrix {
        &self.p_mat
    }
}
