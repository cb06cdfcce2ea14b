//! Determinants, cofactors, and the classical adjoint.

use crate::field::FieldElement;
use crate::matrix::Matrix;

/// Determinant of a square matrix, by exact Gaussian-style elimination:
/// eliminate below each pivot, track row-swap signs, and multiply the
/// pivots. O(n³) field operations. The 1×1 determinant is the entry
/// itself.
pub fn det(a: &Matrix) -> FieldElement {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.nrows();
    let field = a.field();
    let mut rows: Vec<Vec<FieldElement>> = a.rows().iter().map(|r| r.to_vec()).collect();
    let mut acc = field.one();
    let mut negate = false;

    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&r| !rows[r][k].is_zero()) else {
            return field.zero();
        };
        if pivot_row != k {
            rows.swap(pivot_row, k);
            negate = !negate;
        }
        let pivot = rows[k][k].clone();
        acc = &acc * &pivot;
        let pivot_inv = pivot.inv().expect("pivot is nonzero");
        for r in k + 1..n {
            if rows[r][k].is_zero() {
                continue;
            }
            let factor = &rows[r][k] * &pivot_inv;
            let (top, bottom) = rows.split_at_mut(r);
            let pivot_row = &top[k];
            for (cell, pivot_cell) in bottom[0].iter_mut().zip(pivot_row).skip(k) {
                let sub = &factor * pivot_cell;
                *cell = &*cell - &sub;
            }
        }
    }
    if negate {
        -&acc
    } else {
        acc
    }
}

/// Signed cofactor C_{i,j} = (-1)^{i+j} det(minor(i, j)).
fn cofactor(a: &Matrix, i: usize, j: usize) -> FieldElement {
    let minor_det = det(&minor(a, i, j));
    if (i + j).is_multiple_of(2) {
        minor_det
    } else {
        -&minor_det
    }
}

fn minor(a: &Matrix, i: usize, j: usize) -> Matrix {
    let rows = a
        .rows()
        .iter()
        .enumerate()
        .filter(|(r, _)| *r != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != j)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect();
    Matrix::from_rows(a.field(), rows).expect("minor of an n>=2 matrix is well formed")
}

/// Row i of the cofactor matrix: (C_{i,0}, .., C_{i,n-1}). Equals row i
/// of the adjoint of the transpose, so the dot product of any vector b
/// with row i of adj(a) is det(a with column i replaced by b).
pub fn cofactor_row(i: usize, a: &Matrix) -> Vec<FieldElement> {
    assert!(
        a.is_square() && a.nrows() >= 2,
        "cofactors need a square matrix with n >= 2"
    );
    assert!(i < a.nrows(), "row {i} out of range");
    (0..a.ncols()).map(|j| cofactor(a, i, j)).collect()
}

/// The classical adjoint: the transpose of the cofactor matrix,
/// satisfying a·adj(a) = adj(a)·a = det(a)·id. Requires n >= 2; the 1×1
/// case is handled by scalar reciprocal in the inversion layer.
pub fn adjoint_mat(a: &Matrix) -> Matrix {
    assert!(
        a.is_square() && a.nrows() >= 2,
        "adjoint needs a square matrix with n >= 2"
    );
    let n = a.nrows();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| cofactor(a, j, i)).collect())
        .collect();
    Matrix::from_rows(a.field(), rows).expect("adjoint is well formed")
}
