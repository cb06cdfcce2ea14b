//! Dense matrices and row vectors over a field.
//!
//! A matrix is a rectangular, nonempty grid of field elements stored as a
//! list of rows; every algorithm in this crate is row-oriented. Row
//! vectors are plain `Vec<FieldElement>` / `&[FieldElement]` values, with
//! the componentwise operations provided as free functions.
//!
//! Dimension and field preconditions are validated at construction via
//! [`Matrix::from_rows`]; the operation methods treat violations as caller
//! bugs and panic with a descriptive message.

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};

/// A dense m×n matrix over a single field, m ≥ 1 and n ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<FieldElement>>,
}

impl Matrix {
    /// Builds a matrix from rows, validating that the grid is nonempty,
    /// rectangular, and entirely within `field`.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Matrix, Error> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Shape(
                "matrix must have at least one row and one column".into(),
            ));
        }
        let ncols = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            if row.iter().any(|x| x.spec() != field) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Matrix {
            field,
            nrows: rows.len(),
            ncols,
            rows,
        })
    }

    /// Convenience builder from integer literals, embedded via
    /// [`FieldSpec::from_i64`].
    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Result<Matrix, Error> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, rows)
    }

    /// The n×n identity matrix.
    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        assert!(n >= 1, "identity matrix needs n >= 1");
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        Matrix {
            field,
            nrows: n,
            ncols: n,
            rows,
        }
    }

    /// The m×n all-zero matrix.
    pub fn zero(field: FieldSpec, m: usize, n: usize) -> Matrix {
        assert!(m >= 1 && n >= 1, "zero matrix needs m, n >= 1");
        Matrix {
            field,
            nrows: m,
            ncols: n,
            rows: vec![vec![field.zero(); n]; m],
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    /// The entry a_{i,j}.
    pub fn entry(&self, i: usize, j: usize) -> &FieldElement {
        assert!(
            i < self.nrows && j < self.ncols,
            "entry ({i},{j}) out of range for a {}x{} matrix",
            self.nrows,
            self.ncols
        );
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        assert!(
            i < self.nrows,
            "row {i} out of range for {} rows",
            self.nrows
        );
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    /// Column j as a vector.
    pub fn col(&self, j: usize) -> Vec<FieldElement> {
        assert!(
            j < self.ncols,
            "column {j} out of range for {} columns",
            self.ncols
        );
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// In-place row replacement for the reduction kernels.
    pub(crate) fn set_row(&mut self, k: usize, row: Vec<FieldElement>) {
        assert!(k < self.nrows && row.len() == self.ncols);
        debug_assert!(row.iter().all(|x| x.spec() == self.field));
        self.rows[k] = row;
    }

    pub(crate) fn swap_rows(&mut self, j: usize, k: usize) {
        self.rows.swap(j, k);
    }

    /// Matrix with row k replaced by `row`; all other rows untouched.
    pub fn replace_row(&self, k: usize, row: Vec<FieldElement>) -> Matrix {
        assert!(
            k < self.nrows,
            "row {k} out of range for {} rows",
            self.nrows
        );
        assert_eq!(
            row.len(),
            self.ncols,
            "replacement row has the wrong length"
        );
        let mut rows = self.rows.clone();
        rows[k] = row;
        Matrix { rows, ..*self }
    }

    /// Matrix with column j replaced by `col`.
    pub fn replace_col(&self, j: usize, col: &[FieldElement]) -> Matrix {
        assert!(
            j < self.ncols,
            "column {j} out of range for {} columns",
            self.ncols
        );
        assert_eq!(
            col.len(),
            self.nrows,
            "replacement column has the wrong length"
        );
        let mut rows = self.rows.clone();
        for (row, x) in rows.iter_mut().zip(col) {
            row[j] = x.clone();
        }
        Matrix { rows, ..*self }
    }

    /// Exact matrix product; inner dimensions and fields must agree.
    pub fn mat_mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.ncols, other.nrows,
            "inner dimensions disagree: {}x{} times {}x{}",
            self.nrows, self.ncols, other.nrows, other.ncols
        );
        assert_eq!(
            self.field, other.field,
            "matrix product across different fields"
        );
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..other.ncols)
                    .map(|j| {
                        let mut acc = &r[0] * &other.rows[0][j];
                        for (x, other_row) in r.iter().zip(&other.rows).skip(1) {
                            acc = &acc + &(x * &other_row[j]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Matrix {
            field: self.field,
            nrows: self.nrows,
            ncols: other.ncols,
            rows,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Matrix {
            field: self.field,
            nrows: self.ncols,
            ncols: self.nrows,
            rows,
        }
    }

    /// Entrywise scalar multiple c·a.
    pub fn scalar_mul(&self, c: &FieldElement) -> Matrix {
        assert_eq!(c.spec(), self.field, "scalar from a different field");
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| c * x).collect())
            .collect();
        Matrix { rows, ..*self }
    }

    /// The n×1 column matrix of a vector.
    pub fn col_mat(x: &[FieldElement]) -> Matrix {
        assert!(!x.is_empty(), "column matrix of an empty vector");
        let field = x[0].spec();
        let rows = x.iter().map(|v| vec![v.clone()]).collect();
        Matrix {
            field,
            nrows: x.len(),
            ncols: 1,
            rows,
        }
    }
}

/// Dot product Σ r_j·x_j of two equal-length, nonempty vectors.
pub fn fdot(r: &[FieldElement], x: &[FieldElement]) -> FieldElement {
    assert_eq!(r.len(), x.len(), "dot product of different lengths");
    assert!(!r.is_empty(), "dot product of empty vectors");
    let mut acc = &r[0] * &x[0];
    for (a, b) in r.iter().zip(x).skip(1) {
        acc = &acc + &(a * b);
    }
    acc
}

/// Componentwise scalar multiple c·r.
pub fn flist_scalar_mul(c: &FieldElement, r: &[FieldElement]) -> Vec<FieldElement> {
    r.iter().map(|x| c * x).collect()
}

/// Componentwise sum r + s.
pub fn flist_add(r: &[FieldElement], s: &[FieldElement]) -> Vec<FieldElement> {
    assert_eq!(r.len(), s.len(), "vector sum of different lengths");
    r.iter().zip(s).map(|(a, b)| a + b).collect()
}

/// True iff every entry is zero.
pub fn flist_is_zero(r: &[FieldElement]) -> bool {
    r.iter().all(|x| x.is_zero())
}
