//! Simultaneous linear systems a·x = b: solvability, the unique solution,
//! Cramer's rule, and the general solution test.
//!
//! Everything here runs through one [`ReductionReport`] of the
//! coefficient matrix: left-multiplying both sides by the reduction
//! matrix P turns a·x = b into the equivalent reduced system, whose
//! shape decides the outcome. Below the row rank q the reduced left side
//! is zero, so a nonzero reduced right-hand entry there certifies
//! unsolvability; q = n pins the solution to the top of the reduced
//! right-hand side; and q < n leaves the free-index components
//! unconstrained, each assignment extending to exactly one solution.
//!
//! The particular solution reported in the parametric case assigns zero
//! to every free component. That choice is a convention of this crate
//! (the free components are genuinely unconstrained); it makes the
//! particular solution of a homogeneous system the zero vector.

use crate::det::det;
use crate::error::Error;
use crate::field::FieldElement;
use crate::matrix::Matrix;
use crate::rref::ReductionReport;

/// A system of m linear equations in n unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    a: Matrix,
    b: Vec<FieldElement>,
}

impl LinearSystem {
    /// Pairs a coefficient matrix with a right-hand side of matching
    /// length and field.
    pub fn new(a: Matrix, b: Vec<FieldElement>) -> Result<LinearSystem, Error> {
        if b.len() != a.nrows() {
            return Err(Error::Shape(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                a.nrows()
            )));
        }
        if b.iter().any(|x| x.spec() != a.field()) {
            return Err(Error::FieldMismatch);
        }
        Ok(LinearSystem { a, b })
    }

    pub fn coefficients(&self) -> &Matrix {
        &self.a
    }

    pub fn rhs(&self) -> &[FieldElement] {
        &self.b
    }
}

/// How a system resolves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// No solution; `witness_row` indexes a zero row of the reduced
    /// coefficients whose reduced right-hand entry is nonzero.
    Unsolvable { witness_row: usize },
    /// Exactly one solution.
    Unique { x: Vec<FieldElement> },
    /// Infinitely many solutions: the free components range over the
    /// whole field, and `particular` is the solution with all of them
    /// zero.
    Parametric {
        lead_inds: Vec<usize>,
        free_inds: Vec<usize>,
        particular: Vec<FieldElement>,
    },
}

/// True iff a·col(x) = col(b).
pub fn is_solution(x: &[FieldElement], sys: &LinearSystem) -> bool {
    assert_eq!(
        x.len(),
        sys.a.ncols(),
        "candidate solution has the wrong length"
    );
    sys.a.mat_mul(&Matrix::col_mat(x)) == Matrix::col_mat(&sys.b)
}

/// Scanning rows m-1 down to q of an m×1 column, the first (hence
/// greatest) index holding a nonzero entry; `None` when rows q..m are all
/// zero.
pub fn find_nonzero(br: &Matrix, q: usize, m: usize) -> Option<usize> {
    assert!(br.ncols() == 1, "find_nonzero expects a column matrix");
    assert!(
        q <= m && m <= br.nrows(),
        "row range {q}..{m} out of bounds"
    );
    (q..m).rev().find(|&r| !br.entry(r, 0).is_zero())
}

/// True iff the reduced right-hand side vanishes below the coefficient
/// row rank; when false, no x solves the system.
pub fn is_solvable(sys: &LinearSystem) -> bool {
    let report = ReductionReport::new(&sys.a);
    let br = report.p_mat().mat_mul(&Matrix::col_mat(&sys.b));
    find_nonzero(&br, report.rank(), sys.a.nrows()).is_none()
}

/// The first q rows as a q×n matrix, 1 <= q <= m.
pub fn first_rows(q: usize, a: &Matrix) -> Matrix {
    assert!(
        q >= 1 && q <= a.nrows(),
        "first_rows needs 1 <= q <= {}",
        a.nrows()
    );
    let rows = a.rows()[..q].iter().map(|r| r.to_vec()).collect();
    Matrix::from_rows(a.field(), rows).expect("prefix of a matrix is well formed")
}

/// The unique solution of a solvable system with full column rank: the
/// top n entries of the reduced right-hand side.
pub fn solve_unique(sys: &LinearSystem) -> Result<Vec<FieldElement>, Error> {
    let n = sys.a.ncols();
    let report = ReductionReport::new(&sys.a);
    let br = report.p_mat().mat_mul(&Matrix::col_mat(&sys.b));
    if let Some(w) = find_nonzero(&br, report.rank(), sys.a.nrows()) {
        return Err(Error::Unsolvable { witness_row: w });
    }
    if report.rank() < n {
        return Err(Error::RankDeficient {
            rank: report.rank(),
            cols: n,
        });
    }
    Ok((0..n).map(|i| br.entry(i, 0).clone()).collect())
}

/// Cramer's rule for an invertible n×n system, n >= 2:
/// x_i = det(a with column i replaced by b) / det(a). Agrees exactly with
/// [`solve_unique`].
pub fn solve_cramer(sys: &LinearSystem) -> Result<Vec<FieldElement>, Error> {
    let a = &sys.a;
    assert!(
        a.is_square() && a.nrows() >= 2,
        "Cramer's rule needs a square system with n >= 2"
    );
    let d = det(a);
    if d.is_zero() {
        return Err(Error::NotInvertible {
            rank: ReductionReport::new(a).rank(),
        });
    }
    let d_inv = d.inv().expect("determinant is nonzero");
    Ok((0..a.ncols())
        .map(|i| &d_inv * &det(&a.replace_col(i, &sys.b)))
        .collect())
}

/// Partial dot product: the sum of r_j·x_j over the selected indices.
/// Splitting the indices into lead and free parts splits the full dot
/// product into the two sums the solution test equates.
pub fn fdot_select(inds: &[usize], r: &[FieldElement], x: &[FieldElement]) -> FieldElement {
    assert_eq!(r.len(), x.len(), "vectors of different lengths");
    assert!(!r.is_empty(), "selection over empty vectors");
    let mut acc = r[0].spec().zero();
    for &j in inds {
        assert!(j < r.len(), "selected index {j} out of range");
        acc = &acc + &(&r[j] * &x[j]);
    }
    acc
}

/// Decides whether x solves a solvable system, one reduced row at a
/// time: for each i < q the lead component x[lead_inds[i]] must equal the
/// reduced right-hand entry minus the free-index part of the row's dot
/// product. Equivalent to [`is_solution`] on solvable systems; calling it
/// on an unsolvable system is an error.
pub fn solution_test(x: &[FieldElement], sys: &LinearSystem) -> Result<bool, Error> {
    let n = sys.a.ncols();
    assert_eq!(x.len(), n, "candidate solution has the wrong length");
    let report = ReductionReport::new(&sys.a);
    let br = report.p_mat().mat_mul(&Matrix::col_mat(&sys.b));
    if let Some(w) = find_nonzero(&br, report.rank(), sys.a.nrows()) {
        return Err(Error::Unsolvable { witness_row: w });
    }
    let free = report.free_inds();
    let ar = report.rref();
    for (i, &lead_col) in report.lead_inds().iter().enumerate() {
        let constrained = br.entry(i, 0) - &fdot_select(&free, ar.row(i), x);
        if x[lead_col] != constrained {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full case analysis over one reduction: unsolvable with a witness row,
/// a unique solution when the rank equals the column count, or a
/// parametric description otherwise.
pub fn solve_general(sys: &LinearSystem) -> SolveOutcome {
    let report = ReductionReport::new(&sys.a);
    let n = sys.a.ncols();
    let br = report.p_mat().mat_mul(&Matrix::col_mat(&sys.b));
    if let Some(w) = find_nonzero(&br, report.rank(), sys.a.nrows()) {
        return SolveOutcome::Unsolvable { witness_row: w };
    }
    // Free components zero; lead components read straight off the
    // reduced right-hand side.
    let mut x = vec![sys.a.field().zero(); n];
    for (i, &lead_col) in report.lead_inds().iter().enumerate() {
        x[lead_col] = br.entry(i, 0).clone();
    }
    if report.rank() == n {
        SolveOutcome::Unique { x }
    } else {
        SolveOutcome::Parametric {
            lead_inds: report.lead_inds().to_vec(),
            free_inds: report.free_inds(),
            particular: x,
        }
    }
}
