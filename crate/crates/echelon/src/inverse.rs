//! Invertibility and the two inversion methods: via the reduction matrix
//! and via the adjugate.

use crate::det::{adjoint_mat, det};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::rref::ReductionReport;

/// True iff the square matrix has full row rank, equivalently a nonzero
/// determinant and a two-sided inverse.
pub fn is_invertible(a: &Matrix) -> bool {
    assert!(a.is_square(), "invertibility of a non-square matrix");
    ReductionReport::new(a).rank() == a.nrows()
}

/// The inverse, read off the reduction: when A reduces to the identity,
/// the reduction matrix P with P·A = rref(A) is the unique two-sided
/// inverse. Works for any n >= 1.
pub fn inverse_rref(a: &Matrix) -> Result<Matrix, Error> {
    assert!(a.is_square(), "inverse of a non-square matrix");
    let report = ReductionReport::new(a);
    inverse_from_report(a, &report)
}

/// Same as [`inverse_rref`], reusing a reduction the caller already has.
pub fn inverse_from_report(a: &Matrix, report: &ReductionReport) -> Result<Matrix, Error> {
    if report.rank() < a.nrows() {
        return Err(Error::NotInvertible {
            rank: report.rank(),
        });
    }
    Ok(report.p_mat().clone())
}

/// The inverse as (1/det)·adj. Requires n >= 2 (use [`inverse_rref`] for
/// 1×1 matrices); agrees exactly with [`inverse_rref`] whenever both
/// apply.
pub fn inverse_adjugate(a: &Matrix) -> Result<Matrix, Error> {
    assert!(
        a.is_square() && a.nrows() >= 2,
        "adjugate inversion needs a square matrix with n >= 2"
    );
    let d = det(a);
    if d.is_zero() {
        return Err(Error::NotInvertible {
            rank: ReductionReport::new(a).rank(),
        });
    }
    let d_inv = d.inv().expect("determinant is nonzero");
    Ok(adjoint_mat(a).scalar_mul(&d_inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(q(), rows).unwrap()
    }

    #[test]
    fn invertibility_checks() {
        assert!(is_invertible(&Matrix::identity(q(), 3)));
        assert!(!is_invertible(&mat(&[&[1, 2], &[2, 4]])));
        assert!(is_invertible(&mat(&[&[1, 2], &[3, 4]])));
    }

    #[test]
    fn inverse_via_reduction() {
        let id = Matrix::identity(q(), 3);
        assert_eq!(inverse_rref(&id).unwrap(), id);

        let a = mat(&[&[1, 2], &[3, 4]]);
        let inv = inverse_rref(&a).unwrap();
        let f = q();
        let expected = Matrix::from_rows(
            f,
            vec![
                vec![f.from_i64(-2), f.one()],
                vec![f.from_ratio(3, 2).unwrap(), f.from_ratio(-1, 2).unwrap()],
            ],
        )
        .unwrap();
        assert_eq!(inv, expected);
        assert_eq!(a.mat_mul(&inv), Matrix::identity(q(), 2));
        assert_eq!(inv.mat_mul(&a), Matrix::identity(q(), 2));
        assert_eq!(inverse_rref(&inv).unwrap(), a);

        // 1x1 goes through the reduction path.
        let one_by_one = mat(&[&[4]]);
        assert_eq!(
            inverse_rref(&one_by_one).unwrap(),
            Matrix::from_rows(f, vec![vec![f.from_ratio(1, 4).unwrap()]]).unwrap()
        );
    }

    #[test]
    fn singular_matrices_report_their_rank() {
        let singular = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            inverse_rref(&singular),
            Err(Error::NotInvertible { rank: 1 })
        );
        assert_eq!(
            inverse_adjugate(&singular),
            Err(Error::NotInvertible { rank: 1 })
        );
    }

    #[test]
    fn adjugate_agrees_with_reduction() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        assert_eq!(inverse_adjugate(&a).unwrap(), inverse_rref(&a).unwrap());
        let id2 = Matrix::identity(q(), 2);
        assert_eq!(inverse_adjugate(&id2).unwrap(), id2);
    }

    #[test]
    fn perturbing_the_inverse_breaks_the_identity() {
        let a = mat(&[&[1, 2, 0], &[3, 4, 1], &[0, 5, 2]]);
        let inv = inverse_rref(&a).unwrap();
        let id = Matrix::identity(q(), 3);
        assert_eq!(a.mat_mul(&inv), id);
        for i in 0..3 {
            for j in 0..3 {
                let bumped = &inv.entry(i, j).clone() + &q().one();
                let mut row = inv.row(i).to_vec();
                row[j] = bumped;
                let candidate = inv.replace_row(i, row);
                assert_ne!(a.mat_mul(&candidate), id);
                assert_ne!(candidate.mat_mul(&a), id);
            }
        }
    }

    #[test]
    fn gf7_adjugate_inverse() {
        let f = FieldSpec::prime_field(7).unwrap();
        let a = Matrix::from_i64_rows(f, &[&[1, 2], &[3, 4]]).unwrap();
        let inv = inverse_adjugate(&a).unwrap();
        assert_eq!(inv, inverse_rref(&a).unwrap());
        assert_eq!(a.mat_mul(&inv), Matrix::identity(f, 2));
        assert_eq!(inv.mat_mul(&a), Matrix::identity(f, 2));
    }
}
