//! Invert a matrix two ways and see what a singular matrix reports.
//!
//! Run with: cargo run --example invert

use echelon::inverse::{inverse_adjugate, inverse_rref, is_invertible};
use echelon::io::print_matrix;
use echelon::{Error, FieldSpec, Matrix};

fn main() {
    let f = FieldSpec::rational();
    let a = Matrix::from_i64_rows(f, &[&[1, 2], &[3, 4]]).unwrap();
    println!("A:\n{}", print_matrix(&a));
    println!("invertible: {}", is_invertible(&a));

    // Method one: reduce the matrix; the product of the elementary
    // matrices used is the inverse.
    let inv = inverse_rref(&a).unwrap();
    println!("inverse via reduction:\n{}", print_matrix(&inv));

    // Method two: the adjugate scaled by 1/det. Exactly the same matrix.
    let adj = inverse_adjugate(&a).unwrap();
    assert_eq!(adj, inv);
    println!("inverse via adjugate agrees: verified");

    let id = Matrix::identity(f, 2);
    assert_eq!(a.mat_mul(&inv), id);
    assert_eq!(inv.mat_mul(&a), id);
    assert_eq!(inverse_rref(&inv).unwrap(), a);
    println!("A * inv(A) = inv(A) * A = id, and inv(inv(A)) = A: verified");

    // A rank-deficient matrix reports the rank it reached.
    let singular = Matrix::from_i64_rows(f, &[&[1, 2], &[2, 4]]).unwrap();
    match inverse_rref(&singular) {
        Err(Error::NotInvertible { rank }) => {
            println!("\nsingular example has no inverse (row rank {rank})");
        }
        other => panic!("expected NotInvertible, got {other:?}"),
    }
}
