//! Determinants, cofactors, and the adjugate identity.
//!
//! Run with: cargo run --example determinant

use echelon::det::{adjoint_mat, cofactor_row, det};
use echelon::io::print_matrix;
use echelon::matrix::fdot;
use echelon::{FieldSpec, Matrix};

fn main() {
    let f = FieldSpec::rational();
    let a = Matrix::from_i64_rows(f, &[&[1, 2], &[3, 4]]).unwrap();

    println!("A:\n{}", print_matrix(&a));
    println!("det(A)   = {}", det(&a));
    println!("det(A^T) = {}", det(&a.transpose()));

    println!("\ncofactor rows:");
    for i in 0..2 {
        let row: Vec<String> = cofactor_row(i, &a).iter().map(|x| x.to_string()).collect();
        println!("  row {i}: {}", row.join(" "));
    }

    let adj = adjoint_mat(&a);
    println!(
        "\nadjugate (transpose of the cofactor matrix):\n{}",
        print_matrix(&adj)
    );

    // A * adj(A) = det(A) * id.
    let scaled_id = Matrix::identity(f, 2).scalar_mul(&det(&a));
    assert_eq!(a.mat_mul(&adj), scaled_id);
    assert_eq!(adj.mat_mul(&a), scaled_id);
    println!("A * adj(A) = adj(A) * A = det(A) * id: verified");

    // Dotting a vector against a row of the adjugate expands the
    // determinant of the matrix with that column replaced.
    let b = vec![f.from_i64(5), f.from_i64(6)];
    let lhs = fdot(&b, adj.row(0));
    let rhs = det(&a.replace_col(0, &b));
    assert_eq!(lhs, rhs);
    println!("b . adj(A)[0] = det(A with column 0 := b) = {lhs}");

    // Determinants multiply.
    let c = Matrix::from_i64_rows(f, &[&[0, 1], &[5, -2]]).unwrap();
    assert_eq!(det(&a.mat_mul(&c)), &det(&a) * &det(&c));
    println!("det(A*C) = det(A) * det(C): verified");
}
