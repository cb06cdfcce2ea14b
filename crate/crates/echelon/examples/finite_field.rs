//! The same kernel over GF(7): arithmetic, reduction, inversion, and
//! solving, all in exact modular arithmetic.
//!
//! Run with: cargo run --example finite_field

use echelon::det::det;
use echelon::inverse::inverse_rref;
use echelon::io::print_matrix;
use echelon::rref::{row_rank, row_reduce};
use echelon::solve::{is_solution, solve_unique, LinearSystem};
use echelon::{FieldSpec, Matrix};

fn main() {
    let f7 = FieldSpec::prime_field(7).unwrap();

    // Composite moduli are rejected up front.
    assert!(FieldSpec::prime_field(6).is_err());

    println!("multiplicative inverses in GF(7):");
    for v in 1..7 {
        let x = f7.from_i64(v);
        let inv = x.inv().unwrap();
        assert!((&x * &inv).is_one());
        println!("  {x}^-1 = {inv}");
    }

    let a = Matrix::from_i64_rows(f7, &[&[1, 2], &[3, 4]]).unwrap();
    println!("\nA over GF(7):\n{}", print_matrix(&a));
    println!("det(A) = {}", det(&a));
    println!("rank(A) = {}", row_rank(&a));
    println!("rref(A):\n{}", print_matrix(&row_reduce(&a)));

    let inv = inverse_rref(&a).unwrap();
    println!("inverse:\n{}", print_matrix(&inv));
    assert_eq!(a.mat_mul(&inv), Matrix::identity(f7, 2));

    let b = vec![f7.from_i64(5), f7.from_i64(6)];
    let sys = LinearSystem::new(a, b).unwrap();
    let x = solve_unique(&sys).unwrap();
    assert!(is_solution(&x, &sys));
    let rendered: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    println!("solution of A*x = (5, 6): ({})", rendered.join(", "));
}
