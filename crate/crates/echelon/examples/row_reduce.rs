//! Reduce a matrix to reduced row-echelon form and read off its rank,
//! lead indices, and free indices.
//!
//! Run with: cargo run --example row_reduce

use echelon::io::print_matrix;
use echelon::rref::{free_inds, lead_inds, row_rank, row_reduce};
use echelon::{FieldSpec, Matrix};

fn main() {
    let f = FieldSpec::rational();
    let a = Matrix::from_i64_rows(
        f,
        &[
            &[0, -3, -6, 4, 9],
            &[-1, -2, -1, 3, 1],
            &[-2, -3, 0, 3, -1],
            &[1, 4, 5, -9, -7],
        ],
    )
    .unwrap();

    println!("input:\n{}", print_matrix(&a));

    let reduced = row_reduce(&a);
    println!("reduced row-echelon form:\n{}", print_matrix(&reduced));

    println!("row rank:     {}", row_rank(&a));
    println!("lead indices: {:?}", lead_inds(&reduced));
    println!("free indices: {:?}", free_inds(&reduced, a.ncols()));
}
