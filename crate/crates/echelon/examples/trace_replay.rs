//! Extract the row-operation trace of a reduction, replay it, and build
//! the reduction matrix P from elementary matrices.
//!
//! Run with: cargo run --example trace_replay

use echelon::io::{print_matrix, print_trace};
use echelon::rowops::{apply_row_ops, elem_mat, row_ops_mat, row_reduce_ops};
use echelon::rref::row_reduce;
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

    // Every operation the reduction performs, in order. The log is
    // faithful: add-multiples with coefficient zero stay in.
    let trace = row_reduce_ops(&a);
    println!("the reduction performs {} operations:", trace.len());
    print!("{}", print_trace(&trace));

    // Replaying the trace is the reduction.
    let replayed = apply_row_ops(&trace, &a);
    assert_eq!(replayed, row_reduce(&a));
    println!(
        "\nreplaying them reproduces the reduced form:\n{}",
        print_matrix(&replayed)
    );

    // Each operation is left-multiplication by its elementary matrix;
    // the whole trace is left-multiplication by their product P.
    let first = &trace.ops()[0];
    println!(
        "elementary matrix of '{first}':\n{}",
        print_matrix(&elem_mat(first, f, 4))
    );

    let p = row_ops_mat(&trace, f);
    println!("reduction matrix P:\n{}", print_matrix(&p));
    assert_eq!(p.mat_mul(&a), row_reduce(&a));
    println!("P * A equals rref(A): verified");

    // The inverted trace undoes the reduction.
    let restored = apply_row_ops(&trace.invert(), &replayed);
    assert_eq!(restored, a);
    println!("inverted trace restores the original: verified");
}
