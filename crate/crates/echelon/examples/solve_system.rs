//! Solve linear systems: the unsolvable, unique, and parametric cases,
//! plus Cramer's rule and the solution test.
//!
//! Run with: cargo run --example solve_system

use echelon::solve::{
    is_solution, solution_test, solve_cramer, solve_general, LinearSystem, SolveOutcome,
};
use echelon::{FieldElement, FieldSpec, Matrix};

fn show(name: &str, sys: &LinearSystem) -> SolveOutcome {
    let outcome = solve_general(sys);
    match &outcome {
        SolveOutcome::Unsolvable { witness_row } => {
            println!("{name}: unsolvable (reduced rhs is nonzero at row {witness_row})");
        }
        SolveOutcome::Unique { x } => {
            println!("{name}: unique solution {}", fmt(x));
        }
        SolveOutcome::Parametric {
            lead_inds,
            free_inds,
            particular,
        } => {
            println!("{name}: infinitely many solutions");
            println!("  lead indices {lead_inds:?}, free indices {free_inds:?}");
            println!(
                "  particular solution (free components zero): {}",
                fmt(particular)
            );
        }
    }
    outcome
}

fn fmt(x: &[FieldElement]) -> String {
    let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn main() {
    let f = FieldSpec::rational();

    // Two contradictory equations: x = 1 and x = 2.
    let a = Matrix::from_i64_rows(f, &[&[1, 0], &[1, 0]]).unwrap();
    let b = vec![f.from_i64(1), f.from_i64(2)];
    show("contradictory", &LinearSystem::new(a, b).unwrap());

    // An invertible 2x2 system.
    let a = Matrix::from_i64_rows(f, &[&[1, 2], &[3, 4]]).unwrap();
    let b = vec![f.from_i64(5), f.from_i64(6)];
    let sys = LinearSystem::new(a, b).unwrap();
    let outcome = show("invertible", &sys);

    // Cramer's rule gives the same vector, component by component.
    let cramer = solve_cramer(&sys).unwrap();
    println!("  Cramer's rule agrees: {}", fmt(&cramer));
    if let SolveOutcome::Unique { x } = &outcome {
        assert_eq!(&cramer, x);
        assert!(is_solution(x, &sys));
        assert_eq!(solution_test(x, &sys), Ok(true));
    }

    // A wide system: rank 3 over 5 unknowns leaves two free components.
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
    // Manufacture a right-hand side that is certainly solvable.
    let ones = vec![f.one(); 5];
    let b = a.mat_mul(&Matrix::col_mat(&ones)).col(0);
    let sys = LinearSystem::new(a, b).unwrap();
    let outcome = show("underdetermined", &sys);

    if let SolveOutcome::Parametric { particular, .. } = &outcome {
        assert!(is_solution(particular, &sys));
        // Any assignment to the free components extends to a solution;
        // the solution test checks a candidate row by row.
        assert_eq!(solution_test(particular, &sys), Ok(true));
        assert!(is_solution(&ones, &sys));
        assert_eq!(solution_test(&ones, &sys), Ok(true));
        println!("  both the particular solution and the all-ones seed pass the solution test");
    }
}
