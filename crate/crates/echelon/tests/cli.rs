//! End-to-end tests of the command-line surface: output formats, method
//! flags, and the exit-status contract on each command.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_echelon"))
        .args(args)
        .output()
        .expect("CLI binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn rref_prints_a_reparsable_matrix() {
    let out = run(&["rref", "tests/fixtures/mat22.mat"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "field rational\nrows 2 cols 2\n1 0\n0 1\n");

    // Fixed points reprint themselves.
    let id = run(&["rref", "tests/fixtures/id2.mat"]);
    assert_eq!(stdout_of(&id), include_str!("fixtures/id2.mat"));
}

#[test]
fn det_prints_one_element() {
    let out = run(&["det", "tests/fixtures/mat22.mat"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "-2\n");

    let out = run(&["det", "tests/fixtures/gf7_2x2.mat"]);
    assert_eq!(stdout_of(&out), "5\n");
}

#[test]
fn det_rejects_non_square_input() {
    let out = run(&["det", "tests/fixtures/a0.mat"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("square"));
}

#[test]
fn inverse_methods_agree() {
    let via_rref = run(&["inverse", "tests/fixtures/mat22.mat"]);
    assert_eq!(via_rref.status.code(), Some(0));
    assert_eq!(
        stdout_of(&via_rref),
        "field rational\nrows 2 cols 2\n-2 1\n3/2 -1/2\n"
    );

    let via_adjugate = run(&[
        "inverse",
        "tests/fixtures/mat22.mat",
        "--method",
        "adjugate",
    ]);
    assert_eq!(via_adjugate.status.code(), Some(0));
    assert_eq!(stdout_of(&via_adjugate), stdout_of(&via_rref));

    let inline = run(&["inverse", "tests/fixtures/mat22.mat", "--method=adjugate"]);
    assert_eq!(stdout_of(&inline), stdout_of(&via_rref));
}

#[test]
fn inverse_of_singular_matrix_is_a_domain_error() {
    for method in [
        &["inverse", "tests/fixtures/singular2.mat"][..],
        &[
            "inverse",
            "tests/fixtures/singular2.mat",
            "--method",
            "adjugate",
        ],
    ] {
        let out = run(method);
        assert_eq!(out.status.code(), Some(1));
        assert!(stderr_of(&out).contains("not invertible"));
    }
}

#[test]
fn unknown_method_is_a_usage_error() {
    let out = run(&["inverse", "tests/fixtures/mat22.mat", "--method", "lu"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "solve",
        "tests/fixtures/mat22.mat",
        "tests/fixtures/b56.vec",
        "--method",
        "fast",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn one_by_one_matrices_need_the_reduction_paths() {
    // The adjugate and Cramer formulas start at n = 2; 1x1 inputs go
    // through the reduction-based routes.
    let inv = run(&["inverse", "tests/fixtures/mat11.mat"]);
    assert_eq!(inv.status.code(), Some(0));
    assert_eq!(stdout_of(&inv), "field rational\nrows 1 cols 1\n1/5\n");

    let adjugate = run(&[
        "inverse",
        "tests/fixtures/mat11.mat",
        "--method",
        "adjugate",
    ]);
    assert_eq!(adjugate.status.code(), Some(2));

    let auto = run(&["solve", "tests/fixtures/mat11.mat", "tests/fixtures/vec1.vec"]);
    assert_eq!(auto.status.code(), Some(0));
    assert_eq!(stdout_of(&auto), "UNIQUE\nfield rational\nlen 1\n1\n");

    let cramer = run(&[
        "solve",
        "tests/fixtures/mat11.mat",
        "tests/fixtures/vec1.vec",
        "--method",
        "cramer",
    ]);
    assert_eq!(cramer.status.code(), Some(2));
}

#[test]
fn solve_reports_each_outcome() {
    let unique = run(&[
        "solve",
        "tests/fixtures/mat22.mat",
        "tests/fixtures/b56.vec",
    ]);
    assert_eq!(unique.status.code(), Some(0));
    assert_eq!(
        stdout_of(&unique),
        "UNIQUE\nfield rational\nlen 2\n-4 9/2\n"
    );

    let unsolvable = run(&[
        "solve",
        "tests/fixtures/inconsistent.mat",
        "tests/fixtures/b12.vec",
    ]);
    assert_eq!(unsolvable.status.code(), Some(0));
    assert_eq!(stdout_of(&unsolvable), "UNSOLVABLE witness-row 1\n");

    let parametric = run(&["solve", "tests/fixtures/a0.mat", "tests/fixtures/a0_b.vec"]);
    assert_eq!(parametric.status.code(), Some(0));
    assert_eq!(
        stdout_of(&parametric),
        "PARAMETRIC\nlead 0 1 3\nfree 2 4\nparticular\nfield rational\nlen 5\n3 0 0 1 0\n"
    );
}

#[test]
fn solve_with_cramer_demands_an_invertible_square_system() {
    let ok = run(&[
        "solve",
        "tests/fixtures/mat22.mat",
        "tests/fixtures/b56.vec",
        "--method",
        "cramer",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout_of(&ok), "UNIQUE\nfield rational\nlen 2\n-4 9/2\n");

    let singular = run(&[
        "solve",
        "tests/fixtures/singular2.mat",
        "tests/fixtures/b56.vec",
        "--method",
        "cramer",
    ]);
    assert_eq!(singular.status.code(), Some(1));

    let non_square = run(&[
        "solve",
        "tests/fixtures/a0.mat",
        "tests/fixtures/a0_b.vec",
        "--method",
        "cramer",
    ]);
    assert_eq!(non_square.status.code(), Some(2));
}

#[test]
fn solve_works_over_prime_fields() {
    let out = run(&[
        "solve",
        "tests/fixtures/gf7_2x2.mat",
        "tests/fixtures/gf7_b.vec",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "UNIQUE\nfield gf 7\nlen 2\n3 1\n");
}

#[test]
fn solve_rejects_mismatched_fields() {
    let out = run(&[
        "solve",
        "tests/fixtures/gf7_2x2.mat",
        "tests/fixtures/b56.vec",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("different field"));
}

#[test]
fn check_solution_reports_both_tests() {
    let good = run(&[
        "check-solution",
        "tests/fixtures/mat22.mat",
        "tests/fixtures/b56.vec",
        "tests/fixtures/x_sol.vec",
    ]);
    assert_eq!(good.status.code(), Some(0));
    assert_eq!(
        stdout_of(&good),
        "solvable true\nis-solution true\nsolution-test true\n"
    );

    let wrong = run(&[
        "check-solution",
        "tests/fixtures/mat22.mat",
        "tests/fixtures/b12.vec",
        "tests/fixtures/x_sol.vec",
    ]);
    assert_eq!(wrong.status.code(), Some(0));
    assert_eq!(
        stdout_of(&wrong),
        "solvable true\nis-solution false\nsolution-test false\n"
    );

    // On an unsolvable system the per-row test is undefined and is
    // omitted.
    let unsolvable = run(&[
        "check-solution",
        "tests/fixtures/inconsistent.mat",
        "tests/fixtures/b12.vec",
        "tests/fixtures/b12.vec",
    ]);
    assert_eq!(unsolvable.status.code(), Some(0));
    assert_eq!(
        stdout_of(&unsolvable),
        "solvable false\nis-solution false\n"
    );
}

#[test]
fn redmat_output_left_multiplies_to_the_rref() {
    let redmat = run(&["redmat", "tests/fixtures/a0.mat"]);
    assert_eq!(redmat.status.code(), Some(0));
    let p = echelon::io::parse_matrix(&stdout_of(&redmat)).unwrap();
    let a = echelon::io::parse_matrix(include_str!("fixtures/a0.mat")).unwrap();
    let rref = echelon::io::parse_matrix(include_str!("fixtures/a0.rref.mat")).unwrap();
    assert_eq!(p.mat_mul(&a), rref);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["transmogrify", "x.mat"]).status.code(), Some(2));
    assert_eq!(run(&["rref"]).status.code(), Some(2));
    assert_eq!(run(&["rref", "a.mat", "b.mat"]).status.code(), Some(2));
    assert_eq!(
        run(&["rref", "tests/fixtures/no_such_file.mat"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["rank", "tests/fixtures/a0.mat", "--method", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["solve", "tests/fixtures/mat22.mat"]).status.code(),
        Some(2)
    );
    // Vector length must match the matrix.
    assert_eq!(
        run(&[
            "solve",
            "tests/fixtures/mat22.mat",
            "tests/fixtures/a0_b.vec"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn parse_errors_name_their_position() {
    let out = run(&["rref", "tests/fixtures/bad_syntax.mat"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr_of(&out);
    assert!(msg.contains("line 4"), "message was: {msg}");

    let out = run(&["rref", "tests/fixtures/bad_field.mat"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("not prime"));
}
