//! Command-line dispatch over the kernel.
//!
//! Exit codes: 0 on success, 1 on a domain error (a singular matrix
//! where an inverse or Cramer solution was demanded), 2 on usage or
//! parse errors.

use std::io::Write;

use crate::error::Error;
use crate::inverse::{inverse_adjugate, inverse_rref};
use crate::io::{parse_matrix, parse_vector, print_matrix, print_trace, print_vector};
use crate::matrix::Matrix;
use crate::rowops::{row_reduce_mat, row_reduce_ops};
use crate::rref::{row_rank, row_reduce};
use crate::solve::{
    is_solution, is_solvable, solution_test, solve_cramer, solve_general, LinearSystem,
    SolveOutcome,
};

const USAGE: &str = "usage: echelon <command> [args]

commands:
  rref <matrix>                      reduced row-echelon form
  rank <matrix>                      row rank
  rowops <matrix>                    row-operation trace of the reduction
  redmat <matrix>                    reduction matrix P with P*A = rref(A)
  det <matrix>                       determinant of a square matrix
  inverse <matrix> [--method M]      inverse; M is rref (default) or adjugate
  solve <matrix> <vector> [--method M]
                                     solve A*x = b; M is auto (default) or cramer
  check-solution <matrix> <vector> <vector>
                                     test a candidate solution x of A*x = b

matrix files:   'field rational' or 'field gf <p>', then 'rows <m> cols <n>',
                then m rows of n elements ('#' starts a comment)
vector files:   field line, then 'len <n>', then one data line
exit status:    0 success, 1 domain error (e.g. singular matrix), 2 usage or
                parse error";

enum Failure {
    /// Exit 1: the input was well-formed but the operation is undefined
    /// on it (singular matrix where an inverse was demanded).
    Domain(String),
    /// Exit 2: bad invocation, unreadable file, or malformed input.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NotInvertible { .. } => Failure::Domain(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`;
/// returns the process exit code.
pub fn run(args: &[String], out: &mut impl Write, err: &mut impl Write) -> i32 {
    match dispatch(args, out) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

struct Invocation {
    paths: Vec<String>,
    method: Option<String>,
}

fn parse_args(args: &[String]) -> Result<Invocation, Failure> {
    let mut paths = Vec::new();
    let mut method = None;
    let mut rest = args.iter();
    while let Some(arg) = rest.next() {
        if let Some(value) = arg.strip_prefix("--method") {
            let value = match value.strip_prefix('=') {
                Some(v) => v.to_string(),
                None if value.is_empty() => rest
                    .next()
                    .ok_or_else(|| Failure::Usage("--method needs a value".into()))?
                    .clone(),
                None => return Err(Failure::Usage(format!("unknown flag '{arg}'"))),
            };
            method = Some(value);
        } else if arg.starts_with("--") {
            return Err(Failure::Usage(format!("unknown flag '{arg}'")));
        } else {
            paths.push(arg.clone());
        }
    }
    Ok(Invocation { paths, method })
}

fn dispatch(args: &[String], out: &mut impl Write) -> Result<(), Failure> {
    let Some(command) = args.first() else {
        return Err(Failure::Usage(format!("missing command\n\n{USAGE}")));
    };
    let inv = parse_args(&args[1..])?;

    match command.as_str() {
        "rref" => {
            let a = read_matrix(&inv, 0, 1)?;
            no_method(&inv)?;
            emit(out, &print_matrix(&row_reduce(&a)))
        }
        "rank" => {
            let a = read_matrix(&inv, 0, 1)?;
            no_method(&inv)?;
            emit(out, &format!("{}\n", row_rank(&a)))
        }
        "rowops" => {
            let a = read_matrix(&inv, 0, 1)?;
            no_method(&inv)?;
            emit(out, &print_trace(&row_reduce_ops(&a)))
        }
        "redmat" => {
            let a = read_matrix(&inv, 0, 1)?;
            no_method(&inv)?;
            emit(out, &print_matrix(&row_reduce_mat(&a)))
        }
        "det" => {
            let a = read_matrix(&inv, 0, 1)?;
            no_method(&inv)?;
            require_square(&a, "det")?;
            emit(out, &format!("{}\n", crate::det::det(&a)))
        }
        "inverse" => {
            let a = read_matrix(&inv, 0, 1)?;
            require_square(&a, "inverse")?;
            let result = match inv.method.as_deref() {
                None | Some("rref") => inverse_rref(&a)?,
                Some("adjugate") => {
                    if a.nrows() < 2 {
                        return Err(Failure::Usage(
                            "--method adjugate needs n >= 2; use --method rref".into(),
                        ));
                    }
                    inverse_adjugate(&a)?
                }
                Some(other) => {
                    return Err(Failure::Usage(format!(
                        "unknown method '{other}'; expected rref or adjugate"
                    )))
                }
            };
            emit(out, &print_matrix(&result))
        }
        "solve" => {
            let sys = read_system(&inv, 2)?;
            match inv.method.as_deref() {
                None | Some("auto") => {
                    let outcome = solve_general(&sys);
                    emit(out, &format_outcome(&outcome))
                }
                Some("cramer") => {
                    let a = sys.coefficients();
                    if !a.is_square() || a.nrows() < 2 {
                        return Err(Failure::Usage(
                            "--method cramer needs a square system with n >= 2".into(),
                        ));
                    }
                    let x = solve_cramer(&sys)?;
                    emit(out, &format!("UNIQUE\n{}", print_vector(&x)))
                }
                Some(other) => Err(Failure::Usage(format!(
                    "unknown method '{other}'; expected auto or cramer"
                ))),
            }
        }
        "check-solution" => {
            no_method(&inv)?;
            let sys = read_system(&inv, 3)?;
            let (field, x) = parse_vector(&read_file(&inv, 2, 3)?).map_err(Failure::from)?;
            if field != sys.coefficients().field() {
                return Err(Failure::Usage(
                    "candidate vector is declared over a different field".into(),
                ));
            }
            if x.len() != sys.coefficients().ncols() {
                return Err(Failure::Usage(format!(
                    "candidate has length {}, expected {}",
                    x.len(),
                    sys.coefficients().ncols()
                )));
            }
            let solvable = is_solvable(&sys);
            let mut text = format!("solvable {solvable}\n");
            text.push_str(&format!("is-solution {}\n", is_solution(&x, &sys)));
            if solvable {
                let passes = solution_test(&x, &sys).expect("system is solvable");
                text.push_str(&format!("solution-test {passes}\n"));
            }
            emit(out, &text)
        }
        other => Err(Failure::Usage(format!(
            "unknown command '{other}'\n\n{USAGE}"
        ))),
    }
}

fn no_method(inv: &Invocation) -> Result<(), Failure> {
    match &inv.method {
        Some(_) => Err(Failure::Usage("--method is not accepted here".into())),
        None => Ok(()),
    }
}

fn read_file(inv: &Invocation, idx: usize, want: usize) -> Result<String, Failure> {
    if inv.paths.len() != want {
        return Err(Failure::Usage(format!(
            "expected {want} file argument(s), found {}",
            inv.paths.len()
        )));
    }
    let path = &inv.paths[idx];
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read '{path}': {e}")))
}

fn read_matrix(inv: &Invocation, idx: usize, want: usize) -> Result<Matrix, Failure> {
    parse_matrix(&read_file(inv, idx, want)?).map_err(Failure::from)
}

fn read_system(inv: &Invocation, want: usize) -> Result<LinearSystem, Failure> {
    let a = parse_matrix(&read_file(inv, 0, want)?).map_err(Failure::from)?;
    let (field, b) = parse_vector(&read_file(inv, 1, want)?).map_err(Failure::from)?;
    if field != a.field() {
        return Err(Failure::Usage(
            "right-hand side is declared over a different field than the matrix".into(),
        ));
    }
    LinearSystem::new(a, b).map_err(Failure::from)
}

fn format_outcome(outcome: &SolveOutcome) -> String {
    match outcome {
        SolveOutcome::Unsolvable { witness_row } => {
            format!("UNSOLVABLE witness-row {witness_row}\n")
        }
        SolveOutcome::Unique { x } => format!("UNIQUE\n{}", print_vector(x)),
        SolveOutcome::Parametric {
            lead_inds,
            free_inds,
            particular,
        } => {
            format!(
                "PARAMETRIC\nlead{}\nfree{}\nparticular\n{}",
                join_indices(lead_inds),
                join_indices(free_inds),
                print_vector(particular)
            )
        }
    }
}

fn join_indices(inds: &[usize]) -> String {
    inds.iter().map(|i| format!(" {i}")).collect()
}

fn require_square(a: &Matrix, what: &str) -> Result<(), Failure> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "{what} needs a square matrix, found {}x{}",
            a.nrows(),
            a.ncols()
        )))
    }
}

fn emit(out: &mut impl Write, text: &str) -> Result<(), Failure> {
    let _ = out.write_all(text.as_bytes());
    Ok(())
}
