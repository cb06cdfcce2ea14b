//! Text formats for matrices, vectors, and operation traces.
//!
//! Matrix files:
//!
//! ```text
//! # comments run to end of line
//! field rational          (or: field gf <p>)
//! rows <m> cols <n>
//! <m lines of n whitespace-separated elements>
//! ```
//!
//! Vector files replace the dimension line with `len <n>` and carry one
//! data line. Traces are one operation per line — `scale <c> <k>`,
//! `addmul <c> <j> <k>`, `swap <j> <k>` — with no header; the field and
//! row count come from the matrix the trace belongs to.
//!
//! Printing is canonical (rationals reduced with positive denominator,
//! residues in `[0, p)`) and parsing canonical output returns the exact
//! value, so every printed artifact round-trips bit for bit. Output is
//! always exact; nothing is ever rendered in decimal.

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::matrix::Matrix;
use crate::rowops::{RowOp, RowOpTrace};

struct Line<'a> {
    no: usize,
    tokens: Vec<(usize, &'a str)>,
}

/// Comment-stripped, non-blank lines with 1-based token positions.
fn content_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(idx, raw)| {
            let content = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let tokens = tokenize(content);
            if tokens.is_empty() {
                None
            } else {
                Some(Line {
                    no: idx + 1,
                    tokens,
                })
            }
        })
        .collect()
}

fn tokenize(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((st + 1, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st + 1, &s[st..]));
    }
    out
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn parse_count(line: &Line, idx: usize, what: &str) -> Result<usize, Error> {
    let (col, tok) = line.tokens[idx];
    if tok.bytes().all(|b| b.is_ascii_digit()) {
        if let Ok(v) = tok.parse::<usize>() {
            return Ok(v);
        }
    }
    Err(parse_err(
        line.no,
        col,
        format!("expected {what}, found '{tok}'"),
    ))
}

fn parse_field_header(line: &Line) -> Result<FieldSpec, Error> {
    let (col0, first) = line.tokens[0];
    if first != "field" {
        return Err(parse_err(
            line.no,
            col0,
            "expected 'field rational' or 'field gf <p>'",
        ));
    }
    match line.tokens.get(1) {
        Some(&(_, "rational")) if line.tokens.len() == 2 => Ok(FieldSpec::rational()),
        Some(&(_, "gf")) if line.tokens.len() == 3 => {
            let (col, tok) = line.tokens[2];
            let p = tok
                .parse::<u64>()
                .map_err(|_| parse_err(line.no, col, format!("bad modulus '{tok}'")))?;
            FieldSpec::prime_field(p).map_err(|e| parse_err(line.no, col, e.to_string()))
        }
        _ => Err(parse_err(
            line.no,
            col0,
            "expected 'field rational' or 'field gf <p>'",
        )),
    }
}

fn parse_data_row(
    field: FieldSpec,
    line: &Line,
    expected: usize,
) -> Result<Vec<FieldElement>, Error> {
    if line.tokens.len() != expected {
        return Err(parse_err(
            line.no,
            line.tokens[0].0,
            format!("expected {expected} elements, found {}", line.tokens.len()),
        ));
    }
    line.tokens
        .iter()
        .map(|&(col, tok)| {
            field
                .parse_element(tok)
                .map_err(|e| parse_err(line.no, col, e.to_string()))
        })
        .collect()
}

/// Reads a matrix file.
pub fn parse_matrix(text: &str) -> Result<Matrix, Error> {
    let lines = content_lines(text);
    if lines.len() < 2 {
        return Err(parse_err(
            1,
            1,
            "expected a field line and a dimension line",
        ));
    }
    let field = parse_field_header(&lines[0])?;

    let dims = &lines[1];
    let shape_msg = "expected 'rows <m> cols <n>'";
    if dims.tokens.len() != 4 || dims.tokens[0].1 != "rows" || dims.tokens[2].1 != "cols" {
        return Err(parse_err(dims.no, dims.tokens[0].0, shape_msg));
    }
    let m = parse_count(dims, 1, "a row count")?;
    let n = parse_count(dims, 3, "a column count")?;
    if m == 0 || n == 0 {
        return Err(parse_err(
            dims.no,
            dims.tokens[0].0,
            "dimensions must be at least 1",
        ));
    }

    if lines.len() < 2 + m {
        return Err(parse_err(
            lines.last().unwrap().no,
            1,
            format!("expected {m} data rows, found {}", lines.len() - 2),
        ));
    }
    if lines.len() > 2 + m {
        let extra = &lines[2 + m];
        return Err(parse_err(
            extra.no,
            extra.tokens[0].0,
            "unexpected content after the last row",
        ));
    }

    let rows = lines[2..]
        .iter()
        .map(|line| parse_data_row(field, line, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(field, rows).expect("validated while parsing"))
}

/// Prints a matrix file in canonical form.
pub fn print_matrix(a: &Matrix) -> String {
    let mut out = format!(
        "field {}\nrows {} cols {}\n",
        a.field(),
        a.nrows(),
        a.ncols()
    );
    for row in a.rows() {
        out.push_str(&join_elements(row));
        out.push('\n');
    }
    out
}

/// Reads a vector file, returning the declared field alongside the data.
pub fn parse_vector(text: &str) -> Result<(FieldSpec, Vec<FieldElement>), Error> {
    let lines = content_lines(text);
    if lines.len() < 2 {
        return Err(parse_err(1, 1, "expected a field line and a length line"));
    }
    let field = parse_field_header(&lines[0])?;

    let len_line = &lines[1];
    if len_line.tokens.len() != 2 || len_line.tokens[0].1 != "len" {
        return Err(parse_err(
            len_line.no,
            len_line.tokens[0].0,
            "expected 'len <n>'",
        ));
    }
    let n = parse_count(len_line, 1, "a length")?;
    if n == 0 {
        return Err(parse_err(
            len_line.no,
            len_line.tokens[0].0,
            "length must be at least 1",
        ));
    }

    if lines.len() < 3 {
        return Err(parse_err(len_line.no, 1, "expected one data line"));
    }
    if lines.len() > 3 {
        let extra = &lines[3];
        return Err(parse_err(
            extra.no,
            extra.tokens[0].0,
            "unexpected content after the data line",
        ));
    }
    let data = parse_data_row(field, &lines[2], n)?;
    Ok((field, data))
}

/// Prints a vector file in canonical form.
pub fn print_vector(v: &[FieldElement]) -> String {
    assert!(!v.is_empty(), "cannot print an empty vector");
    format!(
        "field {}\nlen {}\n{}\n",
        v[0].spec(),
        v.len(),
        join_elements(v)
    )
}

/// Reads a trace: one operation per line, coefficients in the given
/// field, indices valid for the given row count.
pub fn parse_trace(field: FieldSpec, row_count: usize, text: &str) -> Result<RowOpTrace, Error> {
    let mut ops = Vec::new();
    for line in content_lines(text) {
        let (col0, keyword) = line.tokens[0];
        let arity_err =
            |want: &str| parse_err(line.no, col0, format!("expected '{keyword} {want}'"));
        let index = |idx: usize| parse_count(&line, idx, "a row index");
        let coeff = |idx: usize| -> Result<FieldElement, Error> {
            let (col, tok) = line.tokens[idx];
            field
                .parse_element(tok)
                .map_err(|e| parse_err(line.no, col, e.to_string()))
        };
        let op = match keyword {
            "scale" => {
                if line.tokens.len() != 3 {
                    return Err(arity_err("<c> <k>"));
                }
                RowOp::scale(coeff(1)?, index(2)?)
                    .map_err(|e| parse_err(line.no, col0, e.to_string()))?
            }
            "addmul" => {
                if line.tokens.len() != 4 {
                    return Err(arity_err("<c> <j> <k>"));
                }
                RowOp::addmul(coeff(1)?, index(2)?, index(3)?)
                    .map_err(|e| parse_err(line.no, col0, e.to_string()))?
            }
            "swap" => {
                if line.tokens.len() != 3 {
                    return Err(arity_err("<j> <k>"));
                }
                RowOp::swap(index(1)?, index(2)?)
            }
            other => {
                return Err(parse_err(
                    line.no,
                    col0,
                    format!("unknown operation '{other}'; expected scale, addmul, or swap"),
                ))
            }
        };
        if !op.is_valid_for(row_count) {
            return Err(parse_err(
                line.no,
                col0,
                format!("operation ({op}) is invalid for {row_count} rows"),
            ));
        }
        ops.push(op);
    }
    RowOpTrace::new(ops, row_count).map_err(|e| parse_err(1, 1, e.to_string()))
}

/// Prints a trace, one operation per line.
pub fn print_trace(trace: &RowOpTrace) -> String {
    let mut out = String::new();
    for op in trace.ops() {
        out.push_str(&op.to_string());
        out.push('\n');
    }
    out
}

fn join_elements(row: &[FieldElement]) -> String {
    row.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rowops::row_reduce_ops;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    #[test]
    fn matrix_round_trip() {
        let text = "field rational\nrows 2 cols 3\n1 -2 5/6\n0 8/5 -3/5\n";
        let a = parse_matrix(text).unwrap();
        assert_eq!(print_matrix(&a), text);

        let gf_text = "field gf 7\nrows 2 cols 2\n1 2\n3 4\n";
        let b = parse_matrix(gf_text).unwrap();
        assert_eq!(print_matrix(&b), gf_text);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# a matrix\nfield rational   # the field\n\nrows 1 cols 2\n3 4   # data\n";
        let a = parse_matrix(text).unwrap();
        assert_eq!(print_matrix(&a), "field rational\nrows 1 cols 2\n3 4\n");
    }

    #[test]
    fn composite_modulus_is_rejected() {
        let err = parse_matrix("field gf 6\nrows 1 cols 1\n0\n").unwrap_err();
        match err {
            Error::Parse { line, col, msg } => {
                assert_eq!((line, col), (1, 10));
                assert!(msg.contains("not prime"), "message was: {msg}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_matrix("field rational\nrows 2 cols 2\n1 2\n3 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 4,
                col: 3,
                msg: "invalid element 'x': not an integer".into()
            }
        );

        let err = parse_matrix("field rational\nrows 2 cols 2\n1 2 3\n4 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));

        let err = parse_matrix("field gf 7\nrows 1 cols 2\n1 9\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 3,
                col: 3,
                ..
            }
        ));

        assert!(parse_matrix("rows 1 cols 1\n5\n").is_err());
        assert!(parse_matrix("field rational\nrows 1 cols 1\n5\n6\n").is_err());
        assert!(parse_matrix("field rational\nrows 0 cols 1\n").is_err());
    }

    #[test]
    fn vector_round_trip() {
        let text = "field rational\nlen 2\n-4 9/2\n";
        let (field, v) = parse_vector(text).unwrap();
        assert!(field.is_rational());
        assert_eq!(print_vector(&v), text);

        assert!(parse_vector("field gf 5\nlen 2\n1 2 3\n").is_err());
        assert!(parse_vector("field gf 5\nlen 0\n\n").is_err());
    }

    #[test]
    fn trace_round_trip() {
        let a = crate::matrix::Matrix::from_i64_rows(
            q(),
            &[
                &[0, -3, -6, 4, 9],
                &[-1, -2, -1, 3, 1],
                &[-2, -3, 0, 3, -1],
                &[1, 4, 5, -9, -7],
            ],
        )
        .unwrap();
        let trace = row_reduce_ops(&a);
        let text = print_trace(&trace);
        assert_eq!(text.lines().count(), 15);
        assert_eq!(parse_trace(q(), 4, &text).unwrap(), trace);

        // Empty trace round-trips through the empty string.
        let empty = RowOpTrace::new(vec![], 3).unwrap();
        assert_eq!(print_trace(&empty), "");
        assert_eq!(parse_trace(q(), 3, "").unwrap(), empty);
    }

    #[test]
    fn trace_errors() {
        assert!(parse_trace(q(), 2, "scale 0 1\n").is_err());
        assert!(parse_trace(q(), 2, "addmul 1 0 0\n").is_err());
        assert!(parse_trace(q(), 2, "swap 0 5\n").is_err());
        assert!(parse_trace(q(), 2, "rotate 0 1\n").is_err());
        assert!(parse_trace(q(), 2, "scale 1\n").is_err());
        // Self-swaps parse fine.
        assert!(parse_trace(q(), 2, "swap 1 1\n").is_ok());
    }

    fn arb_matrix_text() -> impl Strategy<Value = Matrix> {
        (
            prop_oneof![Just(None), Just(Some(7u64)), Just(Some(13u64))],
            1usize..=4,
            1usize..=4,
        )
            .prop_flat_map(|(modulus, m, n)| {
                let field = match modulus {
                    None => FieldSpec::rational(),
                    Some(p) => FieldSpec::prime_field(p).unwrap(),
                };
                prop::collection::vec(prop::collection::vec(-9i64..=9, n), m).prop_map(
                    move |rows| {
                        let elems = rows
                            .iter()
                            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                            .collect();
                        Matrix::from_rows(field, elems).unwrap()
                    },
                )
            })
    }

    proptest! {
        #[test]
        fn printed_matrices_reparse_exactly(a in arb_matrix_text()) {
            prop_assert_eq!(parse_matrix(&print_matrix(&a)).unwrap(), a);
        }

        #[test]
        fn printed_traces_reparse_exactly(a in arb_matrix_text()) {
            let trace = row_reduce_ops(&a);
            let parsed = parse_trace(a.field(), a.nrows(), &print_trace(&trace)).unwrap();
            prop_assert_eq!(parsed, trace);
        }
    }
}
