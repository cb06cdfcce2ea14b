//! Shared helpers for the integration suites: seeded random generators
//! and an independent determinant oracle.

use echelon::{FieldElement, FieldSpec, Matrix};
use rand::rngs::StdRng;
use rand::Rng;

pub fn rational() -> FieldSpec {
    FieldSpec::rational()
}

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime_field(p).unwrap()
}

/// Random element: an integer in [-9, 9] over the rationals, a uniform
/// residue over GF(p).
pub fn random_element(rng: &mut StdRng, field: FieldSpec) -> FieldElement {
    match field.modulus() {
        None => field.from_i64(rng.gen_range(-9..=9)),
        Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

pub fn random_vector(rng: &mut StdRng, field: FieldSpec, n: usize) -> Vec<FieldElement> {
    (0..n).map(|_| random_element(rng, field)).collect()
}

pub fn random_matrix(rng: &mut StdRng, field: FieldSpec, m: usize, n: usize) -> Matrix {
    let rows = (0..m).map(|_| random_vector(rng, field, n)).collect();
    Matrix::from_rows(field, rows).expect("random matrices are well formed")
}

/// Independent determinant oracle: the signed sum over all n!
/// permutations of products of entries. No elimination, no shared code
/// with the production path. Exponential, so keep n small.
pub fn det_oracle(a: &Matrix) -> FieldElement {
    assert!(a.is_square(), "oracle needs a square matrix");
    let n = a.nrows();
    let field = a.field();
    let mut total = field.zero();
    let mut perm: Vec<usize> = (0..n).collect();
    visit_permutations(&mut perm, 0, false, &mut |perm, odd| {
        let mut term = field.one();
        for (i, &j) in perm.iter().enumerate() {
            term = &term * a.entry(i, j);
        }
        if odd {
            term = -&term;
        }
        total = &total + &term;
    });
    total
}

fn visit_permutations(
    perm: &mut Vec<usize>,
    k: usize,
    odd: bool,
    visit: &mut impl FnMut(&[usize], bool),
) {
    if k == perm.len() {
        visit(perm, odd);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        visit_permutations(perm, k + 1, odd ^ (i != k), visit);
        perm.swap(k, i);
    }
}
