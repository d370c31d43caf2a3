// pf(AB) pf(C) = pf(A) pf(BC) for anticommuting skew matrices, on the
// Dirac matrices A = gamma^1, B = gamma^1 gamma^3, C = gamma^3.

use skewtrace::{check_skew, pf_triple_identity_check, pfaffian, Rational, SkewMatrix, SquareMatrix};

pub fn run_example() -> skewtrace::Result<()> {
    let g1: SquareMatrix<Rational> =
        SquareMatrix::from_i64_rows([[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]]);
    let g3: SquareMatrix<Rational> =
        SquareMatrix::from_i64_rows([[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]]);
    let a = check_skew(g1.clone())?;
    let b = check_skew(g1.mul(&g3))?;
    let c = check_skew(g3)?;
    println!("B = gamma^1 gamma^3 =\n{}", b.as_matrix());

    let ab: SkewMatrix<Rational> = check_skew(a.mul(&b))?;
    let bc: SkewMatrix<Rational> = check_skew(b.mul(&c))?;
    for (name, m) in [("A", &a), ("B", &b), ("C", &c), ("AB", &ab), ("BC", &bc)] {
        println!("pf({name}) = {}", pfaffian(m)?);
    }
    assert!(pf_triple_identity_check(&a, &b, &c)?);
    println!("pf(AB) pf(C) = pf(A) pf(BC) holds");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
