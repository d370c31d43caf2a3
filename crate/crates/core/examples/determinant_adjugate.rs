// Determinant, adjugate and inverse of a general matrix from traces of its
// powers. The adjugate stays well defined when the matrix is singular.

use skewtrace::{
    adjugate_definition, adjugate_expansion, adjugate_via_bell, det_definition, det_via_bell,
    det_via_partitions, inverse_via_bell, Error, Rational, Scalar, SquareMatrix,
};

pub fn run_example() -> skewtrace::Result<()> {
    let c: SquareMatrix<Rational> = SquareMatrix::from_i64_rows([[2, -1, 0, 3], [1, 4, -2, 0], [0, 1, 1, -1], [5, 0, 2, 1]]);
    let det = det_via_bell(&c);
    println!("det(C) = {} (partitions: {}, definition: {})", det, det_via_partitions(&c), det_definition(&c)?);
    assert_eq!(det, det_definition(&c)?);

    let poly = adjugate_expansion(&c);
    let coeffs: Vec<String> = poly.coeffs().iter().map(Scalar::encode).collect();
    println!("adj(C) = sum_p a_p C^p with a = [{}]", coeffs.join(", "));

    let inv = inverse_via_bell(&c)?;
    assert_eq!(c.mul(&inv), SquareMatrix::identity(4));
    println!("C^-1 =\n{inv}");

    // rank 2: third row is the sum of the first two
    let s: SquareMatrix<Rational> = SquareMatrix::from_i64_rows([[1, 2, 3], [0, 1, 4], [1, 3, 7]]);
    let adj = adjugate_via_bell(&s);
    assert_eq!(adj, adjugate_definition(&s)?);
    assert!(s.mul(&adj).is_zero());
    println!("singular S: adj(S) =\n{adj}");
    assert_eq!(inverse_via_bell(&s), Err(Error::SingularMatrix));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
