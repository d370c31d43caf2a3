// The semi-characteristic polynomial of a skew pair: a degree-n polynomial
// annihilating AB whose square is the characteristic polynomial of AB.

use skewtrace::random::{random_skew, rng_for};
use skewtrace::{det_definition, pf_product, semichar_coeffs, semichar_residual, Rational, Scalar, SkewMatrix, SquareMatrix};

pub fn run_example() -> skewtrace::Result<()> {
    let mut rng = rng_for(7, 1);
    let a: SkewMatrix<Rational> = random_skew(&mut rng, 4);
    let b: SkewMatrix<Rational> = random_skew(&mut rng, 4);

    let p = semichar_coeffs(&a, &b)?;
    let shown: Vec<String> = p.coeffs().iter().map(Scalar::encode).collect();
    println!("p_2(lambda) coefficients (ascending): [{}]", shown.join(", "));
    assert_eq!(p.constant(), &pf_product(&a, &b)?);

    let residual = semichar_residual(&a, &b)?;
    assert!(residual.is_zero());
    println!("p_2(AB) = 0");

    let ab = a.mul(&b);
    for k in -2..=2 {
        let lambda = Rational::from_i64(k);
        let shifted = ab.sub(&SquareMatrix::scalar_multiple_of_identity(4, &lambda))?;
        let lhs = det_definition(&shifted)?;
        let rhs = p.eval(&lambda) * p.eval(&lambda);
        assert_eq!(lhs, rhs);
        println!("det(AB - {k} I) = {lhs} = p_2({k})^2");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
