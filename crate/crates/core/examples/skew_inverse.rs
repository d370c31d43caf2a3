// `pf(A) pf(B) A^-1` as a polynomial of degree n-1 in `BA`, and
// `pf(A) pf(B) (AB)^-1` as a polynomial in `AB`.

use skewtrace::random::{random_skew, rng_for};
use skewtrace::{
    pf_adjugate_definition, pf_product, product_inverse_expansion, product_inverse_scaled,
    skew_inverse_scaled, Rational, SkewMatrix, SquareMatrix,
};

pub fn run_example() -> skewtrace::Result<()> {
    let mut rng = rng_for(2024, 0);
    let a: SkewMatrix<Rational> = random_skew(&mut rng, 6);
    let j = SkewMatrix::<Rational>::standard(3);

    let pf = pf_product(&a, &j)?;
    let scaled = skew_inverse_scaled(&a, &j)?;
    assert_eq!(a.mul(&scaled), SquareMatrix::scalar_multiple_of_identity(6, &pf));
    // pf(J) = 1, so this is the Pfaffian adjugate of A
    assert_eq!(scaled, pf_adjugate_definition(&a)?);
    println!("pf(A) = {pf}");
    println!("pf(A) A^-1 =\n{scaled}");

    let b: SkewMatrix<Rational> = random_skew(&mut rng, 6);
    let poly = product_inverse_expansion(&a, &b)?;
    println!("(AB)^-1 expansion uses powers of AB up to {}", poly.max_power());
    let scaled = product_inverse_scaled(&a, &b)?;
    let pf_ab = pf_product(&a, &b)?;
    assert_eq!(a.mul(&b).mul(&scaled), SquareMatrix::scalar_multiple_of_identity(6, &pf_ab));
    println!("pf(A) pf(B) = {pf_ab}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
