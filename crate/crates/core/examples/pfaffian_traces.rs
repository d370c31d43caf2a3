// Pfaffian of an exact skew matrix three ways: the trace identity with the
// standard reference matrix J, congruence elimination, and matching sums.

use skewtrace::{pf_definition, pf_elimination, pfaffian, Rational, Scalar, SkewMatrix};

pub fn run_example() -> skewtrace::Result<()> {
    let a: SkewMatrix<Rational> =
        SkewMatrix::from_upper(6, |i, j| Rational::from_ratio((i * 7 + j * 3) as i64 % 11 - 5, (j + 1) as i64));
    println!("A =\n{}", a.as_matrix());

    let traces = pfaffian(&a)?;
    let elim = pf_elimination(&a)?;
    let definition = pf_definition(&a)?;
    println!("pf(A) by traces      = {}", traces.encode());
    println!("pf(A) by elimination = {} ({} swaps)", elim.value.encode(), elim.swap_count);
    println!("pf(A) by matchings   = {}", definition.encode());
    assert_eq!(traces, definition);
    assert_eq!(elim.value, definition);

    let j = SkewMatrix::<Rational>::standard(3);
    assert_eq!(pfaffian(&j)?, Rational::from_i64(1));
    println!("pf(J_6) = 1");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
