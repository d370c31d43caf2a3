// Partition enumeration behind the trace sums, and complete Bell polynomials.

use skewtrace::{complete_bell, enumerate_diophantine, enumerate_shifted, partition_count, Rational, Scalar};

pub fn run_example() -> skewtrace::Result<()> {
    for m in [4, 10, 25] {
        println!("nu({m}) = {}", partition_count(m));
        assert_eq!(partition_count(m), enumerate_diophantine(m).len() as u128);
    }
    println!("nu(100) = {}", partition_count(100));

    println!("solutions of k_1 + 2 k_2 + 3 k_3 + 4 k_4 = 4:");
    for p in enumerate_diophantine(4) {
        println!("  {:?}", p.counts());
    }
    println!("solutions of s + k_1 + 2 k_2 = 3:");
    for (s, p) in enumerate_shifted(3) {
        println!("  s = {s}, k = {:?}", p.counts());
    }

    // B_n(1, ..., 1) are the Bell numbers
    let ones = vec![Rational::from_i64(1); 8];
    let bell = complete_bell(&ones);
    let shown: Vec<String> = bell.values().iter().map(Scalar::encode).collect();
    println!("Bell numbers: {}", shown.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
