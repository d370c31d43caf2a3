// The seeded exact verification battery, on a small configuration.

use skewtrace::verify::{run_verify, VerifyConfig};

pub fn run_example() -> skewtrace::Result<()> {
    let config = VerifyConfig { max_dim: 6, trials: 5, seed: 42 };
    let report = run_verify(config);
    for case in &report.cases {
        println!("{:<24} dim {:>2}: {}/{}", case.check, case.dim, case.passed, case.trials);
    }
    assert!(report.all_passed());
    println!("all {} cases passed", report.cases.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
