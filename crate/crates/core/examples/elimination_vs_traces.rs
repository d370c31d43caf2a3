// Float-regime agreement between the cubic elimination and the quartic
// trace path on a moderately sized random skew matrix.

use std::time::Instant;

use skewtrace::bench::bench_input;
use skewtrace::identities::residual_tolerance;
use skewtrace::{pf_elimination, pfaffian};

pub fn run_example() -> skewtrace::Result<()> {
    let a = bench_input(48, 5);

    let start = Instant::now();
    let elim = pf_elimination(&a)?;
    let t_elim = start.elapsed();
    let start = Instant::now();
    let traces = pfaffian(&a)?;
    let t_traces = start.elapsed();

    println!("elimination: {:.12e} in {t_elim:?} (growth {:?})", elim.value, elim.growth);
    println!("traces:      {traces:.12e} in {t_traces:?}");
    let rel = (elim.value - traces).abs() / elim.value.abs().max(f64::MIN_POSITIVE);
    println!("relative difference {rel:.2e}");
    assert!(rel < 1e-6 * (1.0 + residual_tolerance(&[a.as_matrix()])));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
