// Median timings and log-log slopes for the elimination and trace paths.
// Pass `--full` for the dimensions used by the acceptance suite.

use skewtrace::bench::{bench_suite, BenchConfig, BenchMethod};

pub fn run_example() -> skewtrace::Result<()> {
    let full = std::env::args().any(|a| a == "--full");
    let runs = if full {
        vec![(BenchMethod::Elimination, vec![64, 128, 256, 512]), (BenchMethod::Traces, vec![32, 64, 128, 256])]
    } else {
        vec![(BenchMethod::Elimination, vec![16, 32, 64]), (BenchMethod::Traces, vec![8, 16, 32])]
    };
    for (method, dims) in runs {
        let report = bench_suite(&BenchConfig { dims, methods: vec![method], repeat: 3, seed: 42 })?;
        for row in &report.rows {
            println!("{:<12} n = {:>4}: {:>10.4} ms", method, row.dim, row.median_ms);
        }
        match report.slopes[0].slope {
            Some(s) => println!("{method}: slope {s:.2}"),
            None => println!("{method}: slope undefined"),
        }
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
