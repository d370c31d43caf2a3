//! Wall-clock scaling measurements in the float regime.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::elimination::{lu_det_inverse, pf_elimination};
use crate::error::{Error, Result};
use crate::identities::{det_via_bell, pfaffian};
use crate::matrix::SkewMatrix;
use crate::oracle::{pf_definition_capped, OracleCaps};
use crate::random::{random_skew, rng_for};

/// Every timed sample runs the kernel often enough to last at least this long.
const MIN_SAMPLE: Duration = Duration::from_millis(20);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchMethod {
    /// Pfaffian through the trace/Bell identity, `O(n^4)`.
    Traces,
    /// Pfaffian by congruence elimination, `O(n^3)`.
    Elimination,
    /// Pfaffian by perfect-matching enumeration.
    Definition,
    /// Determinant through the trace/Bell identity.
    BellDet,
    /// Determinant and inverse by LU.
    Lu,
}

impl BenchMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            BenchMethod::Traces => "traces",
            BenchMethod::Elimination => "elimination",
            BenchMethod::Definition => "definition",
            BenchMethod::BellDet => "bell-det",
            BenchMethod::Lu => "lu",
        }
    }
}

impl FromStr for BenchMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "traces" => Ok(BenchMethod::Traces),
            "elimination" => Ok(BenchMethod::Elimination),
            "definition" => Ok(BenchMethod::Definition),
            "bell-det" => Ok(BenchMethod::BellDet),
            "lu" => Ok(BenchMethod::Lu),
            other => Err(Error::parse("--method", format!("unknown bench method {other:?}"))),
        }
    }
}

impl fmt::Display for BenchMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub dim: usize,
    pub method: BenchMethod,
    pub median_ms: f64,
    pub samples: usize,
    pub inner_iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchSlope {
    pub method: BenchMethod,
    /// Least-squares slope of `ln(time)` against `ln(dim)`; absent for a single dim.
    pub slope: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub slopes: Vec<BenchSlope>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub dims: Vec<usize>,
    pub methods: Vec<BenchMethod>,
    pub repeat: usize,
    pub seed: u64,
}

/// Least-squares slope through `(x, y)`; `None` with fewer than two distinct `x`.
pub fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

/// Log-log slope of `(dim, time)` pairs.
pub fn fit_loglog(rows: &[(usize, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows.iter().map(|&(d, t)| ((d as f64).ln(), t.ln())).collect();
    fit_slope(&pts)
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.partial_cmp(b).expect("finite timings"));
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        0.5 * (xs[mid - 1] + xs[mid])
    }
}

fn run_once(method: BenchMethod, a: &SkewMatrix<f64>) -> Result<f64> {
    Ok(match method {
        BenchMethod::Traces => pfaffian(a)?,
        BenchMethod::Elimination => pf_elimination(a)?.value,
        BenchMethod::Definition => pf_definition_capped(a, OracleCaps::UNCAPPED)?,
        BenchMethod::BellDet => det_via_bell(a.as_matrix()),
        BenchMethod::Lu => lu_det_inverse(a.as_matrix()).det,
    })
}

/// Times one method at one dimension: median over `repeat` samples, each
/// sample averaging enough back-to-back runs to last [`MIN_SAMPLE`].
pub fn time_method(method: BenchMethod, dim: usize, repeat: usize, seed: u64) -> Result<BenchRow> {
    let a = bench_input(dim, seed);
    let start = Instant::now();
    std::hint::black_box(run_once(method, &a)?);
    let first = start.elapsed().max(Duration::from_nanos(1));
    let inner = ((MIN_SAMPLE.as_secs_f64() / first.as_secs_f64()).ceil() as usize).max(1);
    let mut samples = Vec::with_capacity(repeat);
    for _ in 0..repeat {
        let start = Instant::now();
        for _ in 0..inner {
            std::hint::black_box(run_once(method, std::hint::black_box(&a))?);
        }
        samples.push(start.elapsed().as_secs_f64() * 1e3 / inner as f64);
    }
    Ok(BenchRow {
        dim,
        method,
        median_ms: median(samples),
        samples: repeat,
        inner_iterations: inner,
    })
}

/// Seeded float skew input, scaled by `1/sqrt(dim)` so high powers stay finite.
pub fn bench_input(dim: usize, seed: u64) -> SkewMatrix<f64> {
    let a: SkewMatrix<f64> = random_skew(&mut rng_for(seed, dim as u64), dim);
    a.scale(&(1.0 / (dim as f64).sqrt()))
}

pub fn bench_suite(config: &BenchConfig) -> Result<BenchReport> {
    if config.repeat < 3 {
        return Err(Error::parse("--repeat", "repeat must be at least 3"));
    }
    if config.dims.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::parse("--dims", "dims must be strictly ascending"));
    }
    if let Some(&odd) = config.dims.iter().find(|d| *d % 2 == 1 || **d == 0) {
        return Err(Error::OddDimension(odd));
    }
    let mut rows = Vec::new();
    let mut slopes = Vec::new();
    for &method in &config.methods {
        let mut points = Vec::new();
        for &dim in &config.dims {
            let row = time_method(method, dim, config.repeat, config.seed)?;
            points.push((dim, row.median_ms));
            rows.push(row);
        }
        slopes.push(BenchSlope {
            method,
            slope: fit_loglog(&points),
        });
    }
    Ok(BenchReport { rows, slopes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_exact_power_law() {
        let rows: Vec<(usize, f64)> = [8usize, 16, 32, 64]
            .iter()
            .map(|&d| (d, 1e-6 * (d as f64).powi(3)))
            .collect();
        assert!((fit_loglog(&rows).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn single_dim_has_no_slope() {
        assert_eq!(fit_loglog(&[(64, 1.0)]), None);
    }

    #[test]
    fn median_of_even_and_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn suite_validates_config() {
        let bad = BenchConfig {
            dims: vec![8, 4],
            methods: vec![BenchMethod::Elimination],
            repeat: 3,
            seed: 1,
        };
        assert!(bench_suite(&bad).is_err());
        let few = BenchConfig {
            dims: vec![4],
            methods: vec![BenchMethod::Elimination],
            repeat: 2,
            seed: 1,
        };
        assert!(bench_suite(&few).is_err());
    }

    #[test]
    fn tiny_suite_runs() {
        let config = BenchConfig {
            dims: vec![4],
            methods: vec![BenchMethod::Elimination, BenchMethod::Traces],
            repeat: 3,
            seed: 1,
        };
        let report = bench_suite(&config).unwrap();
        assert_eq!(report.rows.len(), 2);
        assert!(report.slopes.iter().all(|s| s.slope.is_none()));
    }
}
