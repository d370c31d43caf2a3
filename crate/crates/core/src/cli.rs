//! Command-line front end. Results go to the output stream as one JSON
//! record per line; diagnostics go to the error stream.
//!
//! Exit codes: 0 success, 1 mathematical error (odd dimension, singular
//! matrix, failed verification), 2 usage or parse error.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::bench::{bench_suite, BenchConfig, BenchMethod};
use crate::elimination::{lu_det_inverse, pf_elimination};
use crate::error::{Error, Result};
use crate::identities::{
    det_via_bell, inverse_via_bell, pf_product, pfaffian, semichar_coeffs, semichar_residual,
    skew_inverse_scaled,
};
use crate::io::{read_matrix, AnyMatrix};
use crate::matrix::{check_skew, SkewMatrix, SquareMatrix};
use crate::oracle::{det_definition, pf_definition};
use crate::scalar::{Scalar, ScalarMode};
use crate::verify::{run_verify, VerifyConfig};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "skewtrace", version, about = "Trace identities for skew-symmetric matrices")]
struct Cli {
    /// Add wall-clock runtime to each record (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PfMethod {
    Traces,
    Elimination,
    Definition,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DetMethod {
    Bell,
    Lu,
    Definition,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InvMethod {
    Bell,
    Lu,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pfaffian of a skew-symmetric matrix.
    Pf {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "traces")]
        method: PfMethod,
    },
    /// Determinant of a square matrix.
    Det {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "bell")]
        method: DetMethod,
    },
    /// Inverse of a square matrix.
    Inv {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "bell")]
        method: InvMethod,
    },
    /// pf(A) pf(B) from traces of powers of AB.
    Pfprod {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// pf(A) pf(B) A^-1 as a polynomial in BA.
    Skewinv {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Semi-characteristic polynomial coefficients and the residual p_n(AB).
    Semichar {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Seeded exact verification battery.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_dim: usize,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Float-regime timing with log-log slope fits.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "traces,elimination")]
        method: Vec<String>,
        #[arg(long, default_value_t = 5)]
        repeat: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

/// One line of machine-readable output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar_mode: Option<ScalarMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: String,
}

impl ResultRecord {
    fn new(command: &str) -> Self {
        ResultRecord {
            command: command.to_string(),
            method: None,
            scalar_mode: None,
            value: None,
            extra: Map::new(),
            runtime_ms: None,
            seed: None,
            version: VERSION.to_string(),
        }
    }

    fn method(mut self, method: &str) -> Self {
        self.method = Some(method.to_string());
        self
    }

    fn mode(mut self, mode: ScalarMode) -> Self {
        self.scalar_mode = Some(mode);
        self
    }

    fn value(mut self, value: Value) -> Self {
        self.value = Some(value);
        self
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }
}

pub fn scalar_value<S: Scalar>(v: &S) -> Value {
    Value::String(v.encode())
}

pub fn matrix_value<S: Scalar>(m: &SquareMatrix<S>) -> Value {
    Value::Array(
        m.rows()
            .map(|r| Value::Array(r.iter().map(scalar_value).collect()))
            .collect(),
    )
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let timing = cli.timing;
    let start = Instant::now();
    match execute(cli.command) {
        Ok((records, success)) => {
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            for mut record in records {
                if timing && record.runtime_ms.is_none() {
                    record.runtime_ms = Some(elapsed);
                }
                let line = serde_json::to_string(&record).expect("record serializes");
                if writeln!(out, "{line}").is_err() {
                    return 2;
                }
            }
            if success {
                0
            } else {
                let _ = writeln!(err, "error: verification failed");
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

type Outcome = Result<(Vec<ResultRecord>, bool)>;

fn single(record: ResultRecord) -> Outcome {
    Ok((vec![record], true))
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Pf { input, method } => match read_matrix(&input)? {
            AnyMatrix::Rational(m) => pf_cmd(m, method),
            AnyMatrix::F64(m) => pf_cmd(m, method),
        },
        Command::Det { input, method } => match read_matrix(&input)? {
            AnyMatrix::Rational(m) => det_cmd(m, method),
            AnyMatrix::F64(m) => det_cmd(m, method),
        },
        Command::Inv { input, method } => match read_matrix(&input)? {
            AnyMatrix::Rational(m) => inv_cmd(m, method),
            AnyMatrix::F64(m) => inv_cmd(m, method),
        },
        Command::Pfprod { a, b } => pair(&a, &b, "pfprod"),
        Command::Skewinv { a, b } => pair(&a, &b, "skewinv"),
        Command::Semichar { a, b } => pair(&a, &b, "semichar"),
        Command::Verify {
            max_dim,
            trials,
            seed,
        } => verify_cmd(VerifyConfig {
            max_dim,
            trials,
            seed,
        }),
        Command::Bench {
            dims,
            method,
            repeat,
            seed,
        } => {
            let methods = method
                .iter()
                .map(|m| m.parse())
                .collect::<Result<Vec<BenchMethod>>>()?;
            bench_cmd(BenchConfig {
                dims,
                methods,
                repeat,
                seed,
            })
        }
    }
}

fn pf_cmd<S: Scalar>(m: SquareMatrix<S>, method: PfMethod) -> Outcome {
    let a = check_skew(m)?;
    let record = ResultRecord::new("pf").mode(S::MODE);
    let record = match method {
        PfMethod::Traces => record.method("traces").value(scalar_value(&pfaffian(&a)?)),
        PfMethod::Definition => record.method("definition").value(scalar_value(&pf_definition(&a)?)),
        PfMethod::Elimination => {
            let report = pf_elimination(&a)?;
            let mut r = record
                .method("elimination")
                .value(scalar_value(&report.value))
                .with("swap_count", report.swap_count.into())
                .with("pivot_sign", report.pivot_sign.into());
            if let Some(g) = report.growth {
                r = r.with("growth", g.into());
            }
            r
        }
    };
    single(record)
}

fn det_cmd<S: Scalar>(m: SquareMatrix<S>, method: DetMethod) -> Outcome {
    let record = ResultRecord::new("det").mode(S::MODE);
    let (name, value) = match method {
        DetMethod::Bell => ("bell", det_via_bell(&m)),
        DetMethod::Lu => ("lu", lu_det_inverse(&m).det),
        DetMethod::Definition => ("definition", det_definition(&m)?),
    };
    single(record.method(name).value(scalar_value(&value)))
}

fn inv_cmd<S: Scalar>(m: SquareMatrix<S>, method: InvMethod) -> Outcome {
    let record = ResultRecord::new("inv").mode(S::MODE);
    let (name, inv) = match method {
        InvMethod::Bell => ("bell", inverse_via_bell(&m)?),
        InvMethod::Lu => ("lu", lu_det_inverse(&m).into_inverse()?),
    };
    single(record.method(name).value(matrix_value(&inv)))
}

fn pair(a: &std::path::Path, b: &std::path::Path, command: &str) -> Outcome {
    match (read_matrix(a)?, read_matrix(b)?) {
        (AnyMatrix::Rational(a), AnyMatrix::Rational(b)) => pair_cmd(a, b, command),
        (AnyMatrix::F64(a), AnyMatrix::F64(b)) => pair_cmd(a, b, command),
        _ => Err(Error::parse("--b", "scalar modes of --a and --b differ")),
    }
}

fn pair_cmd<S: Scalar>(a: SquareMatrix<S>, b: SquareMatrix<S>, command: &str) -> Outcome {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let a: SkewMatrix<S> = check_skew(a)?;
    let b: SkewMatrix<S> = check_skew(b)?;
    let record = ResultRecord::new(command).mode(S::MODE).method("traces");
    let record = match command {
        "pfprod" => record.value(scalar_value(&pf_product(&a, &b)?)),
        "skewinv" => record.value(matrix_value(&skew_inverse_scaled(&a, &b)?)),
        "semichar" => {
            let poly = semichar_coeffs(&a, &b)?;
            let residual = semichar_residual(&a, &b)?;
            record
                .value(Value::Array(poly.coeffs().iter().map(scalar_value).collect()))
                .with("residual_max", scalar_value(&residual.max_abs()))
        }
        other => unreachable!("unknown pair command {other}"),
    };
    single(record)
}

fn verify_cmd(config: VerifyConfig) -> Outcome {
    if config.trials == 0 {
        return Err(Error::parse("--trials", "trials must be positive"));
    }
    let report = run_verify(config);
    let mut records: Vec<ResultRecord> = report
        .cases
        .iter()
        .map(|case| {
            let mut r = ResultRecord::new("verify")
                .mode(ScalarMode::Rational)
                .with("check", case.check.into())
                .with("dim", case.dim.into())
                .with("trials", case.trials.into())
                .with("passed", case.passed.into())
                .with("ok", case.ok().into());
            if let Some(f) = &case.first_failure {
                r = r.with("first_failure", f.clone().into());
            }
            r.seed = Some(config.seed);
            r
        })
        .collect();
    let all = report.all_passed();
    let mut summary = ResultRecord::new("verify")
        .mode(ScalarMode::Rational)
        .with("max_dim", config.max_dim.into())
        .with("cases", report.cases.len().into())
        .with("all_passed", all.into());
    summary.seed = Some(config.seed);
    records.push(summary);
    Ok((records, all))
}

fn bench_cmd(config: BenchConfig) -> Outcome {
    let report = bench_suite(&config)?;
    let mut records: Vec<ResultRecord> = report
        .rows
        .iter()
        .map(|row| {
            let mut r = ResultRecord::new("bench")
                .mode(ScalarMode::F64)
                .method(row.method.as_str())
                .with("dim", row.dim.into())
                .with("inner_iterations", row.inner_iterations.into());
            r.runtime_ms = Some(row.median_ms);
            r.seed = Some(config.seed);
            r
        })
        .collect();
    for slope in &report.slopes {
        let mut r = ResultRecord::new("bench")
            .mode(ScalarMode::F64)
            .method(slope.method.as_str())
            .with("slope", slope.slope.map_or(Value::Null, Value::from));
        r.seed = Some(config.seed);
        records.push(r);
    }
    Ok((records, true))
}
