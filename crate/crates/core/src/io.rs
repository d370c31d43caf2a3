//! JSON matrix files.
//!
//! ```json
//! {"dim": 2, "scalar_mode": "rational", "entries": ["0", "1", "-1", "0"]}
//! ```
//!
//! Entries are row-major. Rationals are strings `"p/q"` or `"p"`; floats are
//! JSON numbers (strings holding a decimal literal are accepted too). When
//! `scalar_mode` is omitted the mode comes from `SKEWTRACE_SCALAR_MODE`,
//! falling back to `rational`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::{Rational, Scalar, ScalarMode};

pub const SCALAR_MODE_ENV: &str = "SKEWTRACE_SCALAR_MODE";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar_mode: Option<ScalarMode>,
    pub entries: Vec<Value>,
}

/// A parsed matrix in whichever regime its file declared.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Rational(SquareMatrix<Rational>),
    F64(SquareMatrix<f64>),
}

impl AnyMatrix {
    pub fn mode(&self) -> ScalarMode {
        match self {
            AnyMatrix::Rational(_) => ScalarMode::Rational,
            AnyMatrix::F64(_) => ScalarMode::F64,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyMatrix::Rational(m) => m.dim(),
            AnyMatrix::F64(m) => m.dim(),
        }
    }
}

/// Default mode from the environment, `rational` when unset.
pub fn default_scalar_mode() -> Result<ScalarMode> {
    match std::env::var(SCALAR_MODE_ENV) {
        Ok(v) if !v.trim().is_empty() => v.parse(),
        _ => Ok(ScalarMode::Rational),
    }
}

pub fn parse_matrix(text: &str) -> Result<AnyMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    let mode = match file.scalar_mode {
        Some(m) => m,
        None => default_scalar_mode()?,
    };
    match mode {
        ScalarMode::Rational => decode_entries(&file).map(AnyMatrix::Rational),
        ScalarMode::F64 => decode_entries(&file).map(AnyMatrix::F64),
    }
}

pub fn read_matrix(path: &Path) -> Result<AnyMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| match e {
        Error::Parse { position, message } => Error::Parse {
            position: format!("{}: {position}", path.display()),
            message,
        },
        other => other,
    })
}

fn decode_entries<S: Scalar>(file: &MatrixFile) -> Result<SquareMatrix<S>> {
    if file.dim == 0 {
        return Err(Error::InvalidDimension(0));
    }
    let expected = file.dim * file.dim;
    if file.entries.len() != expected {
        return Err(Error::DimensionMismatch {
            left: expected,
            right: file.entries.len(),
        });
    }
    let entries = file
        .entries
        .iter()
        .enumerate()
        .map(|(idx, v)| {
            let position = format!("entry {idx} (row {}, column {})", idx / file.dim, idx % file.dim);
            decode_value::<S>(v).map_err(|msg| Error::parse(position, msg))
        })
        .collect::<Result<Vec<S>>>()?;
    SquareMatrix::new(file.dim, entries)
}

fn decode_value<S: Scalar>(v: &Value) -> std::result::Result<S, String> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if !S::is_exact() => n.to_string(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        other => {
            return Err(format!(
                "expected a {} entry, found {other}",
                if S::is_exact() { "string or integer" } else { "number" }
            ))
        }
    };
    S::decode(&text).map_err(|e| match e {
        Error::Parse { message, .. } => format!("{message} in {text:?}"),
        other => other.to_string(),
    })
}

pub fn to_matrix_file<S: Scalar>(m: &SquareMatrix<S>) -> MatrixFile {
    let entries = m
        .entries()
        .iter()
        .map(|v| {
            let text = v.encode();
            if S::is_exact() {
                Value::String(text)
            } else {
                serde_json::from_str::<Value>(&text).unwrap_or(Value::String(text))
            }
        })
        .collect();
    MatrixFile {
        dim: m.dim(),
        scalar_mode: Some(S::MODE),
        entries,
    }
}

pub fn serialize_matrix<S: Scalar>(m: &SquareMatrix<S>) -> String {
    serde_json::to_string(&to_matrix_file(m)).expect("matrix file serializes")
}

pub fn write_matrix<S: Scalar>(path: &Path, m: &SquareMatrix<S>) -> Result<()> {
    std::fs::write(path, serialize_matrix(m) + "\n")
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
