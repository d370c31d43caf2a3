//! Dense square matrices, the skew-symmetric wrapper and trace powers.

use std::fmt;
use std::ops::{Deref, Index, IndexMut};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Entrywise skew-symmetry tolerance in the float regime, relative to the
/// largest entry magnitude.
pub const SKEW_TOLERANCE: f64 = 1e-12;

/// Dense `n x n` matrix stored row-major, `n >= 1`.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> SquareMatrix<S> {
    pub fn new(dim: usize, entries: Vec<S>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(0));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: dim * dim,
                right: entries.len(),
            });
        }
        Ok(SquareMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(dim, entries)
    }

    /// Builds a matrix from small integers; handy for fixtures.
    pub fn from_i64_rows<const N: usize>(rows: [[i64; N]; N]) -> Self {
        let entries = rows.iter().flatten().map(|&v| S::from_i64(v)).collect();
        SquareMatrix { dim: N, entries }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| S::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn scalar_multiple_of_identity(dim: usize, value: &S) -> Self {
        Self::from_fn(dim, |i, j| if i == j { value.clone() } else { S::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, factor: &S) -> Self {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|v| v.clone() * factor.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    /// `self += factor * other`, dimensions assumed equal.
    pub(crate) fn add_scaled_assign(&mut self, other: &Self, factor: &S) {
        debug_assert_eq!(self.dim, other.dim);
        if factor.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            a.mul_add_assign(factor, b);
        }
    }

    pub fn trace(&self) -> S {
        (0..self.dim).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Largest entry magnitude.
    pub fn max_magnitude(&self) -> f64 {
        self.entries.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    /// Largest entry of `|self|` as a scalar, exact in the rational regime.
    pub fn max_abs(&self) -> S {
        self.entries.iter().map(Scalar::abs).fold(S::zero(), |best, v| if v > best { v } else { best })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Entrywise comparison through [`Scalar::approx_eq`].
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim == other.dim
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a.approx_eq(b, tol))
    }

    /// Deletes the given rows and columns (sorted or not).
    pub fn minor(&self, drop_rows: &[usize], drop_cols: &[usize]) -> Option<Self> {
        let rows: Vec<usize> = (0..self.dim).filter(|i| !drop_rows.contains(i)).collect();
        let cols: Vec<usize> = (0..self.dim).filter(|j| !drop_cols.contains(j)).collect();
        if rows.is_empty() || rows.len() != cols.len() {
            return None;
        }
        Some(Self::from_fn(rows.len(), |i, j| self[(rows[i], cols[j])].clone()))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.dim {
            self.entries.swap(a * self.dim + j, b * self.dim + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.dim {
            self.entries.swap(i * self.dim + a, i * self.dim + b);
        }
    }

    /// Block-diagonal matrix with `blocks` on the diagonal.
    pub fn block_diagonal(blocks: &[SquareMatrix<S>]) -> Self {
        let dim: usize = blocks.iter().map(|b| b.dim).sum();
        let mut out = Self::zeros(dim);
        let mut offset = 0;
        for block in blocks {
            for i in 0..block.dim {
                for j in 0..block.dim {
                    out[(offset + i, offset + j)] = block[(i, j)].clone();
                }
            }
            offset += block.dim;
        }
        out
    }
}

impl<S: Scalar> Index<(usize, usize)> for SquareMatrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.entries[i * self.dim + j]
    }
}

impl<S: Scalar> IndexMut<(usize, usize)> for SquareMatrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.entries[i * self.dim + j]
    }
}

impl<S: Scalar> fmt::Debug for SquareMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(Scalar::encode).collect())
            .collect();
        f.debug_struct("SquareMatrix").field("dim", &self.dim).field("rows", &rows).finish()
    }
}

impl<S: Scalar> fmt::Display for SquareMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(Scalar::encode).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Standard matrix product `x * y`.
pub fn mat_mul<S: Scalar>(x: &SquareMatrix<S>, y: &SquareMatrix<S>) -> Result<SquareMatrix<S>> {
    x.check_same_dim(y)?;
    Ok(mul_unchecked(x, y))
}

pub(crate) fn mul_unchecked<S: Scalar>(x: &SquareMatrix<S>, y: &SquareMatrix<S>) -> SquareMatrix<S> {
    let n = x.dim;
    let mut out = vec![S::zero(); n * n];
    for (out_row, x_row) in out.chunks_mut(n).zip(x.entries.chunks(n)) {
        for (a, y_row) in x_row.iter().zip(y.entries.chunks(n)) {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out_row.iter_mut().zip(y_row) {
                o.mul_add_assign(a, b);
            }
        }
    }
    SquareMatrix { dim: n, entries: out }
}

impl<S: Scalar> SquareMatrix<S> {
    /// `self * other`, panicking on a dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        mul_unchecked(self, other)
    }
}

/// A square matrix verified to satisfy `A^T = -A`.
#[derive(Clone, PartialEq)]
pub struct SkewMatrix<S> {
    inner: SquareMatrix<S>,
}

/// Wraps `x` if it is skew-symmetric: literally in the exact regime, within
/// [`SKEW_TOLERANCE`] relative to the largest entry for floats.
pub fn check_skew<S: Scalar>(x: SquareMatrix<S>) -> Result<SkewMatrix<S>> {
    let tol = SKEW_TOLERANCE * x.max_magnitude();
    let n = x.dim;
    for i in 0..n {
        for j in 0..=i {
            let sum = x[(i, j)].clone() + x[(j, i)].clone();
            if !sum.is_negligible(tol) {
                return Err(Error::NotSkew { row: i, col: j });
            }
        }
    }
    Ok(SkewMatrix { inner: x })
}

impl<S: Scalar> SkewMatrix<S> {
    pub fn new(x: SquareMatrix<S>) -> Result<Self> {
        check_skew(x)
    }

    /// `(x - x^T) / 2`, skew by construction.
    pub fn skew_part(x: &SquareMatrix<S>) -> Self {
        let half = S::from_ratio(1, 2);
        let inner = SquareMatrix::from_fn(x.dim, |i, j| {
            (x[(i, j)].clone() - x[(j, i)].clone()) * half.clone()
        });
        SkewMatrix { inner }
    }

    /// Builds a skew matrix from its strictly upper triangle, supplied row by row.
    pub fn from_upper(dim: usize, mut upper: impl FnMut(usize, usize) -> S) -> Self {
        let mut inner = SquareMatrix::zeros(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let v = upper(i, j);
                inner[(j, i)] = -v.clone();
                inner[(i, j)] = v;
            }
        }
        SkewMatrix { inner }
    }

    /// The block-diagonal reference matrix `diag([[0,1],[-1,0]], ...)` of
    /// dimension `2 * half_dim`. Its Pfaffian is 1 and its inverse is `-J`.
    pub fn standard(half_dim: usize) -> Self {
        assert!(half_dim > 0, "reference matrix needs a positive half dimension");
        Self::from_upper(2 * half_dim, |i, j| {
            if i % 2 == 0 && j == i + 1 {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    pub fn as_matrix(&self) -> &SquareMatrix<S> {
        &self.inner
    }

    pub fn into_matrix(self) -> SquareMatrix<S> {
        self.inner
    }

    /// `n` where the dimension is `2n`, or `OddDimension`.
    pub fn half_dim(&self) -> Result<usize> {
        if self.inner.dim % 2 == 1 {
            Err(Error::OddDimension(self.inner.dim))
        } else {
            Ok(self.inner.dim / 2)
        }
    }

    pub fn scale(&self, factor: &S) -> Self {
        SkewMatrix {
            inner: self.inner.scale(factor),
        }
    }

    /// `B A B^T`, which stays skew-symmetric.
    pub fn congruence(&self, b: &SquareMatrix<S>) -> Result<Self> {
        let inner = mat_mul(&mat_mul(b, &self.inner)?, &b.transpose())?;
        Ok(SkewMatrix { inner })
    }
}

impl<S> Deref for SkewMatrix<S> {
    type Target = SquareMatrix<S>;

    fn deref(&self) -> &SquareMatrix<S> {
        &self.inner
    }
}

impl<S: Scalar> fmt::Debug for SkewMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("SkewMatrix").field(&self.inner).finish()
    }
}

/// `(tr M, tr M^2, ..., tr M^L)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceVector<S> {
    traces: Vec<S>,
}

impl<S: Scalar> TraceVector<S> {
    pub fn len(&self) -> usize {
        self.traces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traces.is_empty()
    }

    /// `tr(M^power)`, `power` counted from 1.
    pub fn get(&self, power: usize) -> &S {
        &self.traces[power - 1]
    }

    pub fn as_slice(&self) -> &[S] {
        &self.traces
    }

    pub fn from_slice(traces: &[S]) -> Self {
        TraceVector {
            traces: traces.to_vec(),
        }
    }
}

/// Traces of `m^1 .. m^max_power` from `max_power - 1` sequential products.
pub fn trace_powers<S: Scalar>(m: &SquareMatrix<S>, max_power: usize) -> TraceVector<S> {
    let mut traces = Vec::with_capacity(max_power);
    if max_power == 0 {
        return TraceVector { traces };
    }
    let mut power = m.clone();
    traces.push(power.trace());
    for _ in 1..max_power {
        power = mul_unchecked(&power, m);
        traces.push(power.trace());
    }
    TraceVector { traces }
}

/// The powers `m^0 .. m^max_power` together with the traces of `m^1 .. m^max_power`.
#[derive(Debug, Clone)]
pub struct MatrixPowers<S: Scalar> {
    powers: Vec<SquareMatrix<S>>,
    traces: TraceVector<S>,
}

impl<S: Scalar> MatrixPowers<S> {
    pub fn new(m: &SquareMatrix<S>, max_power: usize) -> Self {
        let mut powers = Vec::with_capacity(max_power + 1);
        powers.push(SquareMatrix::identity(m.dim));
        for p in 1..=max_power {
            let next = if p == 1 {
                m.clone()
            } else {
                mul_unchecked(&powers[p - 1], m)
            };
            powers.push(next);
        }
        let traces = TraceVector {
            traces: powers[1..].iter().map(SquareMatrix::trace).collect(),
        };
        MatrixPowers { powers, traces }
    }

    pub fn power(&self, p: usize) -> &SquareMatrix<S> {
        &self.powers[p]
    }

    pub fn max_power(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn traces(&self) -> &TraceVector<S> {
        &self.traces
    }
}
