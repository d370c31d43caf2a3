//! Cubic-cost baselines: Pfaffian by skew congruence elimination and
//! determinant/inverse by LU.


use crate::error::{Error, Result};
use crate::matrix::{SkewMatrix, SquareMatrix};
use crate::scalar::Scalar;

/// Outcome of an elimination run.
#[derive(Debug, Clone, PartialEq)]
pub struct EliminationReport<S> {
    pub value: S,
    /// `(-1)^swap_count`.
    pub pivot_sign: i8,
    pub swap_count: usize,
    /// Largest intermediate entry magnitude; float regime only.
    pub growth: Option<f64>,
}

impl<S> EliminationReport<S> {
    fn sign_of(swaps: usize) -> i8 {
        if swaps.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Picks the pivot row among `candidates`: largest magnitude for floats,
/// first nonzero for exact scalars. `None` if every candidate is zero.
fn select_pivot<S: Scalar>(column: impl Iterator<Item = (usize, S)>) -> Option<usize> {
    if S::is_exact() {
        column.into_iter().find(|(_, v)| !v.is_zero()).map(|(i, _)| i)
    } else {
        let mut best: Option<(usize, f64)> = None;
        for (i, v) in column {
            let m = v.magnitude();
            if m > 0.0 && best.is_none_or(|(_, b)| m > b) {
                best = Some((i, m));
            }
        }
        best.map(|(i, _)| i)
    }
}

/// `pf(A)` by Parlett-Reid style congruence elimination in `Theta(n^3)`.
///
/// At each even step `k` the pivot `A[k+1][k]` is brought into place by a
/// simultaneous row/column swap (flipping the sign), then the rest of
/// row/column `k` is cleared with unit lower-triangular congruences, which
/// leave the Pfaffian unchanged. `pf(A)` is the signed product of the pivots
/// `A[k][k+1]`. A zero pivot column means `pf(A) = 0`.
pub fn pf_elimination<S: Scalar>(a: &SkewMatrix<S>) -> Result<EliminationReport<S>> {
    let half = a.half_dim()?;
    let n = a.dim();
    let mut m = a.as_matrix().clone();
    let mut value = S::one();
    let mut swaps = 0usize;
    let track_growth = !S::is_exact();
    let mut growth = if track_growth { m.max_magnitude() } else { 0.0 };

    for step in 0..half {
        let k = 2 * step;
        let pivot = select_pivot((k + 1..n).map(|i| (i, m[(i, k)].clone())));
        let Some(p) = pivot else {
            return Ok(EliminationReport {
                value: S::zero(),
                pivot_sign: EliminationReport::<S>::sign_of(swaps),
                swap_count: swaps,
                growth: track_growth.then_some(growth),
            });
        };
        if p != k + 1 {
            m.swap_rows(k + 1, p);
            m.swap_cols(k + 1, p);
            swaps += 1;
        }
        let pivot_value = m[(k, k + 1)].clone();
        value *= pivot_value.clone();

        // tau_i = A[k][i] / A[k][k+1]; row_i -= tau_i row_{k+1}, col_i -= tau_i col_{k+1}
        let taus: Vec<S> = (k + 2..n)
            .map(|i| m[(k, i)].clone() / pivot_value.clone())
            .collect();
        let pivot_row: Vec<S> = (k + 2..n).map(|j| m[(k + 1, j)].clone()).collect();
        for (ii, i) in (k + 2..n).enumerate() {
            let tau_i = &taus[ii];
            for (jj, j) in (k + 2..n).enumerate() {
                if j <= i {
                    continue;
                }
                let tau_j = &taus[jj];
                // A'[i][j] = A[i][j] - tau_i A[k+1][j] + tau_j A[k+1][i]
                let mut v = m[(i, j)].clone();
                if !tau_i.is_zero() {
                    v -= tau_i.clone() * pivot_row[jj].clone();
                }
                if !tau_j.is_zero() {
                    v += tau_j.clone() * pivot_row[ii].clone();
                }
                if track_growth {
                    growth = growth.max(v.magnitude());
                }
                m[(j, i)] = -v.clone();
                m[(i, j)] = v;
            }
        }
    }
    let sign = EliminationReport::<S>::sign_of(swaps);
    if sign < 0 {
        value = -value;
    }
    Ok(EliminationReport {
        value,
        pivot_sign: sign,
        swap_count: swaps,
        growth: track_growth.then_some(growth),
    })
}

/// Determinant and, when it exists, the inverse from one LU factorization.
#[derive(Debug, Clone, PartialEq)]
pub struct LuReport<S: Scalar> {
    pub det: S,
    pub swap_count: usize,
    inverse: Option<SquareMatrix<S>>,
}

impl<S: Scalar> LuReport<S> {
    pub fn inverse(&self) -> Result<&SquareMatrix<S>> {
        self.inverse.as_ref().ok_or(Error::SingularMatrix)
    }

    pub fn into_inverse(self) -> Result<SquareMatrix<S>> {
        self.inverse.ok_or(Error::SingularMatrix)
    }

    pub fn is_singular(&self) -> bool {
        self.inverse.is_none()
    }
}

/// Float pivots at or below this fraction of the largest entry count as zero.
pub const LU_PIVOT_TOLERANCE: f64 = 1e-14;

/// Gaussian elimination with partial pivoting (floats) or first-nonzero
/// pivoting (exact). Singularity is reported in the result, never as an error.
pub fn lu_det_inverse<S: Scalar>(c: &SquareMatrix<S>) -> LuReport<S> {
    let n = c.dim();
    let mut lu = c.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut swaps = 0usize;
    let mut det = S::one();
    let tol = LU_PIVOT_TOLERANCE * c.max_magnitude() * n as f64;
    let mut singular = false;

    for k in 0..n {
        let Some(p) = select_pivot((k..n).map(|i| (i, lu[(i, k)].clone()))) else {
            singular = true;
            det = S::zero();
            break;
        };
        if p != k {
            lu.swap_rows(k, p);
            perm.swap(k, p);
            swaps += 1;
        }
        let pivot = lu[(k, k)].clone();
        if pivot.is_negligible(tol) {
            singular = true;
        }
        det *= pivot.clone();
        for i in k + 1..n {
            let factor = lu[(i, k)].clone() / pivot.clone();
            if factor.is_zero() {
                lu[(i, k)] = factor;
                continue;
            }
            for j in k + 1..n {
                let update = factor.clone() * lu[(k, j)].clone();
                lu[(i, j)] -= update;
            }
            lu[(i, k)] = factor;
        }
    }
    if swaps % 2 == 1 {
        det = -det;
    }
    if singular {
        return LuReport {
            det,
            swap_count: swaps,
            inverse: None,
        };
    }

    // Solve L U x = P e_j column by column.
    let mut inv = SquareMatrix::zeros(n);
    for col in 0..n {
        let mut x: Vec<S> = perm.iter().map(|&r| if r == col { S::one() } else { S::zero() }).collect();
        for i in 0..n {
            for j in 0..i {
                let t = lu[(i, j)].clone() * x[j].clone();
                x[i] -= t;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let t = lu[(i, j)].clone() * x[j].clone();
                x[i] -= t;
            }
            x[i] = x[i].clone() / lu[(i, i)].clone();
        }
        for (i, v) in x.into_iter().enumerate() {
            inv[(i, col)] = v;
        }
    }
    LuReport {
        det,
        swap_count: swaps,
        inverse: Some(inv),
    }
}
