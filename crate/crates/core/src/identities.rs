//! Determinants, adjugates, Pfaffian products, skew inverses and the
//! semi-characteristic polynomial as finite sums over traces of powers.
//!
//! Each identity has a Bell-recursion form (the default entry points) and a
//! raw partition-sum form (`*_via_partitions`); the two share nothing beyond
//! the trace vector and are cross-checked in the tests.

use crate::combinatorics::enumerate_shifted;
use crate::error::{Error, Result};
use crate::matrix::{check_skew, mat_mul, MatrixPowers, SkewMatrix, SquareMatrix, TraceVector};
use crate::scalar::{sign, Scalar};
use crate::series::{
    partition_coefficient, partition_term, BellArgs, BellFlavor, MatrixPolynomial,
};

/// Float-regime determinant threshold, relative to `max|C|^n`.
pub const SINGULAR_TOLERANCE: f64 = 1e-12;

/// Float-regime equality tolerance `1e-9 * (1 + max entry magnitude)`.
pub fn residual_tolerance<S: Scalar>(inputs: &[&SquareMatrix<S>]) -> f64 {
    let scale = inputs.iter().map(|m| m.max_magnitude()).fold(0.0, f64::max);
    1e-9 * (1.0 + scale)
}

fn trace_of_product<S: Scalar>(x: &SquareMatrix<S>, y: &SquareMatrix<S>) -> S {
    let n = x.dim();
    let mut acc = S::zero();
    for i in 0..n {
        for j in 0..n {
            acc.mul_add_assign(&x[(i, j)], &y[(j, i)]);
        }
    }
    acc
}

/// Powers `M^0 .. M^max_power` and traces `tr M^1 .. tr M^(max_power + 1)`.
fn powers_with_next_trace<S: Scalar>(
    m: &SquareMatrix<S>,
    max_power: usize,
) -> (MatrixPowers<S>, TraceVector<S>) {
    let powers = MatrixPowers::new(m, max_power);
    let mut traces = powers.traces().as_slice().to_vec();
    traces.push(trace_of_product(powers.power(max_power), m));
    (powers, TraceVector::from_slice(&traces))
}

fn pair_half_dim<S: Scalar>(a: &SkewMatrix<S>, b: &SkewMatrix<S>) -> Result<usize> {
    let n = a.half_dim()?;
    b.half_dim()?;
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(n)
}

// ---------------------------------------------------------------------------
// General square matrices

/// `det(C) = (-1)^n B_n(x) / n!` with `x_j = -(j-1)! tr(C^j)`; `O(n^4)`.
pub fn det_via_bell<S: Scalar>(c: &SquareMatrix<S>) -> S {
    let n = c.dim();
    let traces = crate::matrix::trace_powers(c, n);
    det_from_traces(&traces, n)
}

fn det_from_traces<S: Scalar>(traces: &TraceVector<S>, n: usize) -> S {
    let f = BellArgs::from_traces(traces, n, BellFlavor::Determinant).normalized_bell();
    sign::<S>(n) * f[n].clone()
}

/// `det(C)` as the raw sum over partitions of `n`,
/// `sum_k prod_l (-1)^{k_l+1} tr(C^l)^{k_l} / (k_l! l^{k_l})`.
pub fn det_via_partitions<S: Scalar>(c: &SquareMatrix<S>) -> S {
    let n = c.dim();
    let traces = crate::matrix::trace_powers(c, n);
    crate::combinatorics::enumerate_diophantine(n)
        .iter()
        .fold(S::zero(), |acc, p| {
            acc + partition_term(p, &traces, BellFlavor::Determinant, true)
        })
}

/// Coefficients of `det(C) C^{-1}` as a polynomial in `C` of degree `n - 1`:
/// the coefficient of `C^{s-1}` is `(-1)^{n-1} B_{n-s}(x) / (n-s)!`.
pub fn adjugate_expansion<S: Scalar>(c: &SquareMatrix<S>) -> MatrixPolynomial<S> {
    let n = c.dim();
    let traces = crate::matrix::trace_powers(c, n - 1);
    adjugate_expansion_from_traces(&traces, n)
}

fn adjugate_expansion_from_traces<S: Scalar>(traces: &TraceVector<S>, n: usize) -> MatrixPolynomial<S> {
    let f = BellArgs::from_traces(traces, n - 1, BellFlavor::Determinant).normalized_bell();
    let outer = sign::<S>(n - 1);
    MatrixPolynomial::new((0..n).map(|p| outer.clone() * f[n - 1 - p].clone()).collect())
}

/// `det(C) C^{-1}` from the Bell expansion; the adjugate, so also defined for singular `C`.
pub fn adjugate_via_bell<S: Scalar>(c: &SquareMatrix<S>) -> SquareMatrix<S> {
    let n = c.dim();
    let powers = MatrixPowers::new(c, n - 1);
    adjugate_expansion_from_traces(powers.traces(), n).evaluate(&powers)
}

/// `det(C) C^{-1} = sum_s C^s sum_k prod_{l<n} (-1)^{k_l+1} tr(C^l)^{k_l} / (k_l! l^{k_l})`
/// over `s + sum_l l k_l = n - 1`.
pub fn adjugate_via_partitions<S: Scalar>(c: &SquareMatrix<S>) -> SquareMatrix<S> {
    let n = c.dim();
    let powers = MatrixPowers::new(c, n - 1);
    let mut coeffs = vec![S::zero(); n];
    for (s, p) in enumerate_shifted(n) {
        coeffs[s] += partition_term(&p, powers.traces(), BellFlavor::Determinant, true);
    }
    MatrixPolynomial::new(coeffs).evaluate(&powers)
}

/// `C^{-1}` as adjugate over determinant, both from one set of powers.
pub fn inverse_via_bell<S: Scalar>(c: &SquareMatrix<S>) -> Result<SquareMatrix<S>> {
    let n = c.dim();
    let (powers, traces) = powers_with_next_trace(c, n - 1);
    let det = det_from_traces(&traces, n);
    let scale = c.max_magnitude().max(1.0).powi(n as i32);
    if det.is_negligible(SINGULAR_TOLERANCE * scale) {
        return Err(Error::SingularMatrix);
    }
    let adj = adjugate_expansion_from_traces(&traces, n).evaluate(&powers);
    Ok(adj.scale(&(S::one() / det)))
}

// ---------------------------------------------------------------------------
// Skew-symmetric pairs

/// `pf(A) pf(B) = B_n(x) / n!` with `x_j = -(1/2)(j-1)! tr((AB)^j)`; `O(n^4)`.
pub fn pf_product<S: Scalar>(a: &SkewMatrix<S>, b: &SkewMatrix<S>) -> Result<S> {
    let n = pair_half_dim(a, b)?;
    let ab = a.mul(b);
    let traces = crate::matrix::trace_powers(&ab, n);
    Ok(pf_product_from_traces(&traces, n))
}

fn pf_product_from_traces<S: Scalar>(traces: &TraceVector<S>, n: usize) -> S {
    BellArgs::from_traces(traces, n, BellFlavor::Pfaffian).normalized_bell()[n].clone()
}

/// `pf(A) pf(B) = sum_k prod_l (-1)^{k_l} tr((AB)^l)^{k_l} / (k_l! 2^{k_l} l^{k_l})`
/// over the partitions of `n`.
pub fn pf_product_via_partitions<S: Scalar>(a: &SkewMatrix<S>, b: &SkewMatrix<S>) -> Result<S> {
    let n = pair_half_dim(a, b)?;
    let traces = crate::matrix::trace_powers(&a.mul(b), n);
    Ok(partition_coefficient(&traces, n, BellFlavor::Pfaffian))
}

/// `pf(A)` as `pf(A) pf(J)` with the reference matrix `J`, `pf(J) = 1`.
pub fn pfaffian<S: Scalar>(a: &SkewMatrix<S>) -> Result<S> {
    let n = a.half_dim()?;
    pf_product(a, &SkewMatrix::standard(n))
}

/// `pf(A) pf(B) A^{-1} = -sum_{s=1..n} (BA)^{s-1} B B_{n-s}(x) / (n-s)!`,
/// `x_j = -(1/2)(j-1)! tr((BA)^j)`. No division, so defined for singular `A`.
pub fn skew_inverse_scaled<S: Scalar>(a: &SkewMatrix<S>, b: &SkewMatrix<S>) -> Result<SquareMatrix<S>> {
    let n = pair_half_dim(a, b)?;
    let ba = b.mul(a);
    let powers = MatrixPowers::new(&ba, n - 1);
    let f = BellArgs::from_traces(powers.traces(), n - 1, BellFlavor::Pfaffian).normalized_bell();
    let poly = MatrixPolynomial::new((0..n).map(|p| -f[n - 1 - p].clone()).collect());
    Ok(poly.evaluate(&powers).mul(b))
}

/// Partition-sum form of [`skew_inverse_scaled`], over `s + sum_l l k_l = n - 1`.
pub fn skew_inverse_scaled_via_partitions<S: Scalar>(
    a: &SkewMatrix<S>,
    b: &SkewMatrix<S>,
) -> Result<SquareMatrix<S>> {
    let n = pair_half_dim(a, b)?;
    let ba = b.mul(a);
    let powers = MatrixPowers::new(&ba, n - 1);
    let poly = shifted_partition_polynomial(powers.traces(), n);
    Ok(poly.evaluate(&powers).mul(b))
}

fn shifted_partition_polynomial<S: Scalar>(traces: &TraceVector<S>, n: usize) -> MatrixPolynomial<S> {
    let mut coeffs = vec![S::zero(); n];
    for (s, p) in enumerate_shifted(n) {
        coeffs[s] -= partition_term(&p, traces, BellFlavor::Pfaffian, false);
    }
    MatrixPolynomial::new(coeffs)
}

/// Coefficients of `pf(A) pf(B) (AB)^{-1}` as a polynomial in `AB` of degree
/// `n - 1`, from the partition sums over `s + sum_l l k_l = n - 1`.
pub fn product_inverse_expansion<S: Scalar>(
    a: &SkewMatrix<S>,
    b: &SkewMatrix<S>,
) -> Result<MatrixPolynomial<S>> {
    let n = pair_half_dim(a, b)?;
    let traces = crate::matrix::trace_powers(&a.mul(b), n - 1);
    Ok(shifted_partition_polynomial(&traces, n))
}

/// `pf(A) pf(B) (AB)^{-1}`, touching only `(AB)^0 .. (AB)^{n-1}`.
pub fn product_inverse_scaled<S: Scalar>(a: &SkewMatrix<S>, b: &SkewMatrix<S>) -> Result<SquareMatrix<S>> {
    let n = pair_half_dim(a, b)?;
    let powers = MatrixPowers::new(&a.mul(b), n - 1);
    Ok(shifted_partition_polynomial(powers.traces(), n).evaluate(&powers))
}

/// Bell form of [`product_inverse_scaled`]: coefficient of `(AB)^s` is `-B_{n-1-s}/(n-1-s)!`.
pub fn product_inverse_scaled_via_bell<S: Scalar>(
    a: &SkewMatrix<S>,
    b: &SkewMatrix<S>,
) -> Result<SquareMatrix<S>> {
    let n = pair_half_dim(a, b)?;
    let powers = MatrixPowers::new(&a.mul(b), n - 1);
    let f = BellArgs::from_traces(powers.traces(), n - 1, BellFlavor::Pfaffian).normalized_bell();
    let poly = MatrixPolynomial::new((0..n).map(|s| -f[n - 1 - s].clone()).collect());
    Ok(poly.evaluate(&powers))
}

/// `p_n(lambda) = sum_s c_s lambda^s`, the degree-`n` semi-characteristic
/// polynomial of a skew pair, with `p_n(lambda)^2 = det(AB - lambda I)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SemiCharPolynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> SemiCharPolynomial<S> {
    /// `c_0 .. c_n`, ascending.
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn half_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &S {
        &self.coeffs[self.half_degree()]
    }

    /// `c_0`, which equals `pf(A) pf(B)`.
    pub fn constant(&self) -> &S {
        &self.coeffs[0]
    }

    pub fn eval(&self, lambda: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * lambda.clone() + c.clone())
    }

    /// Coefficients of `p_n(lambda)^2`, ascending.
    pub fn squared(&self) -> Vec<S> {
        let len = 2 * self.coeffs.len() - 1;
        let mut out = vec![S::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in self.coeffs.iter().enumerate() {
                out[i + j].mul_add_assign(a, b);
            }
        }
        out
    }

    pub fn as_matrix_polynomial(&self) -> MatrixPolynomial<S> {
        MatrixPolynomial::new(self.coeffs.clone())
    }
}

fn semichar_from_traces<S: Scalar>(traces: &TraceVector<S>, n: usize) -> SemiCharPolynomial<S> {
    let f = BellArgs::from_traces(traces, n, BellFlavor::Pfaffian).normalized_bell();
    SemiCharPolynomial {
        coeffs: (0..=n).map(|s| f[n - s].clone()).collect(),
    }
}

/// `c_s = B_{n-s}(x) / (n-s)!` with `x_j = -(1/2)(j-1)! tr((BA)^j)`.
pub fn semichar_coeffs<S: Scalar>(a: &SkewMatrix<S>, b: &SkewMatrix<S>) -> Result<SemiCharPolynomial<S>> {
    let n = pair_half_dim(a, b)?;
    let traces = crate::matrix::trace_powers(&b.mul(a), n);
    Ok(semichar_from_traces(&traces, n))
}

/// `p_n(AB) = sum_s (AB)^s c_s`, which vanishes identically.
pub fn semichar_residual<S: Scalar>(a: &SkewMatrix<S>, b: &SkewMatrix<S>) -> Result<SquareMatrix<S>> {
    let n = pair_half_dim(a, b)?;
    let powers = MatrixPowers::new(&a.mul(b), n);
    let poly = semichar_from_traces(powers.traces(), n);
    Ok(poly.as_matrix_polynomial().evaluate(&powers))
}

/// Checks `pf(AB) pf(C) = pf(A) pf(BC)` for skew `A, B, C` with
/// `AB + BA = 0` and `BC + CB = 0`, which make `AB` and `BC` skew.
pub fn pf_triple_identity_check<S: Scalar>(
    a: &SkewMatrix<S>,
    b: &SkewMatrix<S>,
    c: &SkewMatrix<S>,
) -> Result<bool> {
    pair_half_dim(a, b)?;
    pair_half_dim(b, c)?;
    let tol = residual_tolerance(&[a.as_matrix(), b.as_matrix(), c.as_matrix()]);
    let ab = a.mul(b);
    let bc = b.mul(c);
    if !anticommutator_vanishes(&ab, &b.mul(a), tol) {
        return Err(Error::AnticommutationViolated("AB + BA != 0"));
    }
    if !anticommutator_vanishes(&bc, &c.mul(b), tol) {
        return Err(Error::AnticommutationViolated("BC + CB != 0"));
    }
    let ab = check_skew(ab)?;
    let bc = check_skew(bc)?;
    let left = pf_product(&ab, c)?;
    let right = pf_product(a, &bc)?;
    Ok(left.approx_eq(&right, tol * (1.0 + left.magnitude().max(right.magnitude()))))
}

fn anticommutator_vanishes<S: Scalar>(xy: &SquareMatrix<S>, yx: &SquareMatrix<S>, tol: f64) -> bool {
    xy.entries()
        .iter()
        .zip(yx.entries())
        .all(|(p, q)| (p.clone() + q.clone()).is_negligible(tol))
}

/// `det(C) C^{-1}` for `C = AB` from the general expansion: degree `2n - 1` in `AB`.
pub fn general_adjugate_of_product<S: Scalar>(
    a: &SkewMatrix<S>,
    b: &SkewMatrix<S>,
) -> Result<MatrixPolynomial<S>> {
    pair_half_dim(a, b)?;
    Ok(adjugate_expansion(&mat_mul(a.as_matrix(), b.as_matrix())?))
}
