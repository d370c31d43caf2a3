//! Coefficient sequences built from traces of matrix powers.
//!
//! For traces `y_l = tr(M^l)` and a weight `w` (1 for determinants, 1/2 for
//! Pfaffian products) every identity in [`crate::identities`] is assembled
//! from the coefficients `f_m` of `exp(-w sum_l y_l z^l / l)`. They are
//! available by two independent routes: the Bell recursion
//! (`f_m = B_m(x) / m!` with `x_j = -w (j-1)! y_j`) and the explicit sum over
//! partitions of `m`.

use num_bigint::BigInt;

use crate::combinatorics::{complete_bell, enumerate_diophantine, PartitionVector};
use crate::matrix::{MatrixPowers, SquareMatrix, TraceVector};
use crate::scalar::{factorial, pow, Scalar};

/// Which argument convention a Bell expansion uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellFlavor {
    /// `x_j = -(j-1)! tr(C^j)`.
    Determinant,
    /// `x_j = -(1/2) (j-1)! tr((AB)^j)`.
    Pfaffian,
}

impl BellFlavor {
    /// Denominator of the weight `w`.
    fn weight_denominator(self) -> i64 {
        match self {
            BellFlavor::Determinant => 1,
            BellFlavor::Pfaffian => 2,
        }
    }
}

/// Bell-polynomial arguments derived from a trace vector.
#[derive(Debug, Clone, PartialEq)]
pub struct BellArgs<S> {
    xs: Vec<S>,
    flavor: BellFlavor,
}

impl<S: Scalar> BellArgs<S> {
    /// Arguments `x_1 .. x_order`; needs `traces.len() >= order`.
    pub fn from_traces(traces: &TraceVector<S>, order: usize, flavor: BellFlavor) -> Self {
        assert!(traces.len() >= order, "not enough traces for the requested order");
        let w = S::from_ratio(1, flavor.weight_denominator());
        let mut fact = BigInt::from(1);
        let xs = (1..=order)
            .map(|j| {
                if j > 1 {
                    fact *= j - 1;
                }
                -(w.clone() * S::from_bigint(&fact) * traces.get(j).clone())
            })
            .collect();
        BellArgs { xs, flavor }
    }

    pub fn xs(&self) -> &[S] {
        &self.xs
    }

    pub fn flavor(&self) -> BellFlavor {
        self.flavor
    }

    pub fn order(&self) -> usize {
        self.xs.len()
    }

    /// `B_m / m!` for `m = 0 ..= order`.
    pub fn normalized_bell(&self) -> Vec<S> {
        let table = complete_bell(&self.xs);
        let mut fact = BigInt::from(1);
        table
            .values()
            .iter()
            .enumerate()
            .map(|(m, b)| {
                if m > 1 {
                    fact *= m;
                }
                b.clone() / S::from_bigint(&fact)
            })
            .collect()
    }
}

/// `prod_{l=1..L} sigma_l * y_l^{k_l} / (k_l! (l/w)^{k_l})` over the entries of `p`,
/// where `sigma_l = (-1)^{k_l}`, or `(-1)^{k_l + 1}` when `sign_per_part` is set.
pub fn partition_term<S: Scalar>(
    p: &PartitionVector,
    traces: &TraceVector<S>,
    flavor: BellFlavor,
    sign_per_part: bool,
) -> S {
    let wd = flavor.weight_denominator();
    let mut term = S::one();
    let mut negations = 0usize;
    for (idx, &k) in p.counts().iter().enumerate() {
        let l = idx + 1;
        negations += k + usize::from(sign_per_part);
        if k == 0 {
            continue;
        }
        let denom = factorial(k) * BigInt::from(wd * l as i64).pow(k as u32);
        term *= pow(traces.get(l), k) / S::from_bigint(&denom);
    }
    if negations % 2 == 1 {
        -term
    } else {
        term
    }
}

/// `f_m` as the sum over the partitions of `m`.
pub fn partition_coefficient<S: Scalar>(traces: &TraceVector<S>, m: usize, flavor: BellFlavor) -> S {
    if m == 0 {
        return S::one();
    }
    enumerate_diophantine(m)
        .iter()
        .fold(S::zero(), |acc, p| acc + partition_term(p, traces, flavor, false))
}

/// `sum_s coeffs[s] * M^s` for some base matrix `M`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixPolynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> MatrixPolynomial<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        MatrixPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Highest power of the base the expansion refers to.
    pub fn max_power(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Evaluates with cached powers; needs `powers.max_power() >= self.max_power()`.
    pub fn evaluate(&self, powers: &MatrixPowers<S>) -> SquareMatrix<S> {
        assert!(powers.max_power() >= self.max_power(), "not enough cached powers");
        let dim = powers.power(0).dim();
        let mut out = SquareMatrix::zeros(dim);
        for (s, c) in self.coeffs.iter().enumerate() {
            out.add_scaled_assign(powers.power(s), c);
        }
        out
    }

    /// Evaluates by Horner's rule, computing no power beyond `max_power`.
    pub fn evaluate_at(&self, base: &SquareMatrix<S>) -> SquareMatrix<S> {
        let dim = base.dim();
        let mut out = SquareMatrix::zeros(dim);
        for c in self.coeffs.iter().rev() {
            out = out.mul(base);
            for i in 0..dim {
                out[(i, i)] += c.clone();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    #[test]
    fn bell_and_partition_routes_agree() {
        let traces: Vec<Q> = [3, -2, 7, 0, 5, -1, 4]
            .iter()
            .map(|&v| Q::from_ratio(v, 3))
            .collect();
        let traces = TraceVector::from_slice(&traces);
        for flavor in [BellFlavor::Determinant, BellFlavor::Pfaffian] {
            let bell = BellArgs::from_traces(&traces, 7, flavor).normalized_bell();
            for (m, f) in bell.iter().enumerate() {
                assert_eq!(f, &partition_coefficient(&traces, m, flavor), "m = {m}");
            }
        }
    }

    #[test]
    fn pfaffian_args_are_half_of_determinant_args() {
        let traces = TraceVector::from_slice(&[Q::from_i64(4), Q::from_i64(10), Q::from_i64(-6)]);
        let det = BellArgs::from_traces(&traces, 3, BellFlavor::Determinant);
        let pf = BellArgs::from_traces(&traces, 3, BellFlavor::Pfaffian);
        assert_eq!(det.xs(), &[Q::from_i64(-4), Q::from_i64(-10), Q::from_i64(12)]);
        for (a, b) in det.xs().iter().zip(pf.xs()) {
            assert_eq!(a.clone(), b.clone() * Q::from_i64(2));
        }
    }

    #[test]
    fn matrix_polynomial_routes_agree() {
        let m = SquareMatrix::<Q>::from_i64_rows([[1, 2, 0], [0, -1, 3], [2, 0, 1]]);
        let poly = MatrixPolynomial::new(vec![Q::from_i64(2), Q::from_ratio(-1, 2), Q::from_i64(3)]);
        let powers = MatrixPowers::new(&m, 2);
        assert_eq!(poly.evaluate(&powers), poly.evaluate_at(&m));
        assert_eq!(poly.max_power(), 2);
    }
}
