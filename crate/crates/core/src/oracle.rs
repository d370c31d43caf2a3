//! Brute-force reference values straight from the Levi-Civita definitions.
//!
//! The epsilon contractions are realized as signed sums over permutations
//! (determinants) and perfect matchings (Pfaffians); no rank-n tensor is
//! ever stored. Cost is factorial, so every entry point is capped.


use crate::error::{Error, Result};
use crate::matrix::{SkewMatrix, SquareMatrix};
use crate::scalar::{sign, Scalar};

/// Largest dimension accepted by the factorial-cost oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    pub det: usize,
    pub pf: usize,
}

impl OracleCaps {
    pub const DEFAULT: OracleCaps = OracleCaps { det: 8, pf: 12 };

    pub const UNCAPPED: OracleCaps = OracleCaps {
        det: usize::MAX,
        pf: usize::MAX,
    };
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self::DEFAULT
    }
}

fn check_cap(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        Err(Error::DimensionTooLargeForOracle { dim, cap })
    } else {
        Ok(())
    }
}

/// `det(C)` as the signed sum over all `n!` permutations.
pub fn det_definition<S: Scalar>(c: &SquareMatrix<S>) -> Result<S> {
    det_definition_capped(c, OracleCaps::DEFAULT)
}

pub fn det_definition_capped<S: Scalar>(c: &SquareMatrix<S>, caps: OracleCaps) -> Result<S> {
    check_cap(c.dim(), caps.det)?;
    Ok(permutation_sum(c))
}

// Depth-first over partial permutations, sharing prefix products. The sign
// is tracked by counting inversions as columns are chosen.
fn permutation_sum<S: Scalar>(c: &SquareMatrix<S>) -> S {
    let n = c.dim();
    let mut used = vec![false; n];
    let mut total = S::zero();
    fn rec<S: Scalar>(
        c: &SquareMatrix<S>,
        row: usize,
        prefix: S,
        inversions: usize,
        used: &mut [bool],
        total: &mut S,
    ) {
        let n = c.dim();
        if row == n {
            if inversions.is_multiple_of(2) {
                *total += prefix;
            } else {
                *total -= prefix;
            }
            return;
        }
        for col in 0..n {
            if used[col] {
                continue;
            }
            let entry = &c[(row, col)];
            if entry.is_zero() {
                continue;
            }
            // columns already used that are larger than `col` form inversions
            let extra = used[col + 1..].iter().filter(|&&u| u).count();
            used[col] = true;
            rec(c, row + 1, prefix.clone() * entry.clone(), inversions + extra, used, total);
            used[col] = false;
        }
    }
    rec(c, 0, S::one(), 0, &mut used, &mut total);
    total
}

/// `pf(A)` as the signed sum over the `(2n)! / (2^n n!)` perfect matchings.
pub fn pf_definition<S: Scalar>(a: &SkewMatrix<S>) -> Result<S> {
    pf_definition_capped(a, OracleCaps::DEFAULT)
}

pub fn pf_definition_capped<S: Scalar>(a: &SkewMatrix<S>, caps: OracleCaps) -> Result<S> {
    a.half_dim()?;
    check_cap(a.dim(), caps.pf)?;
    let indices: Vec<usize> = (0..a.dim()).collect();
    Ok(matching_sum(a, &indices))
}

// Pair the first remaining index with each later one; pairing with the p-th
// remaining index (p >= 1) contributes sign (-1)^(p-1).
fn matching_sum<S: Scalar>(a: &SquareMatrix<S>, remaining: &[usize]) -> S {
    if remaining.is_empty() {
        return S::one();
    }
    let first = remaining[0];
    let mut total = S::zero();
    let mut rest = Vec::with_capacity(remaining.len() - 2);
    for p in 1..remaining.len() {
        let entry = &a[(first, remaining[p])];
        if entry.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(remaining[1..].iter().enumerate().filter(|&(i, _)| i + 1 != p).map(|(_, &v)| v));
        let term = entry.clone() * matching_sum(a, &rest);
        if p % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Cofactor matrix transpose, `det(C) C^{-1}`, from `(n-1) x (n-1)` minors.
/// Defined for singular `C` as well.
pub fn adjugate_definition<S: Scalar>(c: &SquareMatrix<S>) -> Result<SquareMatrix<S>> {
    adjugate_definition_capped(c, OracleCaps::DEFAULT)
}

pub fn adjugate_definition_capped<S: Scalar>(
    c: &SquareMatrix<S>,
    caps: OracleCaps,
) -> Result<SquareMatrix<S>> {
    let n = c.dim();
    check_cap(n, caps.det)?;
    if n == 1 {
        return Ok(SquareMatrix::identity(1));
    }
    let mut out = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let minor = c.minor(&[j], &[i]).expect("minor of dim >= 1");
            out[(i, j)] = sign::<S>(i + j) * permutation_sum(&minor);
        }
    }
    Ok(out)
}

/// `pf(A) A^{-1}` from Pfaffian minors, valid for singular `A`.
///
/// With `M_ij = (-1)^(i+j+1+[i>j]) pf(A with rows/cols i, j removed)` the row
/// expansion reads `sum_j a_kj M_ij = pf(A) delta_ik`, so the result is `M^T`.
pub fn pf_adjugate_definition<S: Scalar>(a: &SkewMatrix<S>) -> Result<SquareMatrix<S>> {
    pf_adjugate_definition_capped(a, OracleCaps::DEFAULT)
}

pub fn pf_adjugate_definition_capped<S: Scalar>(
    a: &SkewMatrix<S>,
    caps: OracleCaps,
) -> Result<SquareMatrix<S>> {
    a.half_dim()?;
    let n = a.dim();
    check_cap(n, caps.pf)?;
    let mut out = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let remaining: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
            let sub_pf = matching_sum(a, &remaining);
            let parity = i + j + 1 + usize::from(i > j);
            // M_ij lands at (j, i)
            out[(j, i)] = sign::<S>(parity) * sub_pf;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{check_skew, mat_mul};
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det_definition(&SquareMatrix::<Q>::identity(5)).unwrap(), q(1));
        let m = SquareMatrix::<Q>::from_i64_rows([[1, 2], [3, 4]]);
        assert_eq!(det_definition(&m).unwrap(), q(-2));
        let repeated = SquareMatrix::<Q>::from_i64_rows([[1, 2, 3], [4, 5, 6], [1, 2, 3]]);
        assert_eq!(det_definition(&repeated).unwrap(), q(0));
        let perm = SquareMatrix::<Q>::from_i64_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        assert_eq!(det_definition(&perm).unwrap(), q(1));
        let swap = SquareMatrix::<Q>::from_i64_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert_eq!(det_definition(&swap).unwrap(), q(-1));
    }

    #[test]
    fn det_cap_is_enforced() {
        let big = SquareMatrix::<Q>::identity(9);
        assert_eq!(
            det_definition(&big),
            Err(Error::DimensionTooLargeForOracle { dim: 9, cap: 8 })
        );
        assert!(det_definition_capped(&big, OracleCaps::UNCAPPED).is_ok());
    }

    #[test]
    fn pf_small_cases() {
        let j = SkewMatrix::<Q>::standard(1);
        assert_eq!(pf_definition(&j).unwrap(), q(1));
        for n in 1..=5 {
            assert_eq!(pf_definition(&SkewMatrix::<Q>::standard(n)).unwrap(), q(1));
        }
        // general 4x4: a12 a34 - a13 a24 + a14 a23 with distinct primes
        let a = SkewMatrix::<Q>::from_upper(4, |i, j| {
            let primes = [[0, 2, 3, 5], [0, 0, 7, 11], [0, 0, 0, 13], [0, 0, 0, 0]];
            q(primes[i][j])
        });
        assert_eq!(pf_definition(&a).unwrap(), q(2 * 13 - 3 * 11 + 5 * 7));
    }

    #[test]
    fn pf_rejects_odd_and_oversized() {
        let odd = SkewMatrix::<Q>::from_upper(3, |_, _| q(1));
        assert_eq!(pf_definition(&odd), Err(Error::OddDimension(3)));
        let big = SkewMatrix::<Q>::standard(7);
        assert_eq!(
            pf_definition(&big),
            Err(Error::DimensionTooLargeForOracle { dim: 14, cap: 12 })
        );
    }

    #[test]
    fn adjugate_small_cases() {
        let m = SquareMatrix::<Q>::from_i64_rows([[1, 2], [3, 4]]);
        assert_eq!(
            adjugate_definition(&m).unwrap(),
            SquareMatrix::from_i64_rows([[4, -2], [-3, 1]])
        );
        assert_eq!(
            adjugate_definition(&SquareMatrix::<Q>::identity(4)).unwrap(),
            SquareMatrix::identity(4)
        );
        let singular = SquareMatrix::<Q>::from_i64_rows([[1, 1], [1, 1]]);
        assert_eq!(
            adjugate_definition(&singular).unwrap(),
            SquareMatrix::from_i64_rows([[1, -1], [-1, 1]])
        );
    }

    #[test]
    fn pf_adjugate_small_cases() {
        let a = SkewMatrix::<Q>::from_upper(2, |_, _| q(5));
        assert_eq!(
            pf_adjugate_definition(&a).unwrap(),
            SquareMatrix::from_i64_rows([[0, -1], [1, 0]])
        );
        let j2 = SkewMatrix::<Q>::standard(2);
        assert_eq!(
            pf_adjugate_definition(&j2).unwrap(),
            j2.as_matrix().scale(&q(-1))
        );
    }

    #[test]
    fn pf_adjugate_defining_property() {
        let a = check_skew(SquareMatrix::<Q>::from_i64_rows([
            [0, 1, -2, 3, 0, 4],
            [-1, 0, 5, -1, 2, 0],
            [2, -5, 0, 1, -3, 1],
            [-3, 1, -1, 0, 2, -2],
            [0, -2, 3, -2, 0, 1],
            [-4, 0, -1, 2, -1, 0],
        ]))
        .unwrap();
        let pf = pf_definition(&a).unwrap();
        let adj = pf_adjugate_definition(&a).unwrap();
        let product = mat_mul(a.as_matrix(), &adj).unwrap();
        assert_eq!(product, SquareMatrix::scalar_multiple_of_identity(6, &pf));
    }
}
