//! Integer partitions as solutions of `sum_l l * k_l = n`, and complete Bell
//! polynomials evaluated by their binomial recursion.

use num_bigint::BigInt;
use num_traits::One;

use crate::scalar::Scalar;

/// Multiplicities `(k_1, ..., k_L)` of a partition, `k_l` counting parts of size `l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionVector {
    counts: Vec<usize>,
    weight: usize,
}

impl PartitionVector {
    /// Wraps `counts` if `sum_l l * k_l == weight`.
    pub fn new(counts: Vec<usize>, weight: usize) -> Option<Self> {
        let p = PartitionVector { counts, weight };
        p.is_valid().then_some(p)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `k_l` for `l` counted from 1; zero past the end.
    pub fn count(&self, part: usize) -> usize {
        self.counts.get(part - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of parts `sum_l k_l`.
    pub fn part_count(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn weighted_sum(&self) -> usize {
        self.counts.iter().enumerate().map(|(i, k)| (i + 1) * k).sum()
    }

    pub fn is_valid(&self) -> bool {
        self.weighted_sum() == self.weight
    }
}

/// Number of partitions of `m`, from the divisor-sum recursion
/// `m * nu(m) = sum_{l=1..m} l * sum_{k=1..floor(m/l)} nu(m - l k)`.
///
/// Exact for `m <= 1000` (the intermediate sums fit in `u128`).
pub fn partition_count(m: usize) -> u128 {
    let mut nu = vec![0u128; m + 1];
    nu[0] = 1;
    for current in 1..=m {
        let mut total: u128 = 0;
        for l in 1..=current {
            let inner: u128 = (1..=current / l).map(|k| nu[current - l * k]).sum();
            total += l as u128 * inner;
        }
        debug_assert_eq!(total % current as u128, 0);
        nu[current] = total / current as u128;
    }
    nu[m]
}

/// Every `(k_1, ..., k_n)` with `sum_l l * k_l = n`, lexicographically
/// descending in `k_1`, then `k_2`, and so on. Weight 0 yields the empty vector.
pub fn enumerate_diophantine(n: usize) -> Vec<PartitionVector> {
    enumerate_padded(n, n)
}

/// Partitions of `weight` written as vectors of length `len >= weight`.
fn enumerate_padded(weight: usize, len: usize) -> Vec<PartitionVector> {
    debug_assert!(len >= weight);
    let mut out = Vec::new();
    let mut counts = vec![0usize; len];
    descend(1, weight, &mut counts, weight, &mut out);
    out
}

fn descend(
    part: usize,
    remaining: usize,
    counts: &mut [usize],
    weight: usize,
    out: &mut Vec<PartitionVector>,
) {
    if remaining == 0 {
        out.push(PartitionVector {
            counts: counts.to_vec(),
            weight,
        });
        return;
    }
    // parts larger than `part` can absorb any leftover of 0 or above `part`
    for k in (0..=remaining / part).rev() {
        let left = remaining - k * part;
        if left != 0 && left <= part {
            continue;
        }
        counts[part - 1] = k;
        descend(part + 1, left, counts, weight, out);
        counts[part - 1] = 0;
    }
}

/// Pairs `(s, k)` with `s + sum_l l * k_l = n - 1`, `k` of length `n - 1`,
/// descending in `s` and, for fixed `s`, in the order of [`enumerate_diophantine`].
pub fn enumerate_shifted(n: usize) -> Vec<(usize, PartitionVector)> {
    assert!(n >= 1, "enumerate_shifted needs n >= 1");
    let total = n - 1;
    let mut out = Vec::new();
    for s in (0..=total).rev() {
        for mut p in enumerate_padded(total - s, total) {
            p.weight = total - s;
            out.push((s, p));
        }
    }
    out
}

/// Binomial coefficients `C(row, 0..=row)` over the integers.
pub fn binomial_row(row: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for r in 0..row {
        let mut next = Vec::with_capacity(r + 2);
        next.push(BigInt::one());
        for w in coeffs.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        coeffs = next;
    }
    coeffs
}

/// Complete Bell polynomials `B_0 .. B_N` of fixed arguments `x_1 .. x_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct BellTable<S> {
    values: Vec<S>,
    args: Vec<S>,
}

impl<S: Scalar> BellTable<S> {
    /// `B_n`.
    pub fn value(&self, n: usize) -> &S {
        &self.values[n]
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn args(&self) -> &[S] {
        &self.args
    }

    /// Largest `N` available.
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }
}

/// `B_0 = 1`, `B_n = sum_{m=1..n} C(n-1, m-1) x_m B_{n-m}`.
pub fn complete_bell<S: Scalar>(args: &[S]) -> BellTable<S> {
    let order = args.len();
    let mut values: Vec<S> = Vec::with_capacity(order + 1);
    values.push(S::one());
    let mut binom = vec![BigInt::one()];
    for n in 1..=order {
        // binom holds row n-1
        let mut acc = S::zero();
        for m in 1..=n {
            let c = S::from_bigint(&binom[m - 1]);
            acc += c * args[m - 1].clone() * values[n - m].clone();
        }
        values.push(acc);
        let mut next = Vec::with_capacity(n + 1);
        next.push(BigInt::one());
        for w in binom.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        binom = next;
    }
    BellTable {
        values,
        args: args.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    /// Exhaustive oracle: every vector in the box `k_l <= n / l`.
    fn brute_force(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut counts = vec![0usize; n];
        fn rec(l: usize, n: usize, counts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if l > n {
                let s: usize = counts.iter().enumerate().map(|(i, k)| (i + 1) * k).sum();
                if s == n {
                    out.push(counts.clone());
                }
                return;
            }
            for k in 0..=n / l {
                counts[l - 1] = k;
                rec(l + 1, n, counts, out);
            }
            counts[l - 1] = 0;
        }
        rec(1, n, &mut counts, &mut out);
        out
    }

    #[test]
    fn partition_count_frozen_values() {
        assert_eq!(partition_count(0), 1);
        assert_eq!(partition_count(4), brute_force(4).len() as u128);
        assert_eq!(partition_count(4), 5);
        assert_eq!(partition_count(10), brute_force(10).len() as u128);
        assert_eq!(partition_count(10), 42);
        assert_eq!(partition_count(100), 190_569_292);
    }

    #[test]
    fn enumeration_matches_exhaustive_box_search() {
        for n in 1..=12 {
            let mut expected = brute_force(n);
            expected.sort_by(|a, b| b.cmp(a));
            let got: Vec<Vec<usize>> =
                enumerate_diophantine(n).into_iter().map(|p| p.counts).collect();
            assert_eq!(got, expected, "n = {n}");
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let one: Vec<_> = enumerate_diophantine(1).into_iter().map(|p| p.counts).collect();
        assert_eq!(one, vec![vec![1]]);
        let two: Vec<_> = enumerate_diophantine(2).into_iter().map(|p| p.counts).collect();
        assert_eq!(two, vec![vec![2, 0], vec![0, 1]]);
        let four: Vec<_> = enumerate_diophantine(4).into_iter().map(|p| p.counts).collect();
        assert_eq!(four.len(), 5);
        assert_eq!(four.first(), Some(&vec![4, 0, 0, 0]));
        assert_eq!(four.last(), Some(&vec![0, 0, 0, 1]));
        assert!(four.contains(&vec![0, 2, 0, 0]));
    }

    #[test]
    fn shifted_small_cases() {
        let flat = |n| -> Vec<(usize, Vec<usize>)> {
            enumerate_shifted(n).into_iter().map(|(s, p)| (s, p.counts)).collect()
        };
        assert_eq!(flat(1), vec![(0, vec![])]);
        assert_eq!(flat(2), vec![(1, vec![0]), (0, vec![1])]);
        assert_eq!(
            flat(3),
            vec![(2, vec![0, 0]), (1, vec![1, 0]), (0, vec![2, 0]), (0, vec![0, 1])]
        );
    }

    #[test]
    fn shifted_satisfies_constraint() {
        for n in 1..=9 {
            for (s, p) in enumerate_shifted(n) {
                assert_eq!(s + p.weighted_sum(), n - 1);
                assert_eq!(p.len(), n - 1);
                assert!(p.is_valid());
            }
        }
    }

    #[test]
    fn bell_small_cases() {
        let empty = complete_bell::<Rational>(&[]);
        assert_eq!(empty.values(), &[Rational::from_i64(1)]);
        let x1 = Rational::from_ratio(-3, 7);
        assert_eq!(complete_bell(std::slice::from_ref(&x1)).value(1), &x1);
        let t = complete_bell(&[Rational::from_i64(2), Rational::from_i64(3)]);
        assert_eq!(t.value(2), &Rational::from_i64(7));
    }

    #[test]
    fn bell_with_unit_args_gives_bell_numbers() {
        let ones = vec![Rational::from_i64(1); 8];
        let t = complete_bell(&ones);
        let bell: Vec<i64> = vec![1, 1, 2, 5, 15, 52, 203, 877, 4140];
        let expected: Vec<Rational> = bell.into_iter().map(Rational::from_i64).collect();
        assert_eq!(t.values(), expected.as_slice());
    }

    #[test]
    fn binomial_rows() {
        let row: Vec<i64> = binomial_row(5).iter().map(|b| i64::try_from(b).unwrap()).collect();
        assert_eq!(row, vec![1, 5, 10, 10, 5, 1]);
        assert_eq!(binomial_row(0).len(), 1);
    }

    #[test]
    fn partition_vector_validation() {
        assert!(PartitionVector::new(vec![1, 1], 3).is_some());
        assert!(PartitionVector::new(vec![1, 1], 4).is_none());
        let p = PartitionVector::new(vec![0, 2, 0, 0], 4).unwrap();
        assert_eq!(p.count(2), 2);
        assert_eq!(p.count(7), 0);
        assert_eq!(p.part_count(), 2);
    }
}
