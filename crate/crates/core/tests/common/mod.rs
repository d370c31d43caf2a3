#![allow(dead_code)]

use std::path::PathBuf;

use num_traits::{One, Zero};
use skewtrace::{Rational, Scalar, SkewMatrix, SquareMatrix};

pub fn q(num: i64, den: i64) -> Rational {
    Rational::from_ratio(num, den)
}

pub fn int(v: i64) -> Rational {
    Rational::from_i64(v)
}

pub fn gamma1() -> SquareMatrix<Rational> {
    SquareMatrix::from_i64_rows([[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]])
}

pub fn gamma3() -> SquareMatrix<Rational> {
    SquareMatrix::from_i64_rows([[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]])
}

/// Ascending coefficients; trailing zeros trimmed.
pub type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

pub fn poly_neg(a: &Poly) -> Poly {
    a.iter().map(|c| -c).collect()
}

/// `det(C - lambda I)` expanded symbolically by the permutation sum over
/// polynomial entries. Independent of every trace-based routine.
pub fn char_poly_oracle(c: &SquareMatrix<Rational>) -> Poly {
    let n = c.dim();
    let entry = |i: usize, j: usize| -> Poly {
        if i == j {
            vec![c[(i, j)].clone(), -Rational::one()]
        } else {
            vec![c[(i, j)].clone()]
        }
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: Poly = vec![Rational::zero()];
    permutations(&mut perm, 0, &mut |p| {
        let mut term: Poly = vec![Rational::one()];
        for (i, &j) in p.iter().enumerate() {
            term = poly_mul(&term, &entry(i, j));
        }
        if inversions(p) % 2 == 1 {
            term = poly_neg(&term);
        }
        total = poly_add(&total, &term);
    });
    trim(total)
}

fn inversions(p: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

pub fn trimmed(p: &[Rational]) -> Poly {
    trim(p.to_vec())
}

/// Fresh scratch directory under the system temp dir.
pub fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("skewtrace-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).expect("create scratch dir");
    dir
}

pub fn skew_from_rows<const N: usize>(rows: [[i64; N]; N]) -> SkewMatrix<Rational> {
    skewtrace::check_skew(SquareMatrix::from_i64_rows(rows)).expect("skew input")
}
