//! Seeded random inputs.
//!
//! Entries come from [`Scalar::sample`]: rationals `p/q` with `p` in [-9, 9]
//! and `q` in [1, 9], floats uniform in [-1, 1]. Skew matrices sample the
//! strict upper triangle row by row and antisymmetrize. The generator is
//! ChaCha8, so a seed (and stream) reproduces the same matrices everywhere.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::elimination::{lu_det_inverse, pf_elimination};
use crate::matrix::{SkewMatrix, SquareMatrix};
use crate::scalar::Scalar;

pub type TestRng = ChaCha8Rng;

/// Generator for `seed`, on an independent stream per case index.
pub fn rng_for(seed: u64, stream: u64) -> TestRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn random_matrix<S: Scalar>(rng: &mut TestRng, dim: usize) -> SquareMatrix<S> {
    SquareMatrix::from_fn(dim, |_, _| S::sample(rng))
}

pub fn random_skew<S: Scalar>(rng: &mut TestRng, dim: usize) -> SkewMatrix<S> {
    SkewMatrix::from_upper(dim, |_, _| S::sample(rng))
}

/// Redraws until the Pfaffian is nonzero. `dim` must be even.
pub fn random_invertible_skew<S: Scalar>(rng: &mut TestRng, dim: usize) -> SkewMatrix<S> {
    loop {
        let a: SkewMatrix<S> = random_skew(rng, dim);
        let pf = pf_elimination(&a).expect("even dimension").value;
        if pf.magnitude() > 1e-9 {
            return a;
        }
    }
}

/// Redraws until the determinant is nonzero.
pub fn random_invertible_matrix<S: Scalar>(rng: &mut TestRng, dim: usize) -> SquareMatrix<S> {
    loop {
        let c = random_matrix(rng, dim);
        if !lu_det_inverse(&c).is_singular() {
            return c;
        }
    }
}

/// A random matrix of rank at most `dim - 1`: the last row repeats a
/// combination of two others.
pub fn random_singular_matrix<S: Scalar>(rng: &mut TestRng, dim: usize) -> SquareMatrix<S> {
    let mut c = random_matrix::<S>(rng, dim);
    if dim == 1 {
        return SquareMatrix::zeros(1);
    }
    let alpha = S::sample(rng);
    let beta = if dim > 2 { S::sample(rng) } else { S::zero() };
    for j in 0..dim {
        let mut v = alpha.clone() * c[(0, j)].clone();
        if dim > 2 {
            v += beta.clone() * c[(1, j)].clone();
        }
        c[(dim - 1, j)] = v;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn same_seed_same_matrix() {
        let a: SkewMatrix<Rational> = random_skew(&mut rng_for(7, 3), 6);
        let b: SkewMatrix<Rational> = random_skew(&mut rng_for(7, 3), 6);
        let c: SkewMatrix<Rational> = random_skew(&mut rng_for(7, 4), 6);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn singular_generator_is_singular() {
        let mut rng = rng_for(1, 0);
        for dim in 1..=5 {
            let c: SquareMatrix<Rational> = random_singular_matrix(&mut rng, dim);
            assert!(lu_det_inverse(&c).is_singular());
        }
    }
}
