mod common;

use proptest::prelude::*;
use skewtrace::random::{random_matrix, random_skew, rng_for};
use skewtrace::scalar::pow;
use skewtrace::*;

fn exact_skew(seed: u64, dim: usize) -> SkewMatrix<Rational> {
    random_skew(&mut rng_for(seed, 0), dim)
}

fn exact_matrix(seed: u64, dim: usize) -> SquareMatrix<Rational> {
    random_matrix(&mut rng_for(seed, 1), dim)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn congruence_scales_pfaffian_by_determinant(seed in any::<u64>(), half in 1usize..=4) {
        let dim = 2 * half;
        let a = exact_skew(seed, dim);
        let b = exact_matrix(seed, dim);
        let moved = a.congruence(&b).unwrap();
        let det_b = lu_det_inverse(&b).det;
        let pf_a = pf_elimination(&a).unwrap().value;
        prop_assert_eq!(pf_elimination(&moved).unwrap().value, det_b.clone() * pf_a.clone());
        prop_assert_eq!(pfaffian(&moved).unwrap(), det_b * pf_a);
    }

    #[test]
    fn scaling_multiplies_pfaffian_by_power(seed in any::<u64>(), half in 1usize..=4, num in -9i64..=9, den in 1i64..=9) {
        let a = exact_skew(seed, 2 * half);
        let c = Rational::from_ratio(num, den);
        prop_assert_eq!(pfaffian(&a.scale(&c)).unwrap(), pow(&c, half) * pfaffian(&a).unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(seed in any::<u64>(), dim in 1usize..=6) {
        let c = exact_matrix(seed, dim);
        let d: SquareMatrix<Rational> = random_matrix(&mut rng_for(seed, 2), dim);
        prop_assert_eq!(det_via_bell(&c.mul(&d)), det_via_bell(&c) * det_via_bell(&d));
    }

    #[test]
    fn pfaffian_methods_agree(seed in any::<u64>(), half in 1usize..=5) {
        let a = exact_skew(seed, 2 * half);
        let pf = pfaffian(&a).unwrap();
        prop_assert_eq!(&pf_elimination(&a).unwrap().value, &pf);
        prop_assert_eq!(&pf_definition(&a).unwrap(), &pf);
    }

    #[test]
    fn transpose_flips_sign_by_parity(seed in any::<u64>(), half in 1usize..=4) {
        let a = exact_skew(seed, 2 * half);
        let t = check_skew(a.transpose()).unwrap();
        let expected = skewtrace::scalar::sign::<Rational>(half) * pfaffian(&a).unwrap();
        prop_assert_eq!(pfaffian(&t).unwrap(), expected);
    }

    #[test]
    fn rational_files_round_trip(seed in any::<u64>(), dim in 1usize..=6) {
        let c = exact_matrix(seed, dim);
        prop_assert_eq!(parse_matrix(&serialize_matrix(&c)).unwrap(), AnyMatrix::Rational(c));
    }

    #[test]
    fn float_files_round_trip(entries in prop::collection::vec(-1e6f64..1e6, 9)) {
        let c = SquareMatrix::new(3, entries).unwrap();
        prop_assert_eq!(parse_matrix(&serialize_matrix(&c)).unwrap(), AnyMatrix::F64(c));
    }

    #[test]
    fn partition_enumeration_is_valid_and_distinct(m in 0usize..=18) {
        let parts = enumerate_diophantine(m);
        prop_assert_eq!(parts.len() as u128, partition_count(m));
        for p in &parts {
            prop_assert!(p.is_valid());
            prop_assert_eq!(p.weighted_sum(), m);
        }
        for w in parts.windows(2) {
            prop_assert!(w[0].counts() > w[1].counts());
        }
    }
}
