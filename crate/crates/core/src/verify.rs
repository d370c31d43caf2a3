//! Seeded exact-arithmetic verification battery.
//!
//! Every check runs `trials` random instances per dimension over rationals
//! and compares against brute-force oracles or a second evaluation route with
//! zero tolerance. Cases are independent (one RNG stream each), so they run
//! in parallel and still reproduce bit-for-bit.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::elimination::{lu_det_inverse, pf_elimination};
use crate::identities::{
    adjugate_via_bell, adjugate_via_partitions, det_via_bell, det_via_partitions, pf_product,
    pf_product_via_partitions, pfaffian, product_inverse_scaled, semichar_coeffs,
    semichar_residual, skew_inverse_scaled, skew_inverse_scaled_via_partitions,
};
use crate::matrix::{check_skew, SkewMatrix, SquareMatrix};
use crate::oracle::{det_definition, pf_definition, OracleCaps};
use crate::random::{
    random_invertible_skew, random_matrix, random_singular_matrix, random_skew, rng_for, TestRng,
};
use crate::scalar::{sign, Rational};

type Q = Rational;
type CheckFn = fn(&mut TestRng, usize, usize) -> Result<(), String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_dim: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_dim: 10,
            trials: 25,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseOutcome {
    pub check: &'static str,
    pub dim: usize,
    pub trials: usize,
    pub passed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl CaseOutcome {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub cases: Vec<CaseOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(CaseOutcome::ok)
    }
}

struct Check {
    name: &'static str,
    even_only: bool,
    /// Largest dimension the check's oracle can afford.
    max_dim: usize,
    run: CheckFn,
}

fn checks() -> Vec<Check> {
    let pf_cap = OracleCaps::DEFAULT.pf;
    let det_cap = OracleCaps::DEFAULT.det;
    vec![
        Check { name: "pf_product_reference", even_only: true, max_dim: pf_cap, run: pf_product_reference },
        Check { name: "skew_inverse_reference", even_only: true, max_dim: usize::MAX, run: skew_inverse_reference },
        Check { name: "pf_partition_form", even_only: true, max_dim: usize::MAX, run: pf_partition_form },
        Check { name: "cayley", even_only: true, max_dim: usize::MAX, run: cayley },
        Check { name: "inverse_pair_sign", even_only: true, max_dim: usize::MAX, run: inverse_pair_sign },
        Check { name: "product_inverse", even_only: true, max_dim: usize::MAX, run: product_inverse },
        Check { name: "semichar", even_only: true, max_dim: usize::MAX, run: semichar },
        Check { name: "pf_elimination", even_only: true, max_dim: pf_cap, run: elimination },
        Check { name: "det_bell", even_only: false, max_dim: det_cap, run: det_bell },
        Check { name: "adjugate", even_only: false, max_dim: det_cap, run: adjugate },
    ]
}

pub fn run_verify(config: VerifyConfig) -> VerifyReport {
    let mut jobs = Vec::new();
    for (idx, check) in checks().into_iter().enumerate() {
        let start = if check.even_only { 2 } else { 1 };
        let step = if check.even_only { 2 } else { 1 };
        for dim in (start..=config.max_dim.min(check.max_dim)).step_by(step) {
            jobs.push((idx as u64, dim, check.name, check.run));
        }
    }
    let cases = jobs
        .into_par_iter()
        .map(|(idx, dim, name, run)| {
            let mut rng = rng_for(config.seed, idx * 1000 + dim as u64);
            let mut passed = 0;
            let mut first_failure = None;
            for trial in 0..config.trials {
                match run(&mut rng, dim, trial) {
                    Ok(()) => passed += 1,
                    Err(msg) => {
                        first_failure.get_or_insert(format!("trial {trial}: {msg}"));
                    }
                }
            }
            CaseOutcome {
                check: name,
                dim,
                trials: config.trials,
                passed,
                first_failure,
            }
        })
        .collect();
    VerifyReport { config, cases }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, left: T, right: T) -> Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{what}: {left:?} != {right:?}"))
    }
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

fn pf_product_reference(rng: &mut TestRng, dim: usize, _: usize) -> Result<(), String> {
    let a: SkewMatrix<Q> = random_skew(rng, dim);
    let j = SkewMatrix::standard(dim / 2);
    let lhs = pf_product(&a, &j).map_err(err)?;
    let rhs = pf_definition(&a).map_err(err)? * pf_definition(&j).map_err(err)?;
    expect_eq("pf(A)pf(J)", lhs, rhs)
}

fn skew_inverse_reference(rng: &mut TestRng, dim: usize, _: usize) -> Result<(), String> {
    let a: SkewMatrix<Q> = random_skew(rng, dim);
    let j = SkewMatrix::standard(dim / 2);
    let scaled = skew_inverse_scaled(&a, &j).map_err(err)?;
    let pf = pf_product(&a, &j).map_err(err)?;
    expect_eq(
        "A * pf(A)pf(J)A^-1",
        a.mul(&scaled),
        SquareMatrix::scalar_multiple_of_identity(dim, &pf),
    )
}

fn pf_partition_form(rng: &mut TestRng, dim: usize, _: usize) -> Result<(), String> {
    let a: SkewMatrix<Q> = random_skew(rng, dim);
    let b: SkewMatrix<Q> = random_skew(rng, dim);
    expect_eq(
        "pf product, partition vs Bell",
        pf_product_via_partitions(&a, &b).map_err(err)?,
        pf_product(&a, &b).map_err(err)?,
    )?;
    expect_eq(
        "skew inverse, partition vs Bell",
        skew_inverse_scaled_via_partitions(&a, &b).map_err(err)?,
        skew_inverse_scaled(&a, &b).map_err(err)?,
    )
}

fn cayley(rng: &mut TestRng, dim: usize, _: usize) -> Result<(), String> {
    let a: SkewMatrix<Q> = random_skew(rng, dim);
    let pf = pfaffian(&a).map_err(err)?;
    let det = det_via_bell(a.as_matrix());
    expect_eq("pf(A)^2 vs Bell det", pf.clone() * pf, det.clone())?;
    if dim <= OracleCaps::DEFAULT.det {
        expect_eq("Bell det vs definition", det, det_definition(a.as_matrix()).map_err(err)?)
    } else {
        expect_eq("Bell det vs LU", det, lu_det_inverse(a.as_matrix()).det)
    }
}

fn inverse_pair_sign(rng: &mut TestRng, dim: usize, _: usize) -> Result<(), String> {
    let a: SkewMatrix<Q> = random_invertible_skew(rng, dim);
    let inv = lu_det_inverse(a.as_matrix()).into_inverse().map_err(err)?;
    let inv = check_skew(inv).map_err(err)?;
    expect_eq("pf(A)pf(A^-1)", pf_product(&a, &inv).map_err(err)?, sign::<Q>(dim / 2))
}

fn product_inverse(rng: &mut TestRng, dim: usize, _: usize) -> Result<(), String> {
    let a: SkewMatrix<Q> = random_skew(rng, dim);
    let b: SkewMatrix<Q> = random_skew(rng, dim);
    let scaled = product_inverse_scaled(&a, &b).map_err(err)?;
    let pf = pf_product(&a, &b).map_err(err)?;
    expect_eq(
        "AB * pf(A)pf(B)(AB)^-1",
        a.mul(&b).mul(&scaled),
        SquareMatrix::scalar_multiple_of_identity(dim, &pf),
    )
}

fn semichar(rng: &mut TestRng, dim: usize, _: usize) -> Result<(), String> {
    let a: SkewMatrix<Q> = random_skew(rng, dim);
    let b: SkewMatrix<Q> = random_skew(rng, dim);
    let residual = semichar_residual(&a, &b).map_err(err)?;
    if !residual.is_zero() {
        return Err("p_n(AB) is not the zero matrix".into());
    }
    let poly = semichar_coeffs(&a, &b).map_err(err)?;
    expect_eq("leading coefficient", poly.leading().clone(), Q::one())?;
    expect_eq("constant coefficient", poly.constant().clone(), pf_product(&a, &b).map_err(err)?)
}

fn elimination(rng: &mut TestRng, dim: usize, _: usize) -> Result<(), String> {
    let a: SkewMatrix<Q> = random_skew(rng, dim);
    expect_eq(
        "elimination vs definition",
        pf_elimination(&a).map_err(err)?.value,
        pf_definition(&a).map_err(err)?,
    )
}

fn det_bell(rng: &mut TestRng, dim: usize, _: usize) -> Result<(), String> {
    let c: SquareMatrix<Q> = random_matrix(rng, dim);
    let det = det_via_bell(&c);
    expect_eq("Bell vs partitions", det.clone(), det_via_partitions(&c))?;
    expect_eq("Bell vs LU", det.clone(), lu_det_inverse(&c).det)?;
    expect_eq("Bell vs definition", det, det_definition(&c).map_err(err)?)
}

fn adjugate(rng: &mut TestRng, dim: usize, trial: usize) -> Result<(), String> {
    // every fifth trial is singular
    let c: SquareMatrix<Q> = if trial.is_multiple_of(5) {
        random_singular_matrix(rng, dim)
    } else {
        random_matrix(rng, dim)
    };
    let adj = adjugate_via_bell(&c);
    expect_eq("adjugate, Bell vs partitions", adj.clone(), adjugate_via_partitions(&c))?;
    let det = det_via_bell(&c);
    if trial.is_multiple_of(5) && !det.is_zero() {
        return Err("singular generator produced a nonsingular matrix".into());
    }
    expect_eq("C adj(C)", c.mul(&adj), SquareMatrix::scalar_multiple_of_identity(dim, &det))
}
