//! Determinants, Pfaffians and inverses from traces of matrix powers.
//!
//! The central objects are the coefficients of `exp(-w * sum_l tr(M^l) z^l / l)`
//! (with `w = 1` for determinants, `w = 1/2` for Pfaffian products), evaluated
//! either through complete Bell polynomials or as explicit sums over integer
//! partitions. Every identity runs over exact rationals and over `f64`.
//!
//! ```
//! use skewtrace::{pfaffian, SkewMatrix, Rational};
//!
//! let a: SkewMatrix<Rational> = SkewMatrix::from_upper(4, |i, j| Rational::from_integer((i + 2 * j).into()));
//! let pf = pfaffian(&a).unwrap();
//! assert_eq!(pf, skewtrace::pf_definition(&a).unwrap());
//! ```

pub mod bench;
pub mod cli;
pub mod combinatorics;
pub mod elimination;
pub mod error;
pub mod identities;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod random;
pub mod scalar;
pub mod series;
pub mod verify;

pub use combinatorics::{
    complete_bell, enumerate_diophantine, enumerate_shifted, partition_count, BellTable,
    PartitionVector,
};
pub use elimination::{lu_det_inverse, pf_elimination, EliminationReport, LuReport};
pub use error::{Error, Result};
pub use identities::{
    adjugate_expansion, adjugate_via_bell, adjugate_via_partitions, det_via_bell,
    det_via_partitions, general_adjugate_of_product, inverse_via_bell, pf_product,
    pf_product_via_partitions, pf_triple_identity_check, pfaffian, product_inverse_expansion,
    product_inverse_scaled, product_inverse_scaled_via_bell, semichar_coeffs, semichar_residual,
    skew_inverse_scaled, skew_inverse_scaled_via_partitions, SemiCharPolynomial,
};
pub use io::{parse_matrix, read_matrix, serialize_matrix, write_matrix, AnyMatrix, MatrixFile};
pub use matrix::{check_skew, mat_mul, trace_powers, MatrixPowers, SkewMatrix, SquareMatrix, TraceVector};
pub use oracle::{
    adjugate_definition, det_definition, pf_adjugate_definition, pf_definition, OracleCaps,
};
pub use scalar::{Rational, Scalar, ScalarMode};
pub use series::{BellArgs, BellFlavor, MatrixPolynomial};
