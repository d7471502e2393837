//! Partitions, Schur polynomials, Littlewood-Richardson coefficients and
//! quantum integers.

mod laurent;
mod partition;
mod poly;
mod quantum;
mod schur;

pub use laurent::QLaurent;
pub use partition::{enumerate_partitions, partitions_of, partitions_with_rows, Partition};
pub use poly::ExactPoly;
pub use quantum::{quantum_binomial, quantum_binomial_partition, quantum_factorial, quantum_int};
pub use schur::{
    elementary, lr_coeff, lr_coeff_in, multi_lr_coeff, poly_determinant, schur_bialternant,
    schur_expand, schur_giambelli, schur_product, schur_tableaux, skew_coefficients, skew_schur,
    skew_schur_det, vandermonde,
};
#[allow(unused_imports)]
pub(crate) use schur::signed_permutations;
