//! Exact integer linear algebra: Smith normal form, simplicial homology over
//! the integers and prime fields, and invariants of symmetric forms.

mod form;
mod homology;
mod matrix;
mod sparse;

use thiserror::Error;

pub use form::{e8, form_invariants, hyperbolic, is_unimodular, Parity, SymmetricForm};
pub use homology::{betti_numbers, betti_numbers_of, homology, homology_of, reduced_homology, FaceLattice, HomologyProfile};
pub use matrix::{check_snf, determinant, smith_normal_form, IntegerMatrix, SmithNormalForm};
pub use sparse::{integer_kernel, invariant_factors, rank, rank_mod_p, SparseMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("matrix is not symmetric")]
    NotSymmetric,
}
