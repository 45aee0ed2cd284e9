use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the library. Input-shape problems and mathematical
/// verdict sentinels are kept in one enum so callers can map them to exit
/// codes uniformly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gram matrix is not square: row {row} has length {len}, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("gram matrix is empty")]
    EmptyLattice,
    #[error("gram matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("gram matrix is not positive definite (pivot {pivot} at index {index} is not positive)")]
    NotPositiveDefinite { index: usize, pivot: String },
    #[error("{p} and {q} are not coprime")]
    NotCoprime { p: BigInt, q: BigInt },
    #[error("index {index} out of range (expected 0..{modulus})")]
    IndexOutOfRange { index: u64, modulus: u64 },
    #[error("alexander polynomial is not symmetric at exponent {exponent}")]
    AsymmetricAlexander { exponent: i64 },
    #[error("alexander polynomial is not normalized: evaluates to {total} at 1, expected 1")]
    NotNormalized { total: BigInt },
    #[error("knot document carries no V-sequence data (need either v_sequence or l_space with an alexander polynomial)")]
    MissingVData,
    #[error("V-sequence invariant violated: {detail}")]
    VInvariantViolated { detail: String },
    #[error("declared slice genus {declared} disagrees with the alexander degree {degree} of an l_space knot")]
    SliceGenusMismatch { declared: u64, degree: u64 },
    #[error("lattice determinant {det} does not match table order {p}")]
    DeterminantMismatch { det: BigInt, p: u64 },
    #[error("affine mode requires a cyclic discriminant group, got {group}")]
    NonCyclicDiscriminant { group: String },
    #[error("assertion violated (implementation bug sentinel): {detail}")]
    AssertionViolated { detail: String },
    #[error("invalid document: {detail}")]
    InvalidDocument { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
