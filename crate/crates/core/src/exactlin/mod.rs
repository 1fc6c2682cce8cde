//! Exact scalars and finite-dimensional linear algebra over them.

mod echelon;
mod scalar;
mod span;
mod vector;

pub use echelon::{Echelon, Insert};
pub use scalar::{Field, Scalar};
pub(crate) use scalar::signed_term;
pub use span::{kernel, in_span, solve, span_basis, span_intersect, Subspace};
pub use vector::{combine, SparseVec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
    #[error("vectors mix scalars from different fields")]
    DomainMismatch,
}
