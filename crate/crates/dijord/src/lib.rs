//! Computer algebra for associative dialgebras over the rationals.
//!
//! The free associative dialgebra `DiAs<X>` has a basis of *dimonomials*:
//! words in the generators with one marked (central) letter, written here
//! as `x y^ z` for the word with the dot on `y`.  On top of that substrate
//! the crate provides
//!
//! * the Jordan-expansion maps from free (di)algebra terms into
//!   (di)polynomials and the sign-placement maps that go the other way,
//! * exact span-membership tests for Jordan polynomials and Jordan
//!   dipolynomials,
//! * the Grassmann-dialgebra quotient with its normal-word basis,
//! * graded ideal computations inside the two-generated special Jordan
//!   dialgebra, including the exceptional-quotient certificate,
//! * rational octonions, the 27-dimensional Albert algebra and s-identity
//!   certification for multilinear identities up to degree 8.
//!
//! All arithmetic is exact: scalars are arbitrary-precision rationals and
//! every verdict is a zero-tolerance identity check.

pub mod albert;
pub mod cli;
pub mod diassoc;
pub mod diterm;
pub mod grassmann;
pub mod linalg;
pub mod membership;
pub mod parse;
pub mod speciality;
pub mod structalg;

pub use linalg::Scalar;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree bound exceeded: degree {degree} > bound {bound}")]
    BoundExceeded { degree: usize, bound: usize },
    #[error("expected degree exactly 1 in {var}, found {found} in some term")]
    NotLinearIn { var: String, found: usize },
    #[error("input is not homogeneous in {0}")]
    NotHomogeneous(String),
    #[error("input is not multilinear: {0}")]
    NotMultilinear(String),
    #[error("arity mismatch: identity uses {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("0-identities do not hold: {0}")]
    ZeroIdentitiesFail(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
