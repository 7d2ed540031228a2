//! Exact-arithmetic toolkit for representing decision lists as integer
//! polynomial threshold functions (PTFs).
//!
//! The crate builds sign representations of decision lists over Boolean cubes
//! and Hamming balls, verifies them exhaustively, certifies weight lower
//! bounds through an adversarial witness search, and runs a multiplicative
//! weights online learner over expanded monomial features. All construction
//! arithmetic is exact rational; no floating point enters any result.

pub mod adversary;
pub mod amplifier;
pub mod construct;
pub mod dlist;
pub mod poly;
pub mod verify;
pub mod winnow;

pub use poly::{IntegerPolynomial, Monomial, Polynomial};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("assignment of length {given} does not cover variable x{var}")]
    MissingVariable { var: u32, given: usize },
    #[error("input length {given} does not match ambient variable count {expected}")]
    LengthMismatch { expected: u32, given: usize },
    #[error("domain has {size} points, exceeding the enumeration cap of {cap}; raise the cap or use sampling")]
    CapExceeded { size: u128, cap: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("amplifier validation failed at t={point}: |{value}| exceeds bound {bound}")]
    AmplifierValidation {
        point: String,
        value: String,
        bound: String,
    },
    #[error("witness seed rejected: polynomial evaluates to zero at the all-ones block")]
    ZeroSeed,
    #[error("certificate invariant violated: {0}")]
    BadCertificate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
