//! Exact arithmetic kernel: arbitrary-precision rationals, dense rational
//! linear algebra, integer characteristic polynomials, and factorization of
//! univariate integer polynomials.
//!
//! Everything here is exact; no floating point is used anywhere.

pub mod charpoly;
pub mod factor;
pub mod matrix;
pub mod modp;
pub mod poly;
pub mod primes;
pub mod rational;

pub use charpoly::charpoly;
pub use factor::factor_int_poly;
pub use matrix::ExactMatrix;
pub use poly::IntPolynomial;
pub use primes::{divisor_count, divisors, factorize_int, kronecker};
pub use rational::Rational;

use thiserror::Error;

/// Errors surfaced by the arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("input must be a positive integer")]
    ZeroInput,
    #[error("matrix must be square")]
    NonSquare,
    #[error("matrix entries must be integral")]
    NonIntegral,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
}
