//! Exact arithmetic on multivariate rational functions in `q, x, z, s, u`.
//!
//! Polynomials are Laurent in `q` and ordinary in the other variables.
//! Rational functions keep their denominators factored (see [`atom`]).

pub mod atom;
mod format;
pub mod gcd;
pub mod monomial;
pub mod poly;
mod ratfunc;

pub use format::{parse_poly, parse_ratfunc};
pub use gcd::poly_gcd;
pub use monomial::{Monomial, Var};
pub use poly::MPoly;
pub use ratfunc::RatFunc;

/// Exact rationals with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under the substitution {0}")]
    VanishingDenominator(String),
    #[error("pole at q = 1")]
    PoleAtQ1,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n / d`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
