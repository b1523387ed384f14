//! Exact scalars: rationals, Laurent polynomials in `v`, and fractions of
//! Laurent polynomials, plus ordinary and quantum binomials.

mod binomial;
mod fraction;
mod laurent;
mod scalar;

pub use binomial::{binomial, factorial, gaussian_binomial, quantum_factorial, quantum_integer};
pub use fraction::LaurentFraction;
pub use laurent::LaurentPoly;
pub use scalar::{Mode, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{dividend} is not divisible by {divisor} in Z[v, v^-1]")]
    NotDivisible { dividend: String, divisor: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("gaussian binomial needs nonnegative arguments, got ({a}, {b})")]
    NegativeArgument { a: i64, b: i64 },
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}
