//! Exact arbitrary-precision integer, rational and univariate polynomial
//! arithmetic. Everything here is immutable after construction and pure, so
//! values can be shared freely across worker threads.

mod intpoly;
mod ratpoly;
mod text;

pub use intpoly::IntPoly;
pub use ratpoly::RatPoly;
pub use text::PolyParseError;

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for small integer constants.
pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

/// Shorthand for small rational constants (`d` must be nonzero).
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(int(n), int(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}
