//! Exact scalar, polynomial and truncated-series arithmetic, plus the
//! combinatorial primitives used throughout the crate.

mod combinat;
mod poly;
mod series;

pub use combinat::{binomial, compositions, factorial, multinomial, weak_compositions};
pub use poly::{render_rational, Exponents, MPoly, Var};
pub use series::TruncSeries;

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("exp requires a series with zero constant term")]
    NonZeroConstantTerm,
}
