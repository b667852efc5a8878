//! Exact scalars, truncated Taylor series and Laurent polynomials.

mod laurent;
mod quad;
mod series;

pub use laurent::LaurentPoly;
pub use quad::{QuadScalar, Radicand};
pub use series::{SeriesOp, TaylorSeries, TrigKind};

use num_rational::BigRational;

pub(crate) fn factorial_rational(n: usize) -> BigRational {
    BigRational::from_integer(crate::combinat::factorial(n))
}
