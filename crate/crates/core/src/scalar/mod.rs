//! Exact scalars: quadratic integers, their fraction fields, and the ordered
//! field Q(sqrt 3) with a one-step quadratic tower above it.

mod field;
mod quad;
mod quadrat;
mod sqrt3;
mod tower;

pub use field::{Field, OrderedField, Sign};
pub use quad::{omega, theta, Eisenstein, EisensteinRing, GaussRing, Gaussian, QuadInt, QuadraticRing};
pub use quadrat::QuadRat;
pub use sqrt3::Sqrt3;
pub use tower::Tower;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn qq(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
