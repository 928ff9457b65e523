//! Exact arithmetic: sparse integer polynomials, the tropical semifield and
//! positive rational points.

mod point;
mod poly;
mod tropical;

pub use point::{pow_rational, random_positive, RationalPoint};
pub use poly::{Monomial, Polynomial};
pub use tropical::TropicalMonomial;
