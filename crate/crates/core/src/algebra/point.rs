//! Points with strictly positive rational coordinates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::Rng;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalPoint(Vec<BigRational>);

impl RationalPoint {
    pub fn new(values: Vec<BigRational>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::input(format!("coordinate {v} is not positive")));
        }
        Ok(RationalPoint(values))
    }

    /// Numerators and denominators uniform in `[1, 100]`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        RationalPoint((0..n).map(|_| random_positive(rng)).collect())
    }

    pub fn values(&self) -> &[BigRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn random_positive<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let a: i64 = rng.gen_range(1..=100);
    let b: i64 = rng.gen_range(1..=100);
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// `x^e` for a signed exponent; `x` must be nonzero when `e < 0`.
pub fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else if e == 0 {
        BigRational::one()
    } else {
        p
    }
}
