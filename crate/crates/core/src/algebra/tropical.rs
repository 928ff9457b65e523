//! The tropical semifield: Laurent monomials in `y1 ... yn` with
//! `⊕` the coordinatewise minimum of exponents.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use super::point::{pow_rational, RationalPoint};
use crate::error::{Error, Result};

/// Integer exponent vector of a tropical monomial (a c-vector).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TropicalMonomial(Vec<i64>);

impl TropicalMonomial {
    pub fn one(n: usize) -> Self {
        TropicalMonomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        TropicalMonomial(e)
    }

    pub fn from_exponents(e: Vec<i64>) -> Self {
        TropicalMonomial(e)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `1 ⊕ m`: exponents `min(0, e_i)`.
    pub fn one_plus(&self) -> Self {
        TropicalMonomial(self.0.iter().map(|&e| e.min(0)).collect())
    }

    /// `m ⊕ m'`: coordinatewise minimum.
    pub fn oplus(&self, other: &Self) -> Self {
        TropicalMonomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        TropicalMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inv(&self) -> Self {
        TropicalMonomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn pow(&self, k: i64) -> Self {
        TropicalMonomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Nonzero entries share one sign.
    pub fn is_sign_coherent(&self) -> bool {
        self.0.iter().all(|&e| e >= 0) || self.0.iter().all(|&e| e <= 0)
    }

    /// `[e]_+` entrywise.
    pub fn positive_part(&self) -> Vec<u32> {
        self.0.iter().map(|&e| e.max(0) as u32).collect()
    }

    /// `[-e]_+` entrywise.
    pub fn negative_part(&self) -> Vec<u32> {
        self.0.iter().map(|&e| (-e).max(0) as u32).collect()
    }

    pub fn evaluate(&self, x: &RationalPoint) -> Result<BigRational> {
        self.evaluate_at(x.values())
    }

    pub fn evaluate_at(&self, x: &[BigRational]) -> Result<BigRational> {
        if x.len() != self.0.len() {
            return Err(Error::input("point dimension does not match the monomial"));
        }
        let mut v = BigRational::one();
        for (xi, &e) in x.iter().zip(&self.0) {
            if e != 0 {
                v *= pow_rational(xi, e);
            }
        }
        Ok(v)
    }

    pub fn to_text(&self, var: &str) -> String {
        let f: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("{var}{}", i + 1)
                } else {
                    format!("{var}{}^{e}", i + 1)
                }
            })
            .collect();
        if f.is_empty() {
            "1".to_string()
        } else {
            f.join("*")
        }
    }
}

impl fmt::Display for TropicalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("y"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: &[i64]) -> TropicalMonomial {
        TropicalMonomial::from_exponents(e.to_vec())
    }

    #[test]
    fn one_plus_examples() {
        assert_eq!(t(&[1, 0]).one_plus(), t(&[0, 0]));
        assert_eq!(t(&[-1, 0]).one_plus(), t(&[-1, 0]));
        assert_eq!(t(&[1, -1]).one_plus(), t(&[0, -1]));
    }

    #[test]
    fn group_operations() {
        let a = t(&[2, -1, 0]);
        let b = t(&[-1, 3, 1]);
        assert_eq!(a.mul(&b), t(&[1, 2, 1]));
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(a.pow(-2), t(&[-4, 2, 0]));
        assert_eq!(a.oplus(&b), t(&[-1, -1, 0]));
        assert_eq!(a.to_string(), "y1^2*y2^-1");
        assert_eq!(TropicalMonomial::one(2).to_string(), "1");
    }

    #[test]
    fn sign_coherence() {
        assert!(t(&[0, 2, 1]).is_sign_coherent());
        assert!(t(&[-1, 0, -3]).is_sign_coherent());
        assert!(!t(&[1, -1]).is_sign_coherent());
        assert_eq!(t(&[2, -1]).positive_part(), vec![2, 0]);
        assert_eq!(t(&[2, -1]).negative_part(), vec![0, 1]);
    }
}
