//! Oracles and generators shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use ypattern::dynkin::DynkinType;
use ypattern::matrix::IntMatrix;

/// Pairs with at most 12 vertices whose seed pattern must return.
pub const SEED_PAIRS: [(&str, &str); 14] = [
    ("A1", "A1"),
    ("A2", "A1"),
    ("A3", "A1"),
    ("A4", "A1"),
    ("D4", "A1"),
    ("D5", "A1"),
    ("A2", "A2"),
    ("A3", "A2"),
    ("A4", "A2"),
    ("A2", "A4"),
    ("D4", "A2"),
    ("A3", "A3"),
    ("A4", "A3"),
    ("D4", "A3"),
];

pub const FOLDING_PAIRS: [(&str, &str); 6] = [
    ("B2", "A1"),
    ("B3", "A1"),
    ("C3", "A1"),
    ("F4", "A1"),
    ("G2", "A1"),
    ("B2", "B2"),
];

pub fn t(s: &str) -> DynkinType {
    s.parse().unwrap()
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn power(x: &BigRational, e: i64) -> BigRational {
    let mut r = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        r *= x;
    }
    if e < 0 {
        r.recip()
    } else {
        r
    }
}

/// Y-seed mutation on values: `Y_k -> Y_k^{-1}`; for `j != k`,
/// `Y_j (1 + Y_k^{-1})^{-b_kj}` if `b_kj >= 0`, else `Y_j (1 + Y_k)^{-b_kj}`.
pub fn y_mutation(b: &[Vec<i64>], y: &[BigRational], k: usize) -> Vec<BigRational> {
    let one = BigRational::one();
    let mut out = y.to_vec();
    out[k] = y[k].recip();
    for j in 0..y.len() {
        if j == k {
            continue;
        }
        let bkj = b[k][j];
        let base = if bkj >= 0 {
            &one + y[k].recip()
        } else {
            &one + &y[k]
        };
        out[j] = &y[j] * power(&base, -bkj);
    }
    out
}

/// Coefficient-free exchange relation
/// `x_k x_k' = ∏ x_i^{[b_ik]_+} + ∏ x_i^{[-b_ik]_+}`.
pub fn x_mutation(b: &[Vec<i64>], x: &[BigRational], k: usize) -> Vec<BigRational> {
    let (mut p, mut m) = (BigRational::one(), BigRational::one());
    for i in 0..x.len() {
        let bik = b[i][k];
        if bik > 0 {
            p *= power(&x[i], bik);
        } else if bik < 0 {
            m *= power(&x[i], -bik);
        }
    }
    let mut out = x.to_vec();
    out[k] = (p + m) / &x[k];
    out
}

/// Matrix mutation written out entrywise.
pub fn matrix_mutation(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    let mut out = b.to_vec();
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else {
                b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
            };
        }
    }
    out
}

/// Skew-symmetrizable matrix `b_ij = s_ij d_j` with `s` skew-symmetric.
pub fn random_matrix<R: Rng>(
    rng: &mut R,
    n: usize,
    max: i64,
    valued: bool,
) -> (IntMatrix, Vec<u64>) {
    let d: Vec<u64> = (0..n)
        .map(|_| if valued { rng.gen_range(1..=2) } else { 1 })
        .collect();
    let mut b = IntMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let s = rng.gen_range(-max..=max);
            b.set(i, j, s * d[j] as i64);
            b.set(j, i, -s * d[i] as i64);
        }
    }
    (b, d)
}

pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|_| {
            BigRational::new(
                BigInt::from(rng.gen_range(1..=100)),
                BigInt::from(rng.gen_range(1..=100)),
            )
        })
        .collect()
}

pub fn is_positive(v: &[BigRational]) -> bool {
    v.iter().all(|x| *x > BigRational::zero())
}
