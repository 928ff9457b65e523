//! The Y-system recurrence on exact positive rationals, its normalized
//! first order form and the automorphisms `τ_±`, `φ = τ_- τ_+`.
//!
//! Values are indexed row-major by `(i, i')`. As point maps, `φ` applies
//! the substitution of `τ_-` first and then that of `τ_+`.

use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

use crate::algebra::{pow_rational, random_positive};
use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quiver::ProductShape;

/// Incidence matrices and signs of a pair of Dynkin types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairData {
    pub left: DynkinType,
    pub right: DynkinType,
    a: IntMatrix,
    ap: IntMatrix,
    eps: Vec<i8>,
    epsp: Vec<i8>,
    shape: ProductShape,
}

impl PairData {
    pub fn new(left: DynkinType, right: DynkinType) -> Self {
        let bl = left.bipartition();
        let br = right.bipartition();
        PairData {
            left,
            right,
            a: left.incidence_matrix(),
            ap: right.incidence_matrix(),
            eps: (0..left.rank()).map(|i| bl.sign(i)).collect(),
            epsp: (0..right.rank()).map(|i| br.sign(i)).collect(),
            shape: ProductShape::new(left.rank(), right.rank()),
        }
    }

    pub fn len(&self) -> usize {
        self.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shape.is_empty()
    }

    pub fn shape(&self) -> ProductShape {
        self.shape
    }

    /// `ε(i, i') = ε(i) ε(i')`.
    pub fn sign(&self, v: usize) -> i8 {
        let (i, ip) = self.shape.coords(v);
        self.eps[i] * self.epsp[ip]
    }

    /// `∏_j (1 + Y_{j,i'})^{a_ij} / ∏_{j'} (1 + Y_{i,j'}^{-1})^{a'_{i'j'}}`.
    fn exchange_factor(&self, y: &[BigRational], v: usize) -> BigRational {
        let (i, ip) = self.shape.coords(v);
        let one = BigRational::one();
        let mut num = BigRational::one();
        for j in 0..self.shape.left {
            let a = self.a.get(i, j);
            if a != 0 {
                num *= pow_rational(&(&one + &y[self.shape.index(j, ip)]), a);
            }
        }
        for jp in 0..self.shape.right {
            let a = self.ap.get(ip, jp);
            if a != 0 {
                num /= pow_rational(&(&one + y[self.shape.index(i, jp)].recip()), a);
            }
        }
        num
    }

    fn check_len(&self, y: &[BigRational]) -> Result<()> {
        if y.len() == self.len() {
            Ok(())
        } else {
            Err(Error::input(format!(
                "{} values for a {}-vertex product",
                y.len(),
                self.len()
            )))
        }
    }

    /// `τ_ε`: vertices with `ε(i,i') = ε` are multiplied by their exchange
    /// factor, the others inverted.
    pub fn tau(&self, eps: i8, y: &[BigRational]) -> Result<Vec<BigRational>> {
        self.check_len(y)?;
        Ok((0..self.len())
            .map(|v| {
                if self.sign(v) == eps {
                    &y[v] * self.exchange_factor(y, v)
                } else {
                    y[v].recip()
                }
            })
            .collect())
    }

    /// Point map of `φ = τ_- τ_+`.
    pub fn phi(&self, y: &[BigRational]) -> Result<Vec<BigRational>> {
        self.tau(1, &self.tau(-1, y)?)
    }

    /// One step `t -> t+1` of the normalized system: `τ_{(-1)^{t+1}}`.
    pub fn normalized_step(&self, y: &[BigRational], t: i64) -> Result<Vec<BigRational>> {
        let eps = if (t + 1).rem_euclid(2) == 0 { 1 } else { -1 };
        self.tau(eps, y)
    }
}

/// Two consecutive time slices `Y_{t-1}`, `Y_t` of the Y-system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YSystemState {
    pub prev: Vec<BigRational>,
    pub cur: Vec<BigRational>,
    pub t: i64,
}

impl YSystemState {
    pub fn new(pair: &PairData, prev: Vec<BigRational>, cur: Vec<BigRational>) -> Result<Self> {
        pair.check_len(&prev)?;
        pair.check_len(&cur)?;
        if prev
            .iter()
            .chain(&cur)
            .any(|v| *v <= BigRational::from_integer(0.into()))
        {
            return Err(Error::input("Y-system values must be positive"));
        }
        Ok(YSystemState { prev, cur, t: 0 })
    }

    /// Both slices uniform with numerators and denominators in `[1, 100]`.
    pub fn random<R: Rng + ?Sized>(pair: &PairData, rng: &mut R) -> Self {
        let n = pair.len();
        YSystemState {
            prev: (0..n).map(|_| random_positive(rng)).collect(),
            cur: (0..n).map(|_| random_positive(rng)).collect(),
            t: 0,
        }
    }
}

/// `Y_{t+1} = [∏_j (1+Y_{j,i',t})^{a_ij} / ∏_{j'} (1+Y_{i,j',t}^{-1})^{a'_{i'j'}}] / Y_{t-1}`.
pub fn y_system_step(pair: &PairData, s: &YSystemState) -> YSystemState {
    let next = (0..pair.len())
        .map(|v| pair.exchange_factor(&s.cur, v) / &s.prev[v])
        .collect();
    YSystemState {
        prev: s.cur.clone(),
        cur: next,
        t: s.t + 1,
    }
}
