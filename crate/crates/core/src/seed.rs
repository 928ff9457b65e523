//! Seeds in factored form: exchange matrix, c-vectors (tropical
//! Y-variables), F-polynomials and g-vectors, with principal coefficients at
//! the initial seed.
//!
//! Conventions follow Fomin-Zelevinsky. Mutating at `k`:
//!
//! * `c'_k = -c_k`, and for `j != k`,
//!   `c'_j = c_j + [b_kj]_+ c_k - b_kj min(0, c_k)` (entrywise), which is
//!   `η_j η_k^{[b_kj]_+} (1 ⊕ η_k)^{-b_kj}`;
//! * `F'_k = (y^{[c_k]_+} ∏ F_i^{[b_ik]_+} + y^{[-c_k]_+} ∏ F_i^{[-b_ik]_+}) / F_k`;
//! * `g'_k = -g_k + Σ_i [b_ik]_+ g_i - Σ_j [c_jk]_+ b⁰_j`, with `b⁰_j` the
//!   `j`-th column of the initial matrix.
//!
//! Y- and X-variables are never expanded: [`Seed::y_variable`] returns
//! `η_j ∏ F_i^{b_ij}` and [`Seed::x_variable`] returns `F_j(ŷ) x^{g_j}`.

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{pow_rational, Polynomial, RationalPoint, TropicalMonomial};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quiver::{check_non_adjacent, Quiver, ValuedQuiver};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Seed {
    b: IntMatrix,
    b0: IntMatrix,
    d: Vec<u64>,
    c: Vec<TropicalMonomial>,
    f: Vec<Polynomial>,
    g: Vec<Vec<i64>>,
}

impl Seed {
    /// Initial seed: `η_j = y_j`, `F_j = 1`, `g_j = e_j`.
    pub fn initial(q: &ValuedQuiver) -> Seed {
        Self::initial_from_matrix(q.matrix().clone(), q.symmetrizer().to_vec())
    }

    pub fn from_quiver(q: &Quiver) -> Seed {
        Self::initial_from_matrix(q.matrix().clone(), vec![1; q.len()])
    }

    fn initial_from_matrix(b: IntMatrix, d: Vec<u64>) -> Seed {
        let n = b.dim();
        Seed {
            b0: b.clone(),
            b,
            d,
            c: (0..n).map(|j| TropicalMonomial::var(n, j)).collect(),
            f: vec![Polynomial::one(n); n],
            g: (0..n)
                .map(|j| (0..n).map(|i| i64::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.b.dim()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.b
    }

    pub fn initial_matrix(&self) -> &IntMatrix {
        &self.b0
    }

    pub fn symmetrizer(&self) -> &[u64] {
        &self.d
    }

    pub fn c_vector(&self, j: usize) -> &TropicalMonomial {
        &self.c[j]
    }

    pub fn c_vectors(&self) -> &[TropicalMonomial] {
        &self.c
    }

    pub fn f_polynomial(&self, j: usize) -> &Polynomial {
        &self.f[j]
    }

    pub fn f_polynomials(&self) -> &[Polynomial] {
        &self.f
    }

    pub fn g_vector(&self, j: usize) -> &[i64] {
        &self.g[j]
    }

    pub fn g_vectors(&self) -> &[Vec<i64>] {
        &self.g
    }

    /// The C-matrix (columns are the c-vectors) is the identity and every
    /// F-polynomial is 1.
    pub fn has_trivial_coefficients(&self) -> bool {
        self.c.iter().enumerate().all(|(j, c)| {
            c.exponents()
                .iter()
                .enumerate()
                .all(|(i, &e)| e == i64::from(i == j))
        }) && self.f.iter().all(Polynomial::is_one)
    }

    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let n = self.rank();
        if k >= n {
            return Err(Error::UnknownVertex(format!(
                "index {k} (seed has rank {n})"
            )));
        }
        let b = &self.b;
        let ck = &self.c[k];

        let c: Vec<TropicalMonomial> = (0..n)
            .map(|j| {
                if j == k {
                    return ck.inv();
                }
                let bkj = b.get(k, j);
                if bkj == 0 {
                    return self.c[j].clone();
                }
                let e = self.c[j]
                    .exponents()
                    .iter()
                    .zip(ck.exponents())
                    .map(|(&cj, &ckk)| cj + bkj.max(0) * ckk - bkj * ckk.min(0))
                    .collect();
                TropicalMonomial::from_exponents(e)
            })
            .collect();

        let mut plus = Polynomial::monomial(&ck.positive_part());
        let mut minus = Polynomial::monomial(&ck.negative_part());
        for i in 0..n {
            let bik = b.get(i, k);
            if bik > 0 {
                plus = &plus * &self.f[i].pow(bik as u32);
            } else if bik < 0 {
                minus = &minus * &self.f[i].pow((-bik) as u32);
            }
        }
        let fk = (&plus + &minus).div_exact(&self.f[k])?;
        let mut f = self.f.clone();
        f[k] = fk;

        let mut gk: Vec<i64> = self.g[k].iter().map(|x| -x).collect();
        for i in 0..n {
            let bik = b.get(i, k);
            if bik > 0 {
                for (a, x) in gk.iter_mut().zip(&self.g[i]) {
                    *a += bik * x;
                }
            }
        }
        for (j, &cjk) in ck.exponents().iter().enumerate() {
            if cjk > 0 {
                for (i, a) in gk.iter_mut().enumerate() {
                    *a -= cjk * self.b0.get(i, j);
                }
            }
        }
        let mut g = self.g.clone();
        g[k] = gk;

        let out = Seed {
            b: b.mutate(k),
            b0: self.b0.clone(),
            d: self.d.clone(),
            c,
            f,
            g,
        };
        out.check_invariants(k)?;
        Ok(out)
    }

    fn check_invariants(&self, k: usize) -> Result<()> {
        let fail = |what: String| {
            let dump = serde_json::to_string(&self.to_json()).unwrap_or_default();
            Err(Error::Internal(format!(
                "{what} after mutation at {k}; seed: {dump}"
            )))
        };
        if !self.b.is_skew_symmetrized_by(&self.d) {
            return fail("exchange matrix lost skew-symmetrizability".into());
        }
        for (j, c) in self.c.iter().enumerate() {
            if !c.is_sign_coherent() {
                return fail(format!(
                    "c-vector of vertex {} is not sign-coherent ({c})",
                    j + 1
                ));
            }
        }
        for (j, f) in self.f.iter().enumerate() {
            if !f.constant_term().is_one() {
                return fail(format!(
                    "F-polynomial of vertex {} has constant term != 1",
                    j + 1
                ));
            }
            if !f.has_nonnegative_coefficients() {
                return fail(format!(
                    "F-polynomial of vertex {} has a negative coefficient",
                    j + 1
                ));
            }
        }
        Ok(())
    }

    /// Mutation at a set of pairwise non adjacent vertices, in the given
    /// order (the result does not depend on it).
    pub fn mutate_block(&self, set: &[usize]) -> Result<Seed> {
        check_non_adjacent(&self.b, set)?;
        let mut s = self.clone();
        for &k in set {
            s = s.mutate(k)?;
        }
        Ok(s)
    }

    /// Mutation along a sequence, first element first.
    pub fn mutate_sequence(&self, seq: &[usize]) -> Result<Seed> {
        let mut s = self.clone();
        for &k in seq {
            s = s.mutate(k)?;
        }
        Ok(s)
    }

    /// `Y_j = η_j ∏_i F_i^{b_ij}`.
    pub fn y_variable(&self, j: usize) -> SymbolicYExpression {
        let factors = (0..self.rank())
            .filter(|&i| self.b.get(i, j) != 0 && !self.f[i].is_one())
            .map(|i| (self.f[i].clone(), self.b.get(i, j)))
            .collect();
        SymbolicYExpression {
            eta: self.c[j].clone(),
            factors,
        }
    }

    /// `X_j = F_j(ŷ) x^{g_j}` with `ŷ_l = ∏_i x_i^{b⁰_il}`.
    pub fn x_variable(&self, j: usize) -> SymbolicXExpression {
        let n = self.rank();
        let y_hat = (0..n)
            .map(|l| TropicalMonomial::from_exponents(self.b0.column(l)))
            .collect();
        SymbolicXExpression {
            f: self.f[j].clone(),
            y_hat,
            g: TropicalMonomial::from_exponents(self.g[j].clone()),
        }
    }

    pub fn to_json(&self) -> SeedJson {
        SeedJson {
            b: self.b.rows(),
            d: self.d.clone(),
            c: self.c.iter().map(|c| c.exponents().to_vec()).collect(),
            f: self.f.iter().map(|f| f.to_string()).collect(),
            g: self.g.clone(),
            b0: if self.b0 == self.b {
                None
            } else {
                Some(self.b0.rows())
            },
        }
    }

    pub fn from_json(j: SeedJson) -> Result<Seed> {
        let b = IntMatrix::from_rows(j.b)?;
        let n = b.dim();
        let b0 = match j.b0 {
            Some(rows) => IntMatrix::from_rows(rows)?,
            None => b.clone(),
        };
        let shape_ok = b0.dim() == n
            && j.d.len() == n
            && j.c.len() == n
            && j.f.len() == n
            && j.g.len() == n
            && j.c.iter().chain(&j.g).all(|v| v.len() == n);
        if !shape_ok {
            return Err(Error::input(format!(
                "seed JSON fields disagree on the rank {n}"
            )));
        }
        if j.d.contains(&0) || !b.is_skew_symmetrized_by(&j.d) || !b0.is_skew_symmetrized_by(&j.d) {
            return Err(Error::input("seed matrix is not skew-symmetrized by d"));
        }
        let f =
            j.f.iter()
                .map(|s| Polynomial::parse(s, n))
                .collect::<Result<Vec<_>>>()?;
        Ok(Seed {
            b,
            b0,
            d: j.d,
            c: j.c
                .into_iter()
                .map(TropicalMonomial::from_exponents)
                .collect(),
            f,
            g: j.g,
        })
    }
}

pub fn initial_seed(q: &ValuedQuiver) -> Seed {
    Seed::initial(q)
}

pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed> {
    s.mutate(k)
}

pub fn mutate_seed_block(s: &Seed, set: &[usize]) -> Result<Seed> {
    s.mutate_block(set)
}

/// Fieldwise equality of `B`, `d`, c-vectors, F-polynomials and g-vectors.
pub fn seed_equals(a: &Seed, b: &Seed) -> Result<bool> {
    if a.rank() != b.rank() {
        return Err(Error::input(format!(
            "seeds of rank {} and {} are not comparable",
            a.rank(),
            b.rank()
        )));
    }
    Ok(a.b == b.b && a.d == b.d && a.c == b.c && a.f == b.f && a.g == b.g)
}

/// Wire format of a seed. `c` and `g` list one vector per vertex; `b0`, the
/// initial exchange matrix, defaults to `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    pub b: Vec<Vec<i64>>,
    pub d: Vec<u64>,
    pub c: Vec<Vec<i64>>,
    pub f: Vec<String>,
    pub g: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b0: Option<Vec<Vec<i64>>>,
}

/// `η ∏ F_i^{e_i}`, kept factored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicYExpression {
    pub eta: TropicalMonomial,
    pub factors: Vec<(Polynomial, i64)>,
}

impl SymbolicYExpression {
    pub fn evaluate(&self, y: &RationalPoint) -> Result<BigRational> {
        let mut v = self.eta.evaluate(y)?;
        for (p, e) in &self.factors {
            v *= pow_rational(&p.evaluate(y)?, *e);
        }
        Ok(v)
    }
}

/// `F(ŷ) x^g` with `ŷ_l` Laurent monomials in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicXExpression {
    pub f: Polynomial,
    pub y_hat: Vec<TropicalMonomial>,
    pub g: TropicalMonomial,
}

impl SymbolicXExpression {
    pub fn evaluate(&self, x: &RationalPoint) -> Result<BigRational> {
        let y: Vec<BigRational> = self
            .y_hat
            .iter()
            .map(|m| m.evaluate(x))
            .collect::<Result<_>>()?;
        Ok(self.f.evaluate_at(&y)? * self.g.evaluate(x)?)
    }
}

/// g-vectors of the seed reached by `path` from `initial`, computed by base
/// change: `g^{t_m}_i(t_m) = e_i`, then for each edge back towards `t_0`
/// apply `φ_+` or `φ_-` of the quiver at the nearer end, `φ_+` when the
/// `k`-th component of the current vector is `<= 0`.
pub fn g_vectors_by_base_change(initial: &Seed, path: &[usize]) -> Result<Vec<Vec<i64>>> {
    let n = initial.rank();
    let mut matrices = vec![initial.b.clone()];
    for &k in path {
        if k >= n {
            return Err(Error::UnknownVertex(format!("index {k}")));
        }
        let next = matrices.last().unwrap().mutate(k);
        matrices.push(next);
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut g: Vec<i64> = (0..n).map(|j| i64::from(i == j)).collect();
        for (s, &k) in path.iter().enumerate().rev() {
            let q = &matrices[s];
            let gk = g[k];
            // φ_+(e_k) = -e_k + Σ_{i -> k} e_i, φ_-(e_k) = -e_k + Σ_{k -> j} e_j
            let plus = gk <= 0;
            for (j, x) in g.iter_mut().enumerate() {
                if j == k {
                    *x = -gk;
                } else {
                    let m = if plus { q.get(j, k) } else { q.get(k, j) };
                    *x += gk * m.max(0);
                }
            }
        }
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn a2() -> Seed {
        Seed::from_quiver(&Quiver::alternating("A2".parse().unwrap()).unwrap())
    }

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn initial_seed_components() {
        let s = a2();
        assert_eq!(s.matrix().rows(), vec![vec![0, 1], vec![-1, 0]]);
        assert!(s.has_trivial_coefficients());
        assert_eq!(s.g_vectors(), &[vec![1, 0], vec![0, 1]]);
        let b2 = Seed::initial(&ValuedQuiver::alternating("B2".parse().unwrap()));
        assert_eq!(b2.symmetrizer(), &[1, 2]);
        assert!(b2.has_trivial_coefficients());
    }

    #[test]
    fn a2_first_mutation() {
        let s = a2().mutate(0).unwrap();
        assert_eq!(s.c_vector(0).exponents(), &[-1, 0]);
        assert_eq!(s.c_vector(1).exponents(), &[1, 1]);
        assert_eq!(s.f_polynomial(0), &p("1 + y1", 2));
        assert!(s.f_polynomial(1).is_one());
        assert_eq!(s.g_vector(0), &[-1, 1]);
    }

    #[test]
    fn a2_second_mutation_f_polynomial() {
        let s = a2().mutate(0).unwrap().mutate(1).unwrap();
        assert_eq!(s.f_polynomial(1), &p("1 + y1 + y1*y2", 2));
    }

    #[test]
    fn first_mutation_gives_one_plus_y() {
        let s = Seed::from_quiver(&Quiver::alternating("D4".parse().unwrap()).unwrap());
        for k in 0..4 {
            let m = s.mutate(k).unwrap();
            let expected = &Polynomial::one(4) + &Polynomial::var(4, k);
            assert_eq!(m.f_polynomial(k), &expected);
        }
    }

    #[test]
    fn mutation_is_an_involution() {
        let s = Seed::from_quiver(&Quiver::alternating("A4".parse().unwrap()).unwrap());
        let t = s.mutate_sequence(&[0, 2, 1, 3, 2]).unwrap();
        for k in 0..4 {
            assert_eq!(t.mutate(k).unwrap().mutate(k).unwrap(), t);
        }
        assert!(!seed_equals(&t, &t.mutate(1).unwrap()).unwrap());
        assert!(seed_equals(&t, &t.mutate(1).unwrap().mutate(1).unwrap()).unwrap());
    }

    #[test]
    fn seed_equals_rejects_rank_mismatch() {
        let s = a2();
        let t = Seed::from_quiver(&Quiver::alternating("A3".parse().unwrap()).unwrap());
        assert!(seed_equals(&s, &t).is_err());
    }

    #[test]
    fn y_variables_after_one_mutation() {
        let s = a2().mutate(0).unwrap();
        let pt = RationalPoint::new(vec![q(1, 2), q(3, 7)]).unwrap();
        let (y1, y2) = (q(1, 2), q(3, 7));
        assert_eq!(s.y_variable(0).evaluate(&pt).unwrap(), q(2, 1));
        // the arrow 1 -> 2 points away from the mutated vertex
        let one = BigRational::one();
        assert_eq!(
            s.y_variable(1).evaluate(&pt).unwrap(),
            &y1 * &y2 / (&one + &y1)
        );
        assert_eq!(a2().y_variable(1).evaluate(&pt).unwrap(), y2);
    }

    #[test]
    fn x_variables_after_one_mutation() {
        let s = a2().mutate(0).unwrap();
        let pt = RationalPoint::new(vec![q(2, 3), q(5, 4)]).unwrap();
        let (x1, x2) = (q(2, 3), q(5, 4));
        assert_eq!(
            s.x_variable(0).evaluate(&pt).unwrap(),
            (BigRational::one() + &x2) / &x1
        );
        assert_eq!(s.x_variable(1).evaluate(&pt).unwrap(), x2);
        assert_eq!(a2().x_variable(0).evaluate(&pt).unwrap(), x1);
        let back = s.mutate(0).unwrap();
        assert_eq!(back.x_variable(0).evaluate(&pt).unwrap(), q(2, 3));
    }

    #[test]
    fn g_vectors_agree_with_base_change() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for t in ["A3", "A4", "D4"] {
            let s = Seed::from_quiver(&Quiver::alternating(t.parse().unwrap()).unwrap());
            for _ in 0..20 {
                let path: Vec<usize> = (0..8)
                    .map(|_| rand::Rng::gen_range(&mut rng, 0..s.rank()))
                    .collect();
                let fwd = s.mutate_sequence(&path).unwrap();
                assert_eq!(
                    fwd.g_vectors(),
                    &g_vectors_by_base_change(&s, &path).unwrap()[..],
                    "{t} {path:?}"
                );
            }
        }
    }

    #[test]
    fn block_mutation_is_order_independent() {
        let s = Seed::from_quiver(&Quiver::alternating("D5".parse().unwrap()).unwrap());
        let a = s.mutate_block(&[1, 3, 4]).unwrap();
        let b = s.mutate_block(&[4, 1, 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(s.mutate_block(&[1]).unwrap(), s.mutate(1).unwrap());
        assert_eq!(s.mutate_block(&[]).unwrap(), s);
        assert!(matches!(
            s.mutate_block(&[0, 1]),
            Err(Error::Adjacent(0, 1))
        ));
    }

    #[test]
    fn json_round_trip() {
        let s = Seed::initial(&ValuedQuiver::alternating("B3".parse().unwrap()))
            .mutate_sequence(&[0, 1, 2, 1])
            .unwrap();
        let text = serde_json::to_string(&s.to_json()).unwrap();
        let back = Seed::from_json(serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, s);
        let init = a2();
        let j = serde_json::to_value(init.to_json()).unwrap();
        assert!(j.get("b0").is_none());
        assert_eq!(j["f"], serde_json::json!(["1", "1"]));
    }
}
