//! Dynkin diagrams of finite type.
//!
//! Vertex numbering (0-based internally, printed 1-based):
//!
//! * `A_n`: the path `1 - 2 - ... - n`.
//! * `B_n`, `C_n`: the path `1 - ... - n`, multiple bond between `n-1` and `n`.
//! * `D_n`: the path `1 - ... - (n-1)` with `n` attached to `n-2` (fork at the end).
//! * `E_n`: Bourbaki, the chain `1 - 3 - 4 - ... - n` with `2` attached to `4`.
//! * `F_4`: the path `1 - 2 - 3 - 4`, double bond between `2` and `3`.
//! * `G_2`: `1 - 2`, triple bond.
//!
//! For non simply laced types the orientation of the Cartan matrix is the one
//! obtained by folding (see [`crate::quiver::FoldingCatalogue`]): the incidence entry `a_ij` is
//! the bond multiplicity exactly when `j` carries the larger symmetrizer
//! value. Concretely `a_{n-1,n} = 2` for `B_n`, `a_{n,n-1} = 2` for `C_n`,
//! `a_{2,3} = 2` for `F_4` and `a_{1,2} = 3` for `G_2` (1-based).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A Dynkin type of finite type, e.g. `A4` or `E6`.
///
/// Only legal (family, rank) combinations can be constructed.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let legal = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if legal {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::input(format!(
                "{}{} is not a Dynkin type",
                family.letter(),
                rank
            )))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Edges of the diagram as `(i, j, a_ij, a_ji)` with `i < j`.
    fn bonds(&self) -> Vec<(usize, usize, i64, i64)> {
        let n = self.rank;
        let path = |len: usize| {
            (0..len.saturating_sub(1))
                .map(|i| (i, i + 1, 1, 1))
                .collect::<Vec<_>>()
        };
        match self.family {
            Family::A => path(n),
            Family::B => {
                let mut e = path(n - 1);
                e.push((n - 2, n - 1, 2, 1));
                e
            }
            Family::C => {
                let mut e = path(n - 1);
                e.push((n - 2, n - 1, 1, 2));
                e
            }
            Family::D => {
                let mut e = path(n - 1);
                e.push((n - 3, n - 1, 1, 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2, 1, 1), (1, 3, 1, 1)];
                e.extend((2..n - 1).map(|i| (i, i + 1, 1, 1)));
                e
            }
            Family::F => vec![(0, 1, 1, 1), (1, 2, 2, 1), (2, 3, 1, 1)],
            Family::G => vec![(0, 1, 3, 1)],
        }
    }

    /// Unordered edges `(i, j)`, `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.bonds()
            .into_iter()
            .map(|(i, j, _, _)| (i, j))
            .collect()
    }

    pub fn cartan_matrix(&self) -> CartanMatrix {
        let a = self.incidence_matrix();
        let n = self.rank;
        let mut c = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                c.set(i, j, if i == j { 2 } else { -a.get(i, j) });
            }
        }
        CartanMatrix(c)
    }

    /// The incidence matrix `A = 2J - C`.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.rank);
        for (i, j, aij, aji) in self.bonds() {
            a.set(i, j, aij);
            a.set(j, i, aji);
        }
        a
    }

    /// Smallest positive integer vector `d` with `diag(d) * C` symmetric.
    pub fn symmetrizer(&self) -> Vec<u64> {
        self.cartan_matrix().symmetrizer()
    }

    /// Proper 2-coloring of the (tree-shaped) diagram with vertex 0 in `I_+`.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.rank;
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut adj = vec![Vec::new(); n];
        for (i, j) in self.edges() {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut queue = VecDeque::from([0usize]);
        color[0] = Some(true);
        while let Some(v) = queue.pop_front() {
            let c = color[v].expect("colored before enqueue");
            for &w in &adj[v] {
                if color[w].is_none() {
                    color[w] = Some(!c);
                    queue.push_back(w);
                }
            }
        }
        let mut plus = BTreeSet::new();
        let mut minus = BTreeSet::new();
        for (v, c) in color.into_iter().enumerate() {
            if c.expect("Dynkin diagrams are connected") {
                plus.insert(v);
            } else {
                minus.insert(v);
            }
        }
        Bipartition { plus, minus }
    }

    /// Simple reflection `s_i` as a matrix acting on root coordinates:
    /// `s_i(v) = v - (sum_j c_ij v_j) alpha_i`.
    pub fn simple_reflection(&self, i: usize) -> IntMatrix {
        let c = self.cartan_matrix();
        let mut s = IntMatrix::identity(self.rank);
        for j in 0..self.rank {
            s.set(i, j, s.get(i, j) - c.0.get(i, j));
        }
        s
    }

    /// Bipartite Coxeter element: all `I_-` reflections are applied before
    /// all `I_+` reflections, i.e. `c = (prod_{I_+} s_i)(prod_{I_-} s_i)`.
    pub fn coxeter_element(&self, b: &Bipartition) -> IntMatrix {
        let mut c = IntMatrix::identity(self.rank);
        for &i in b.minus.iter().chain(b.plus.iter()) {
            c = self.simple_reflection(i).mul(&c);
        }
        c
    }

    /// Coxeter number, computed as the multiplicative order of the bipartite
    /// Coxeter element on the root lattice.
    pub fn coxeter_number(&self) -> usize {
        let c = self.coxeter_element(&self.bipartition());
        let mut power = c.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = c.mul(&power);
            k += 1;
            assert!(
                k <= 4 * self.rank + 8,
                "Coxeter element of {self} has no small order"
            );
        }
        k
    }

    /// Positive roots: closure of the simple roots under the simple
    /// reflections, intersected with the nonnegative orthant.
    pub fn positive_roots(&self) -> BTreeSet<Vec<i64>> {
        let n = self.rank;
        let reflections: Vec<IntMatrix> = (0..n).map(|i| self.simple_reflection(i)).collect();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(r) = queue.pop_front() {
            for s in &reflections {
                let img = s.apply(&r);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        seen.into_iter()
            .filter(|r| r.iter().all(|&x| x >= 0))
            .collect()
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty Dynkin type".into()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::Parse(format!("unknown Dynkin family in {s:?}"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in Dynkin type {s:?}")))?;
        DynkinType::new(family, rank)
    }
}

impl Serialize for DynkinType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DynkinType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix(pub IntMatrix);

impl CartanMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    /// Smallest positive integer `d` with `diag(d) * C` symmetric, found by
    /// propagating `d_j / d_i = c_ij / c_ji` along the (connected) diagram.
    pub fn symmetrizer(&self) -> Vec<u64> {
        use num_integer::Integer;
        let c = &self.0;
        let n = c.dim();
        // rational d as (num, den)
        let mut d: Vec<Option<(u64, u64)>> = vec![None; n];
        if n == 0 {
            return vec![];
        }
        d[0] = Some((1, 1));
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let (p, q) = d[i].unwrap();
            for j in 0..n {
                if j == i || c.get(i, j) == 0 || d[j].is_some() {
                    continue;
                }
                // d_i c_ij = d_j c_ji
                let num = p * c.get(i, j).unsigned_abs();
                let den = q * c.get(j, i).unsigned_abs();
                let g = num.gcd(&den);
                d[j] = Some((num / g, den / g));
                queue.push_back(j);
            }
        }
        let d: Vec<(u64, u64)> = d.into_iter().map(|x| x.unwrap_or((1, 1))).collect();
        let l = d.iter().fold(1u64, |acc, &(_, q)| acc.lcm(&q));
        let ints: Vec<u64> = d.iter().map(|&(p, q)| p * (l / q)).collect();
        let g = ints.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        ints.into_iter().map(|x| x / g).collect()
    }
}

/// Two-coloring `I = I_+ ⊔ I_-` of a Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub plus: BTreeSet<usize>,
    pub minus: BTreeSet<usize>,
}

impl Bipartition {
    /// `+1` for vertices in `I_+`, `-1` for `I_-`.
    pub fn sign(&self, i: usize) -> i8 {
        if self.plus.contains(&i) {
            1
        } else {
            -1
        }
    }
}
