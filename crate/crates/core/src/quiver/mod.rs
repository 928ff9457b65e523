//! Quivers and valued quivers, stored as exchange matrices.
//!
//! A quiver without loops or 2-cycles is the same thing as a skew-symmetric
//! integer matrix `B` with `b_ij = #(i -> j) - #(j -> i)`; a valued quiver is
//! a skew-symmetrizable matrix together with a symmetrizer `d`. Mutation is
//! matrix mutation in both cases.

mod action;
mod constrained;
mod folding;
mod product;

pub use action::{GroupAction, OrbitQuiver, Permutation};
pub(crate) use constrained::{constrained_violation, has_slice_role};
pub use constrained::{
    horizontal_slice, is_constrained, sink_source_vertices, source_sink_vertices, vertical_slice,
    ArrowKind, ProductShape,
};
pub use folding::{Folding, FoldingCatalogue};
pub use product::{square_product, tensor_product, triangle_product, ProductKind};

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn check_labels(labels: &[String], n: usize) -> Result<()> {
    if labels.len() != n {
        return Err(Error::input(format!(
            "{} vertex labels for a {}x{} matrix",
            labels.len(),
            n,
            n
        )));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::input(format!("duplicate vertex label {l:?}")));
        }
    }
    Ok(())
}

fn find_label(labels: &[String], label: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| Error::UnknownVertex(label.to_string()))
}

fn check_vertex(n: usize, k: usize) -> Result<()> {
    if k < n {
        Ok(())
    } else {
        Err(Error::UnknownVertex(format!(
            "index {k} (quiver has {n} vertices)"
        )))
    }
}

/// Returns an error if some two distinct vertices of `set` are joined by an
/// arrow, or if `set` repeats a vertex.
pub(crate) fn check_non_adjacent(b: &IntMatrix, set: &[usize]) -> Result<()> {
    for (a, &i) in set.iter().enumerate() {
        check_vertex(b.dim(), i)?;
        for &j in &set[..a] {
            if i == j {
                return Err(Error::input(format!("vertex {i} repeated in mutation set")));
            }
            if b.get(i, j) != 0 || b.get(j, i) != 0 {
                return Err(Error::Adjacent(j, i));
            }
        }
    }
    Ok(())
}

/// Orientation of a Dynkin diagram in which every vertex of `I_+` is a
/// source and every vertex of `I_-` is a sink.
fn alternating_matrix(t: DynkinType) -> IntMatrix {
    let a = t.incidence_matrix();
    let bip = t.bipartition();
    let n = t.rank();
    let mut b = IntMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            b.set(i, j, bip.sign(i) as i64 * a.get(i, j));
        }
    }
    b
}

/// A finite quiver without loops or 2-cycles.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quiver {
    labels: Vec<String>,
    b: IntMatrix,
}

impl Quiver {
    pub fn new(labels: Vec<String>, b: IntMatrix) -> Result<Self> {
        check_labels(&labels, b.dim())?;
        if !b.is_skew_symmetric() {
            return Err(Error::input(
                "exchange matrix of a quiver must be skew-symmetric",
            ));
        }
        Ok(Quiver { labels, b })
    }

    pub fn from_matrix(b: IntMatrix) -> Result<Self> {
        Self::new(default_labels(b.dim()), b)
    }

    /// Quiver on `n` vertices with the given arrows (repetitions allowed).
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut b = IntMatrix::zeros(n);
        for &(i, j) in arrows {
            check_vertex(n, i)?;
            check_vertex(n, j)?;
            if i == j {
                return Err(Error::input(format!("loop at vertex {i}")));
            }
            b.set(i, j, b.get(i, j) + 1);
            b.set(j, i, b.get(j, i) - 1);
        }
        Self::from_matrix(b)
    }

    /// Alternating quiver of a simply laced Dynkin type: `I_+` are sources.
    pub fn alternating(t: DynkinType) -> Result<Self> {
        if !t.simply_laced() {
            return Err(Error::input(format!(
                "{t} is not simply laced; use ValuedQuiver::alternating"
            )));
        }
        Self::from_matrix(alternating_matrix(t))
    }

    pub(crate) fn from_parts_unchecked(labels: Vec<String>, b: IntMatrix) -> Self {
        debug_assert!(b.is_skew_symmetric());
        Quiver { labels, b }
    }

    pub fn len(&self) -> usize {
        self.b.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        find_label(&self.labels, label)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.b
    }

    /// Arrows as `(source, target, multiplicity)`, sorted by source, target.
    pub fn arrows(&self) -> Vec<(usize, usize, u64)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.b.get(i, j);
                if v > 0 {
                    out.push((i, j, v as u64));
                }
            }
        }
        out
    }

    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        check_vertex(self.len(), k)?;
        Ok(Quiver {
            labels: self.labels.clone(),
            b: self.b.mutate(k),
        })
    }

    /// Composite mutation at a set of pairwise non-adjacent vertices. The
    /// result does not depend on the order of `set`.
    pub fn mutate_set(&self, set: &[usize]) -> Result<Quiver> {
        check_non_adjacent(&self.b, set)?;
        let mut b = self.b.clone();
        for &k in set {
            b = b.mutate(k);
        }
        Ok(Quiver {
            labels: self.labels.clone(),
            b,
        })
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.b.row(i).iter().all(|&v| v >= 0)
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.b.row(i).iter().all(|&v| v <= 0)
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.len()).all(|i| self.is_source(i) || self.is_sink(i))
    }

    pub fn ensure_alternating(&self) -> Result<()> {
        match (0..self.len()).find(|&i| !self.is_source(i) && !self.is_sink(i)) {
            Some(i) => Err(Error::NotAlternating(i)),
            None => Ok(()),
        }
    }

    /// `+1` for sources (isolated vertices count as sources), `-1` for sinks.
    pub fn source_sign(&self, i: usize) -> i8 {
        if self.is_source(i) {
            1
        } else {
            -1
        }
    }

    pub fn ensure_acyclic(&self) -> Result<()> {
        ensure_acyclic(&self.b)
    }

    pub fn full_subquiver(&self, idx: &[usize]) -> Quiver {
        Quiver {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            b: self.b.submatrix(idx),
        }
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            labels: self.labels.clone(),
            b: self.b.neg(),
        }
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            vertices: self.labels.clone(),
            b: self.b.rows(),
            d: None,
        }
    }

    pub fn from_json(j: QuiverJson) -> Result<Self> {
        if let Some(d) = &j.d {
            if d.iter().any(|&x| x != 1) {
                return Err(Error::input(
                    "quiver JSON has a nontrivial symmetrizer; load it as a valued quiver",
                ));
            }
        }
        Quiver::new(j.vertices, IntMatrix::from_rows(j.b)?)
    }
}

pub(crate) fn ensure_acyclic(b: &IntMatrix) -> Result<()> {
    // Kahn's algorithm on the arrow relation b_ij > 0.
    let n = b.dim();
    let mut indeg: Vec<usize> = (0..n)
        .map(|j| (0..n).filter(|&i| b.get(i, j) > 0).count())
        .collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut done = vec![false; n];
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        done[v] = true;
        seen += 1;
        for w in 0..n {
            if b.get(v, w) > 0 {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
    }
    if seen == n {
        Ok(())
    } else {
        Err(Error::OrientedCycle(
            done.iter().position(|d| !d).unwrap_or(0),
        ))
    }
}

fn write_arrows(f: &mut fmt::Formatter<'_>, labels: &[String], b: &IntMatrix) -> fmt::Result {
    let n = b.dim();
    for i in 0..n {
        for j in 0..n {
            let v = b.get(i, j);
            if v > 0 {
                writeln!(f, "{} -> {} ({},{})", labels[i], labels[j], v, -b.get(j, i))?;
            }
        }
    }
    Ok(())
}

/// One arrow per line, `i -> j (v1,v2)` with `v = (b_ij, -b_ji)`, sorted by
/// (source, target) in vertex order.
impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_arrows(f, &self.labels, &self.b)
    }
}

/// Valued quiver: skew-symmetrizable exchange matrix with a symmetrizer.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ValuedQuiver {
    labels: Vec<String>,
    b: IntMatrix,
    d: Vec<u64>,
}

impl ValuedQuiver {
    pub fn new(labels: Vec<String>, b: IntMatrix, d: Vec<u64>) -> Result<Self> {
        check_labels(&labels, b.dim())?;
        if d.len() != b.dim() {
            return Err(Error::input("symmetrizer length does not match the matrix"));
        }
        if d.iter().any(|&x| x == 0) {
            return Err(Error::input("symmetrizer entries must be positive"));
        }
        if !b.is_skew_symmetrized_by(&d) {
            return Err(Error::input("diag(d) * B is not skew-symmetric"));
        }
        // With d > 0 this also forces b_ii = 0, opposite signs of b_ij and
        // b_ji, and v1 d(i) = d(j) v2 for every arrow.
        Ok(ValuedQuiver { labels, b, d })
    }

    pub fn from_matrix(b: IntMatrix, d: Vec<u64>) -> Result<Self> {
        Self::new(default_labels(b.dim()), b, d)
    }

    /// Alternating valued quiver of any Dynkin type: `I_+` are sources and
    /// `|b_ij| = a_ij`.
    pub fn alternating(t: DynkinType) -> Self {
        Self::from_matrix(alternating_matrix(t), t.symmetrizer())
            .expect("Dynkin exchange matrices are skew-symmetrizable")
    }

    pub fn len(&self) -> usize {
        self.b.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        find_label(&self.labels, label)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.b
    }

    pub fn symmetrizer(&self) -> &[u64] {
        &self.d
    }

    /// Arrows `i -> j` with valuation `(b_ij, -b_ji)`.
    pub fn arrows(&self) -> Vec<(usize, usize, (u64, u64))> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.b.get(i, j);
                if v > 0 {
                    out.push((i, j, (v as u64, (-self.b.get(j, i)) as u64)));
                }
            }
        }
        out
    }

    pub fn mutate(&self, k: usize) -> Result<ValuedQuiver> {
        check_vertex(self.len(), k)?;
        Ok(ValuedQuiver {
            labels: self.labels.clone(),
            b: self.b.mutate(k),
            d: self.d.clone(),
        })
    }

    pub fn mutate_set(&self, set: &[usize]) -> Result<ValuedQuiver> {
        check_non_adjacent(&self.b, set)?;
        let mut b = self.b.clone();
        for &k in set {
            b = b.mutate(k);
        }
        Ok(ValuedQuiver {
            labels: self.labels.clone(),
            b,
            d: self.d.clone(),
        })
    }

    pub fn is_simply_laced(&self) -> bool {
        self.b.is_skew_symmetric()
    }

    /// The underlying quiver, when the matrix is skew-symmetric.
    pub fn to_quiver(&self) -> Result<Quiver> {
        Quiver::new(self.labels.clone(), self.b.clone())
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            vertices: self.labels.clone(),
            b: self.b.rows(),
            d: Some(self.d.clone()),
        }
    }

    pub fn from_json(j: QuiverJson) -> Result<Self> {
        let b = IntMatrix::from_rows(j.b)?;
        let d = j.d.unwrap_or_else(|| vec![1; b.dim()]);
        ValuedQuiver::new(j.vertices, b, d)
    }
}

impl From<Quiver> for ValuedQuiver {
    fn from(q: Quiver) -> Self {
        let n = q.len();
        ValuedQuiver {
            labels: q.labels,
            b: q.b,
            d: vec![1; n],
        }
    }
}

impl fmt::Display for ValuedQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_arrows(f, &self.labels, &self.b)
    }
}

/// Wire format: `{"vertices": [...], "b": [[...]], "d": [...]}`; `d` is
/// optional and defaults to all ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    pub b: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<u64>>,
}
