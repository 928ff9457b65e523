//! `(Q,Q')`-constrained quivers: product-shaped quivers whose every square
//! is one of the two standard shapes, and their source-sink vertices.

use super::product::{product_matrix, ProductKind};
use super::Quiver;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Vertex set `Q_0 x Q'_0` numbered row-major.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ProductShape {
    pub left: usize,
    pub right: usize,
}

impl ProductShape {
    pub fn new(left: usize, right: usize) -> Self {
        ProductShape { left, right }
    }

    pub fn len(&self) -> usize {
        self.left * self.right
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn index(&self, i: usize, ip: usize) -> usize {
        i * self.right + ip
    }

    #[inline]
    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.right, v % self.right)
    }

    pub fn kind(&self, u: usize, v: usize) -> ArrowKind {
        let (i, ip) = self.coords(u);
        let (j, jp) = self.coords(v);
        if ip == jp {
            ArrowKind::Horizontal
        } else if i == j {
            ArrowKind::Vertical
        } else {
            ArrowKind::Diagonal
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArrowKind {
    /// Same `Q'` coordinate: a copy of an arrow of `Q`.
    Horizontal,
    /// Same `Q` coordinate.
    Vertical,
    Diagonal,
}

use ArrowKind::{Diagonal as D, Horizontal as H, Vertical as V};

// Corners: 0 = top left, 1 = top right, 2 = bottom left, 3 = bottom right.
const SQUARE_WITH_DIAGONAL: [(usize, usize, ArrowKind); 5] =
    [(0, 1, H), (1, 2, D), (2, 0, V), (2, 3, H), (3, 1, V)];
const ORIENTED_SQUARE: [(usize, usize, ArrowKind); 4] =
    [(0, 1, H), (1, 3, V), (3, 2, H), (2, 0, V)];

const PERMUTATIONS_4: [[usize; 4]; 24] = {
    let mut out = [[0usize; 4]; 24];
    let mut n = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                if a != b && a != c && b != c && a + b + c <= 6 {
                    let d = 6 - a - b - c;
                    if d < 4 && d != a && d != b && d != c {
                        out[n] = [a, b, c, d];
                        n += 1;
                    }
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

/// Is the full subquiver on `corners` isomorphic to `template`, with arrow
/// kinds preserved?
fn matches_template(
    r: &IntMatrix,
    shape: ProductShape,
    corners: [usize; 4],
    template: &[(usize, usize, ArrowKind)],
) -> bool {
    let actual: usize = (0..4)
        .flat_map(|a| (0..4).map(move |b| (a, b)))
        .filter(|&(a, b)| r.get(corners[a], corners[b]) > 0)
        .count();
    if actual != template.len() {
        return false;
    }
    PERMUTATIONS_4.iter().any(|perm| {
        template.iter().all(|&(s, t, kind)| {
            let (u, v) = (corners[perm[s]], corners[perm[t]]);
            r.get(u, v) > 0 && shape.kind(u, v) == kind
        })
    })
}

/// Reason why `r` is not `(Q,Q')`-constrained, or `None` if it is.
///
/// Works on exchange matrices so that valued products can be checked by
/// arrow presence; multiplicities are compared exactly on the non diagonal
/// part, and diagonal arrows must be simple when `r` is skew-symmetric.
pub(crate) fn constrained_violation(
    r: &IntMatrix,
    q: &IntMatrix,
    qp: &IntMatrix,
) -> Option<String> {
    let shape = ProductShape::new(q.dim(), qp.dim());
    if r.dim() != shape.len() {
        return Some(format!(
            "vertex count {} differs from {}x{}",
            r.dim(),
            shape.left,
            shape.right
        ));
    }
    let tensor = product_matrix(q, qp, ProductKind::Tensor);
    let simply_laced = r.is_skew_symmetric();
    let n = r.dim();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            match shape.kind(u, v) {
                ArrowKind::Diagonal => {
                    if r.get(u, v) == 0 {
                        continue;
                    }
                    let (i, ip) = shape.coords(u);
                    let (j, jp) = shape.coords(v);
                    if q.get(i, j) == 0 || qp.get(ip, jp) == 0 {
                        return Some(format!("diagonal arrow {u}-{v} outside every square"));
                    }
                    if simply_laced && r.get(u, v).abs() != 1 {
                        return Some(format!("multiple diagonal arrow {u}-{v}"));
                    }
                }
                _ => {
                    if r.get(u, v).abs() != tensor.get(u, v).abs() {
                        return Some(format!(
                            "non diagonal part differs from the tensor product at {u}-{v}"
                        ));
                    }
                }
            }
        }
    }
    for i in 0..shape.left {
        for j in 0..shape.left {
            if q.get(i, j) <= 0 {
                continue;
            }
            for ip in 0..shape.right {
                for jp in 0..shape.right {
                    if qp.get(ip, jp) <= 0 {
                        continue;
                    }
                    let corners = [
                        shape.index(i, ip),
                        shape.index(i, jp),
                        shape.index(j, ip),
                        shape.index(j, jp),
                    ];
                    if !matches_template(r, shape, corners, &SQUARE_WITH_DIAGONAL)
                        && !matches_template(r, shape, corners, &ORIENTED_SQUARE)
                    {
                        return Some(format!(
                            "square on {:?} matches neither standard shape",
                            corners
                        ));
                    }
                }
            }
        }
    }
    None
}

fn check_size(r: &Quiver, q: &Quiver, qp: &Quiver) -> Result<ProductShape> {
    let shape = ProductShape::new(q.len(), qp.len());
    if r.len() != shape.len() {
        return Err(Error::input(format!(
            "quiver has {} vertices, expected {} x {}",
            r.len(),
            q.len(),
            qp.len()
        )));
    }
    Ok(shape)
}

/// True iff `r` is `(Q,Q')`-constrained: its non diagonal subquiver has the
/// underlying graph of `Q ⊗ Q'`, and every square spanned by arrows
/// `i -> j`, `i' -> j'` is either the square with one diagonal or the
/// oriented square (horizontal, vertical and diagonal roles preserved).
/// Diagonal arrows outside squares are rejected as well.
pub fn is_constrained(r: &Quiver, q: &Quiver, qp: &Quiver) -> Result<bool> {
    check_size(r, q, qp)?;
    Ok(constrained_violation(r.matrix(), q.matrix(), qp.matrix()).is_none())
}

fn has_diagonal(r: &IntMatrix, shape: ProductShape, v: usize) -> bool {
    (0..r.dim()).any(|w| shape.kind(v, w) == ArrowKind::Diagonal && r.get(v, w) != 0)
}

fn slice_vertices(r: &IntMatrix, shape: ProductShape, horizontal_source: bool) -> Vec<usize> {
    (0..shape.len())
        .filter(|&v| has_slice_role(r, shape, v, horizontal_source))
        .collect()
}

/// Source (or sink, if `horizontal_source` is false) of its horizontal
/// slice, the opposite in its vertical slice, and free of diagonals.
pub(crate) fn has_slice_role(
    r: &IntMatrix,
    shape: ProductShape,
    v: usize,
    horizontal_source: bool,
) -> bool {
    let (i, ip) = shape.coords(v);
    // sign of arrows leaving v inside its horizontal / vertical slice
    let h_ok = (0..shape.left).all(|j| {
        let x = r.get(v, shape.index(j, ip));
        if horizontal_source {
            x >= 0
        } else {
            x <= 0
        }
    });
    let v_ok = (0..shape.right).all(|jp| {
        let x = r.get(v, shape.index(i, jp));
        if horizontal_source {
            x <= 0
        } else {
            x >= 0
        }
    });
    h_ok && v_ok && !has_diagonal(r, shape, v)
}

/// Vertices that are sources of their horizontal slice, sinks of their
/// vertical slice and incident to no diagonal arrow.
pub fn source_sink_vertices(r: &Quiver, q: &Quiver, qp: &Quiver) -> Result<Vec<usize>> {
    let shape = check_size(r, q, qp)?;
    if let Some(why) = constrained_violation(r.matrix(), q.matrix(), qp.matrix()) {
        return Err(Error::input(format!("quiver is not constrained: {why}")));
    }
    Ok(slice_vertices(r.matrix(), shape, true))
}

/// Sinks of their horizontal slice, sources of their vertical slice, with
/// no diagonal arrow. These are the vertices mutated along `μ_⊠`.
pub fn sink_source_vertices(r: &Quiver, q: &Quiver, qp: &Quiver) -> Result<Vec<usize>> {
    let shape = check_size(r, q, qp)?;
    if let Some(why) = constrained_violation(r.matrix(), q.matrix(), qp.matrix()) {
        return Err(Error::input(format!("quiver is not constrained: {why}")));
    }
    Ok(slice_vertices(r.matrix(), shape, false))
}

/// Full subquiver on `{(j, i') : j in Q_0}`, as a matrix indexed by `j`.
pub fn horizontal_slice(r: &IntMatrix, shape: ProductShape, ip: usize) -> IntMatrix {
    let idx: Vec<usize> = (0..shape.left).map(|j| shape.index(j, ip)).collect();
    r.submatrix(&idx)
}

/// Full subquiver on `{(i, j') : j' in Q'_0}`, indexed by `j'`.
pub fn vertical_slice(r: &IntMatrix, shape: ProductShape, i: usize) -> IntMatrix {
    let idx: Vec<usize> = (0..shape.right).map(|jp| shape.index(i, jp)).collect();
    r.submatrix(&idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{square_product, tensor_product, triangle_product};

    fn alt(s: &str) -> Quiver {
        Quiver::alternating(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn all_permutations_are_distinct() {
        let mut v: Vec<_> = PERMUTATIONS_4.to_vec();
        v.sort();
        v.dedup();
        assert_eq!(v.len(), 24);
    }

    #[test]
    fn products_are_constrained_but_tensor_is_not() {
        let (q, qp) = (alt("A2"), alt("A2"));
        assert!(is_constrained(&triangle_product(&q, &qp).unwrap(), &q, &qp).unwrap());
        assert!(is_constrained(&square_product(&q, &qp).unwrap(), &q, &qp).unwrap());
        assert!(!is_constrained(&tensor_product(&q, &qp).unwrap(), &q, &qp).unwrap());
        let (q, qp) = (alt("A4"), alt("D5"));
        assert!(is_constrained(&triangle_product(&q, &qp).unwrap(), &q, &qp).unwrap());
        assert!(is_constrained(&square_product(&q, &qp).unwrap(), &q, &qp).unwrap());
        assert!(!is_constrained(&tensor_product(&q, &qp).unwrap(), &q, &qp).unwrap());
    }

    #[test]
    fn size_mismatch_is_an_input_error() {
        let q = alt("A2");
        assert!(is_constrained(&q, &q, &q).is_err());
    }

    #[test]
    fn a2_triangle_a2_source_sinks() {
        let (q, qp) = (alt("A2"), alt("A2"));
        let r = triangle_product(&q, &qp).unwrap();
        // (1,2') is a source of its row, a sink of its column, off the diagonal
        assert_eq!(source_sink_vertices(&r, &q, &qp).unwrap(), vec![1]);
        assert_eq!(sink_source_vertices(&r, &q, &qp).unwrap(), vec![2]);
        assert!(source_sink_vertices(&tensor_product(&q, &qp).unwrap(), &q, &qp).is_err());
    }

    #[test]
    fn mutation_at_source_sink_stays_constrained() {
        let (q, qp) = (alt("A4"), alt("D5"));
        let r = triangle_product(&q, &qp).unwrap();
        let shape = ProductShape::new(q.len(), qp.len());
        let ss = source_sink_vertices(&r, &q, &qp).unwrap();
        assert!(!ss.is_empty());
        for (a, &u) in ss.iter().enumerate() {
            for &w in &ss[..a] {
                assert_eq!(r.matrix().get(u, w), 0, "source-sinks {u},{w} linked");
            }
        }
        for &v in &ss {
            let m = r.mutate(v).unwrap();
            assert!(is_constrained(&m, &q, &qp).unwrap());
            let (i, ip) = shape.coords(v);
            assert_eq!(
                horizontal_slice(m.matrix(), shape, ip),
                horizontal_slice(r.matrix(), shape, ip).mutate(i)
            );
            assert_eq!(
                vertical_slice(m.matrix(), shape, i),
                vertical_slice(r.matrix(), shape, i).mutate(ip)
            );
        }
    }
}
