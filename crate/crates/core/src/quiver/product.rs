//! Tensor, triangle and square products of quivers.
//!
//! Product vertices are pairs `(i, i')`, numbered row-major:
//! `(i, i') -> i * |Q'| + i'`. All three products are defined on exchange
//! matrices, so they apply verbatim to valued quivers with the product
//! symmetrizer `d(i, i') = d(i) d'(i')`.

use serde::{Deserialize, Serialize};

use super::{ensure_acyclic, Quiver, ValuedQuiver};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Tensor,
    Triangle,
    Square,
}

pub(crate) fn product_labels(left: &[String], right: &[String]) -> Vec<String> {
    left.iter()
        .flat_map(|a| right.iter().map(move |b| format!("({a},{b})")))
        .collect()
}

fn is_source(b: &IntMatrix, i: usize) -> bool {
    b.row(i).iter().all(|&v| v >= 0)
}

fn ensure_alternating(b: &IntMatrix) -> Result<()> {
    for i in 0..b.dim() {
        let row = b.row(i);
        if !(row.iter().all(|&v| v >= 0) || row.iter().all(|&v| v <= 0)) {
            return Err(Error::NotAlternating(i));
        }
    }
    Ok(())
}

/// Exchange matrix of a product. Inputs are checked by the callers.
pub(crate) fn product_matrix(b: &IntMatrix, bp: &IntMatrix, kind: ProductKind) -> IntMatrix {
    let (n, np) = (b.dim(), bp.dim());
    let idx = |i: usize, ip: usize| i * np + ip;
    let mut out = IntMatrix::zeros(n * np);
    for i in 0..n {
        for ip in 0..np {
            for j in 0..n {
                for jp in 0..np {
                    let v = if i == j && ip == jp {
                        0
                    } else if ip == jp {
                        b.get(i, j)
                    } else if i == j {
                        bp.get(ip, jp)
                    } else if kind == ProductKind::Triangle {
                        // Diagonal return arrow (j, j') -> (i, i') for every
                        // pair of arrows i -> j, i' -> j'; valuation
                        // (v2 v2', v1 v1').
                        let (x, y) = (b.get(i, j), bp.get(ip, jp));
                        if x > 0 && y > 0 {
                            -x * y
                        } else if x < 0 && y < 0 {
                            x * y
                        } else {
                            0
                        }
                    } else {
                        0
                    };
                    out.set(idx(i, ip), idx(j, jp), v);
                }
            }
        }
    }
    if kind == ProductKind::Square {
        // Reverse the rows {i} x Q' through sources i of Q and the columns
        // Q x {i'} through sinks i' of Q'. With this orientation, mutating at
        // the (source, sink) vertices turns the square product into the
        // triangle product.
        for i in 0..n {
            for ip in 0..np {
                for j in 0..n {
                    for jp in 0..np {
                        let flip = (i == j && ip != jp && is_source(b, i))
                            || (ip == jp && i != j && !is_source(bp, ip));
                        if flip {
                            let u = idx(i, ip);
                            let w = idx(j, jp);
                            out.set(u, w, -out.get(u, w));
                        }
                    }
                }
            }
        }
    }
    out
}

fn check_factors(b: &IntMatrix, bp: &IntMatrix, kind: ProductKind) -> Result<()> {
    ensure_acyclic(b)?;
    ensure_acyclic(bp)?;
    if kind == ProductKind::Square {
        ensure_alternating(b)?;
        ensure_alternating(bp)?;
    }
    Ok(())
}

pub(crate) fn product(q: &Quiver, qp: &Quiver, kind: ProductKind) -> Result<Quiver> {
    check_factors(q.matrix(), qp.matrix(), kind)?;
    let b = product_matrix(q.matrix(), qp.matrix(), kind);
    Ok(Quiver::from_parts_unchecked(
        product_labels(q.labels(), qp.labels()),
        b,
    ))
}

/// `Q ⊗ Q'`: horizontal copies of `Q`, vertical copies of `Q'`.
pub fn tensor_product(q: &Quiver, qp: &Quiver) -> Result<Quiver> {
    product(q, qp, ProductKind::Tensor)
}

/// `Q ⊠ Q'`: the tensor product plus `r r'` arrows `(j,j') -> (i,i')` for
/// every `r` arrows `i -> j` in `Q` and `r'` arrows `i' -> j'` in `Q'`.
pub fn triangle_product(q: &Quiver, qp: &Quiver) -> Result<Quiver> {
    product(q, qp, ProductKind::Triangle)
}

/// `Q □ Q'` for alternating factors.
pub fn square_product(q: &Quiver, qp: &Quiver) -> Result<Quiver> {
    product(q, qp, ProductKind::Square)
}

impl Quiver {
    pub fn product(&self, other: &Quiver, kind: ProductKind) -> Result<Quiver> {
        product(self, other, kind)
    }
}

impl ValuedQuiver {
    pub fn product(&self, other: &ValuedQuiver, kind: ProductKind) -> Result<ValuedQuiver> {
        check_factors(self.matrix(), other.matrix(), kind)?;
        let b = product_matrix(self.matrix(), other.matrix(), kind);
        let d: Vec<u64> = self
            .symmetrizer()
            .iter()
            .flat_map(|&x| other.symmetrizer().iter().map(move |&y| x * y))
            .collect();
        ValuedQuiver::new(product_labels(self.labels(), other.labels()), b, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;

    fn alt(s: &str) -> Quiver {
        Quiver::alternating(s.parse::<DynkinType>().unwrap()).unwrap()
    }

    // A2 x A2 vertices: 0 = (1,1'), 1 = (1,2'), 2 = (2,1'), 3 = (2,2').

    #[test]
    fn a2_tensor_a2() {
        let t = tensor_product(&alt("A2"), &alt("A2")).unwrap();
        let expected = Quiver::from_arrows(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(t.matrix(), expected.matrix());
        assert_eq!(t.labels()[1], "(1,2)");
    }

    #[test]
    fn a2_triangle_a2_is_square_with_diagonal() {
        let t = triangle_product(&alt("A2"), &alt("A2")).unwrap();
        let expected = Quiver::from_arrows(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 0)]).unwrap();
        assert_eq!(t.matrix(), expected.matrix());
    }

    #[test]
    fn a2_square_a2_is_oriented_four_cycle() {
        let s = square_product(&alt("A2"), &alt("A2")).unwrap();
        // (1,1') -> (2,1') -> (2,2') -> (1,2') -> (1,1')
        let expected = Quiver::from_arrows(4, &[(0, 2), (2, 3), (3, 1), (1, 0)]).unwrap();
        assert_eq!(s.matrix(), expected.matrix());
    }

    #[test]
    fn singleton_factor_is_neutral() {
        let a1 = alt("A1");
        let d5 = alt("D5");
        for kind in [ProductKind::Tensor, ProductKind::Triangle] {
            assert_eq!(a1.product(&d5, kind).unwrap().matrix(), d5.matrix());
        }
        let sq = a1.product(&a1, ProductKind::Square).unwrap();
        assert_eq!(sq.len(), 1);
        assert!(sq.arrows().is_empty());
    }

    #[test]
    fn cyclic_or_non_alternating_factors_are_rejected() {
        let cyc = Quiver::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            tensor_product(&cyc, &alt("A2")),
            Err(Error::OrientedCycle(_))
        ));
        let path = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(tensor_product(&path, &alt("A2")).is_ok());
        assert!(matches!(
            square_product(&path, &alt("A2")),
            Err(Error::NotAlternating(1))
        ));
    }

    #[test]
    fn valued_b2_triangle_b2() {
        let b2 = ValuedQuiver::alternating("B2".parse().unwrap());
        let p = b2.product(&b2, ProductKind::Triangle).unwrap();
        // diagonal (2,2) -> (1,1) with valuation (1,4)
        assert!(p.arrows().contains(&(3, 0, (1, 4))));
        assert!(p.arrows().contains(&(0, 1, (2, 1))));
        assert_eq!(p.symmetrizer(), &[1, 2, 2, 4]);
    }
}
