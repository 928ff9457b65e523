//! The composite mutations `μ_□` and `μ_⊠` as ordered vertex blocks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quiver::ProductShape;

/// All vertices `(i, i')` with `ε(i) = left`, `ε(i') = right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MutationBlock {
    pub left: i8,
    pub right: i8,
    pub vertices: Vec<usize>,
}

/// Blocks in application order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MutationSequence {
    pub blocks: Vec<MutationBlock>,
}

impl MutationSequence {
    pub fn flat(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .flat_map(|b| b.vertices.iter().copied())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.vertices.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `+1` for sources (isolated vertices included), `-1` for sinks.
pub fn source_signs(b: &IntMatrix) -> Result<Vec<i8>> {
    (0..b.dim())
        .map(|i| {
            let row = b.row(i);
            if row.iter().all(|&v| v >= 0) {
                Ok(1)
            } else if row.iter().all(|&v| v <= 0) {
                Ok(-1)
            } else {
                Err(Error::NotAlternating(i))
            }
        })
        .collect()
}

fn blocks(b: &IntMatrix, bp: &IntMatrix, order: [(i8, i8); 4]) -> Result<MutationSequence> {
    let eps = source_signs(b)?;
    let epsp = source_signs(bp)?;
    let shape = ProductShape::new(eps.len(), epsp.len());
    let blocks = order
        .iter()
        .map(|&(s, sp)| MutationBlock {
            left: s,
            right: sp,
            vertices: (0..shape.len())
                .filter(|&v| {
                    let (i, ip) = shape.coords(v);
                    eps[i] == s && epsp[ip] == sp
                })
                .collect(),
        })
        .collect();
    Ok(MutationSequence { blocks })
}

/// `μ_□ = μ_{-,-} μ_{+,+} μ_{-,+} μ_{+,-}`: blocks `(+,-)`, `(-,+)`,
/// `(+,+)`, `(-,-)` in that order.
pub fn mu_square_sequence(b: &IntMatrix, bp: &IntMatrix) -> Result<MutationSequence> {
    blocks(b, bp, [(1, -1), (-1, 1), (1, 1), (-1, -1)])
}

/// `μ_⊠ = μ_{+,-} μ_{-,-} μ_{+,+} μ_{-,+}`: blocks `(-,+)`, `(+,+)`,
/// `(-,-)`, `(+,-)` in that order.
pub fn mu_boxtimes_sequence(b: &IntMatrix, bp: &IntMatrix) -> Result<MutationSequence> {
    blocks(b, bp, [(-1, 1), (1, 1), (-1, -1), (1, -1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{square_product, triangle_product, Quiver};

    fn alt(s: &str) -> Quiver {
        Quiver::alternating(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a2_sequences_fix_their_products() {
        let (q, qp) = (alt("A2"), alt("A2"));
        let sq = mu_square_sequence(q.matrix(), qp.matrix()).unwrap();
        assert!(sq.blocks.iter().all(|b| b.vertices.len() == 1));
        let s = square_product(&q, &qp).unwrap();
        let mut r = s.clone();
        for b in &sq.blocks {
            r = r.mutate_set(&b.vertices).unwrap();
        }
        assert_eq!(r, s);

        let bt = mu_boxtimes_sequence(q.matrix(), qp.matrix()).unwrap();
        let t = triangle_product(&q, &qp).unwrap();
        let mut r = t.clone();
        for b in &bt.blocks {
            r = r.mutate_set(&b.vertices).unwrap();
        }
        assert_eq!(r, t);
    }

    #[test]
    fn every_vertex_once_in_its_sign_block() {
        let (q, qp) = (alt("A4"), alt("D5"));
        let seq = mu_boxtimes_sequence(q.matrix(), qp.matrix()).unwrap();
        let mut flat = seq.flat();
        flat.sort();
        assert_eq!(flat, (0..20).collect::<Vec<_>>());
        let shape = ProductShape::new(4, 5);
        for b in &seq.blocks {
            for &v in &b.vertices {
                let (i, ip) = shape.coords(v);
                assert_eq!(q.source_sign(i), b.left);
                assert_eq!(qp.source_sign(ip), b.right);
            }
        }
    }

    #[test]
    fn a1_boxtimes_a1_is_a_single_vertex() {
        let a1 = alt("A1");
        assert_eq!(
            mu_boxtimes_sequence(a1.matrix(), a1.matrix())
                .unwrap()
                .flat(),
            vec![0]
        );
    }

    #[test]
    fn non_alternating_factor_is_rejected() {
        let path = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            mu_square_sequence(path.matrix(), alt("A2").matrix()),
            Err(Error::NotAlternating(1))
        ));
    }
}
