//! Simply laced lifts of the non simply laced Dynkin types.
//!
//! | folded | lifted     | group                          |
//! |--------|------------|--------------------------------|
//! | `B_n`  | `A_{2n-1}` | end swap                       |
//! | `C_n`  | `D_{n+1}`  | swap of the two short arms     |
//! | `F_4`  | `E_6`      | diagram flip                   |
//! | `G_2`  | `D_4`      | 3-rotation of the leaves       |
//!
//! Lifted vertices are numbered with one representative per orbit first, in
//! folded vertex order, followed by the remaining copies. Copies are labelled
//! with primes: `1`, `1'`, `1''`.

use super::action::{GroupAction, Permutation};
use super::{Quiver, ValuedQuiver};
use crate::dynkin::{DynkinType, Family};
use crate::error::Result;
use crate::matrix::IntMatrix;

/// A folding realization of a Dynkin type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Folding {
    folded: DynkinType,
    lifted: DynkinType,
    action: GroupAction,
    projection: Vec<usize>,
}

impl Folding {
    pub fn folded_type(&self) -> DynkinType {
        self.folded
    }

    pub fn lifted_type(&self) -> DynkinType {
        self.lifted
    }

    /// The alternating lifted quiver with its group action.
    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn lifted_quiver(&self) -> &Quiver {
        self.action.quiver()
    }

    /// Lifted vertex to folded vertex.
    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn is_trivial(&self) -> bool {
        self.action.group_order() == 1
    }

    /// The valued orbit quiver, relabelled with the folded vertex order.
    pub fn folded_quiver(&self) -> Result<ValuedQuiver> {
        let v = self.action.valued_orbit_quiver()?;
        // orbits are listed by smallest element, which is the representative
        ValuedQuiver::from_matrix(v.matrix().clone(), v.symmetrizer().to_vec())
    }
}

/// Catalogue of the standard foldings.
pub struct FoldingCatalogue;

impl FoldingCatalogue {
    /// Folding realizing `t`; the trivial action on `t` itself when `t` is
    /// simply laced.
    pub fn for_type(t: DynkinType) -> Folding {
        let n = t.rank();
        // (copies of each folded vertex, lifted edges, lifted type)
        let (copies, edges, lifted): (Vec<usize>, Vec<(usize, usize)>, DynkinType) =
            match t.family() {
                Family::A | Family::D | Family::E => (vec![1; n], t.edges(), t),
                Family::B => {
                    // path p_0 .. p_{2n-2}; p_k = k for k < n, p_{2n-2-k} = n + k
                    let pos = |a: usize| if a < n { a } else { n + (2 * n - 2 - a) };
                    let edges = (0..2 * n - 2).map(|a| (pos(a), pos(a + 1))).collect();
                    let mut copies = vec![2; n];
                    copies[n - 1] = 1;
                    (copies, edges, dt(Family::A, 2 * n - 1))
                }
                Family::C => {
                    // D_{n+1}: path 0 .. n-1 with the extra leaf n on n-2
                    let mut edges: Vec<_> = (0..n - 1).map(|a| (a, a + 1)).collect();
                    edges.push((n - 2, n));
                    let mut copies = vec![1; n];
                    copies[n - 1] = 2;
                    let lifted = if n == 2 {
                        dt(Family::A, 3)
                    } else {
                        dt(Family::D, n + 1)
                    };
                    (copies, edges, lifted)
                }
                Family::F => {
                    // E6 chain e1 - e3 - e4 - e5 - e6 with e2 on e4:
                    // 0 = e1, 1 = e3, 2 = e4, 3 = e2, 4 = e6, 5 = e5
                    let edges = vec![(0, 1), (1, 2), (2, 5), (5, 4), (2, 3)];
                    (vec![2, 2, 1, 1], edges, dt(Family::E, 6))
                }
                Family::G => {
                    // leaves 0, 2, 3 around the centre 1
                    (vec![3, 1], vec![(0, 1), (1, 2), (1, 3)], dt(Family::D, 4))
                }
            };
        build(t, lifted, &copies, &edges)
    }
}

fn dt(f: Family, r: usize) -> DynkinType {
    DynkinType::new(f, r).expect("catalogue types are valid")
}

fn build(
    folded: DynkinType,
    lifted: DynkinType,
    copies: &[usize],
    edges: &[(usize, usize)],
) -> Folding {
    let n = copies.len();
    // vertex lists per folded vertex: representative first
    let mut fibres: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut next = n;
    for c in 1..copies.iter().copied().max().unwrap_or(1) {
        for (i, &k) in copies.iter().enumerate() {
            if c < k {
                fibres[i].push(next);
                next += 1;
            }
        }
    }
    let total = next;
    let mut projection = vec![0; total];
    let mut labels = vec![String::new(); total];
    for (i, fibre) in fibres.iter().enumerate() {
        for (c, &v) in fibre.iter().enumerate() {
            projection[v] = i;
            labels[v] = format!("{}{}", i + 1, "'".repeat(c));
        }
    }
    let sign = folded.bipartition();
    let mut b = IntMatrix::zeros(total);
    for &(u, v) in edges {
        let s = sign.sign(projection[u]) as i64;
        b.set(u, v, s);
        b.set(v, u, -s);
    }
    let quiver = Quiver::new(labels, b).expect("lifted quiver is skew-symmetric");
    let generator: Vec<usize> = (0..total)
        .map(|v| {
            let fibre = &fibres[projection[v]];
            let c = fibre.iter().position(|&w| w == v).unwrap();
            fibre[(c + 1) % fibre.len()]
        })
        .collect();
    let generator = Permutation::new(generator).expect("fibre rotation is a permutation");
    let generators = if generator.is_identity() {
        Vec::new()
    } else {
        vec![generator]
    };
    let action = GroupAction::new(quiver, generators).expect("catalogue actions are automorphisms");
    Folding {
        folded,
        lifted,
        action,
        projection,
    }
}
