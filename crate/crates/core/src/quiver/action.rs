//! Finite groups acting on quivers by automorphisms, orbit quivers and the
//! valued quotient.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use super::product::{product, ProductKind};
use super::{check_non_adjacent, Quiver, ValuedQuiver};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A permutation of `0..n`, stored as its list of images.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v >= images.len() || seen[v] {
                return Err(Error::input(format!("{images:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Product of disjoint cycles on `0..n`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (a, &v) in cycle.iter().enumerate() {
                if v >= n {
                    return Err(Error::input(format!("cycle entry {v} out of range")));
                }
                images[v] = cycle[(a + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Is `b` invariant under simultaneous row and column permutation?
    pub fn preserves(&self, b: &IntMatrix) -> bool {
        let n = b.dim();
        (0..n).all(|i| (0..n).all(|j| b.get(self.0[i], self.0[j]) == b.get(i, j)))
    }

    /// `(i, i') -> (g i, g' i')` on the row-major product vertex set.
    pub fn product(&self, other: &Permutation) -> Permutation {
        let np = other.len();
        let mut images = vec![0; self.len() * np];
        for i in 0..self.len() {
            for ip in 0..np {
                images[i * np + ip] = self.0[i] * np + other.0[ip];
            }
        }
        Permutation(images)
    }
}

/// A finite group, given by generators, acting on a quiver by automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    quiver: Quiver,
    generators: Vec<Permutation>,
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    order: usize,
}

impl GroupAction {
    pub fn new(quiver: Quiver, generators: Vec<Permutation>) -> Result<Self> {
        let n = quiver.len();
        for g in &generators {
            if g.len() != n {
                return Err(Error::input(format!(
                    "generator acts on {} vertices, quiver has {}",
                    g.len(),
                    n
                )));
            }
            if !g.preserves(quiver.matrix()) {
                return Err(Error::input(format!(
                    "permutation {:?} is not a quiver automorphism",
                    g.images()
                )));
            }
        }
        let (orbits, orbit_of) = orbits(n, &generators);
        let order = group_order(n, &generators);
        Ok(GroupAction {
            quiver,
            generators,
            orbits,
            orbit_of,
            order,
        })
    }

    pub fn trivial(quiver: Quiver) -> Self {
        Self::new(quiver, Vec::new()).expect("the trivial group acts on every quiver")
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Orbits, each sorted, listed by smallest element.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, v: usize) -> usize {
        self.orbit_of[v]
    }

    /// Vertex to orbit index.
    pub fn projection(&self) -> &[usize] {
        &self.orbit_of
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    /// `|G| / |orbit|`, the common stabilizer order of the orbit's vertices.
    pub fn stabilizer_order(&self, orbit: usize) -> usize {
        self.order / self.orbits[orbit].len()
    }

    /// Same group acting on another quiver on the same vertex set.
    pub fn with_quiver(&self, quiver: Quiver) -> Result<Self> {
        if quiver.len() != self.quiver.len() {
            return Err(Error::input(
                "quiver size differs from the acting vertex set",
            ));
        }
        for g in &self.generators {
            if !g.preserves(quiver.matrix()) {
                return Err(Error::input(format!(
                    "permutation {:?} is not a quiver automorphism",
                    g.images()
                )));
            }
        }
        Ok(GroupAction {
            quiver,
            ..self.clone()
        })
    }

    /// Mutation at all vertices of an orbit. The orbit must not contain
    /// adjacent vertices; the result is again acted on by the group.
    pub fn mutate_orbit(&self, orbit: usize) -> Result<Self> {
        let set = self
            .orbits
            .get(orbit)
            .ok_or_else(|| Error::UnknownVertex(format!("orbit {orbit}")))?;
        check_non_adjacent(self.quiver.matrix(), set)?;
        let q = self.quiver.mutate_set(set)?;
        Ok(GroupAction {
            quiver: q,
            ..self.clone()
        })
    }

    /// `G x G'` acting coordinatewise on a product of the two quivers.
    pub fn product(&self, other: &GroupAction, kind: ProductKind) -> Result<Self> {
        let q = product(&self.quiver, &other.quiver, kind)?;
        let id = Permutation::identity(self.quiver.len());
        let idp = Permutation::identity(other.quiver.len());
        let mut generators: Vec<Permutation> =
            self.generators.iter().map(|g| g.product(&idp)).collect();
        generators.extend(other.generators.iter().map(|g| id.product(g)));
        Self::new(q, generators)
    }

    /// Presence quiver on orbits: `I -> J` iff some arrow `ĩ -> j̃` exists.
    pub fn orbit_quiver(&self) -> OrbitQuiver {
        let b = self.quiver.matrix();
        let mut arrows = BTreeSet::new();
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                if b.get(i, j) > 0 {
                    arrows.insert((self.orbit_of[i], self.orbit_of[j]));
                }
            }
        }
        OrbitQuiver {
            size: self.orbits.len(),
            arrows,
        }
    }

    /// The orbit quiver has neither loops nor 2-cycles.
    pub fn is_admissible(&self) -> bool {
        let o = self.orbit_quiver();
        !o.has_loop() && !o.has_two_cycle()
    }

    /// Valued quotient: `b_IJ = Σ_{ĩ ∈ I} b̃_{ĩ j̃}` for any `j̃ ∈ J`, and
    /// `d(I)` the stabilizer order. Orbits are labelled `{a,b,...}`.
    pub fn valued_orbit_quiver(&self) -> Result<ValuedQuiver> {
        let o = self.orbit_quiver();
        if let Some(i) = (0..o.size).find(|&i| o.has_arrow(i, i)) {
            return Err(Error::NotAdmissible(format!(
                "orbit {} carries a loop",
                self.orbit_label(i)
            )));
        }
        if let Some((i, j)) = o.two_cycle() {
            return Err(Error::NotAdmissible(format!(
                "2-cycle between orbits {} and {}",
                self.orbit_label(i),
                self.orbit_label(j)
            )));
        }
        let b = self.quiver.matrix();
        let m = self.orbits.len();
        let mut vb = IntMatrix::zeros(m);
        for (a, orbit_i) in self.orbits.iter().enumerate() {
            for (c, orbit_j) in self.orbits.iter().enumerate() {
                let rep = orbit_j[0];
                vb.set(a, c, orbit_i.iter().map(|&i| b.get(i, rep)).sum());
            }
        }
        let d = (0..m).map(|o| self.stabilizer_order(o) as u64).collect();
        let labels = (0..m).map(|o| self.orbit_label(o)).collect();
        ValuedQuiver::new(labels, vb, d)
            .map_err(|e| Error::NotAdmissible(format!("quotient is not a valued quiver: {e}")))
    }

    fn orbit_label(&self, o: usize) -> String {
        let names: Vec<&str> = self.orbits[o]
            .iter()
            .map(|&v| self.quiver.label(v))
            .collect();
        format!("{{{}}}", names.join(","))
    }
}

fn orbits(n: usize, generators: &[Permutation]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut orbit_of = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut orbit = vec![start];
        orbit_of[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for g in generators {
                let w = g.apply(v);
                if orbit_of[w] == usize::MAX {
                    orbit_of[w] = id;
                    orbit.push(w);
                    queue.push_back(w);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    (out, orbit_of)
}

fn group_order(n: usize, generators: &[Permutation]) -> usize {
    let mut seen: HashSet<Permutation> = HashSet::from([Permutation::identity(n)]);
    let mut queue = VecDeque::from([Permutation::identity(n)]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

/// Orbit quiver as an arrow-presence relation. It may contain loops and
/// 2-cycles, which is exactly what admissibility rules out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitQuiver {
    size: usize,
    arrows: BTreeSet<(usize, usize)>,
}

impl OrbitQuiver {
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows.iter().copied()
    }

    pub fn has_arrow(&self, i: usize, j: usize) -> bool {
        self.arrows.contains(&(i, j))
    }

    pub fn has_loop(&self) -> bool {
        self.arrows.iter().any(|&(i, j)| i == j)
    }

    fn two_cycle(&self) -> Option<(usize, usize)> {
        self.arrows
            .iter()
            .copied()
            .find(|&(i, j)| i < j && self.arrows.contains(&(j, i)))
    }

    pub fn has_two_cycle(&self) -> bool {
        self.two_cycle().is_some()
    }
}

impl fmt::Display for OrbitQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in &self.arrows {
            writeln!(f, "{} -> {}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labelled(labels: &[&str], arrows: &[(usize, usize)]) -> Quiver {
        let q = Quiver::from_arrows(labels.len(), arrows).unwrap();
        Quiver::new(
            labels.iter().map(|s| s.to_string()).collect(),
            q.matrix().clone(),
        )
        .unwrap()
    }

    const HEX: [&str; 6] = ["1", "2", "3", "1'", "2'", "3'"];

    fn antipode() -> Permutation {
        Permutation::from_cycles(6, &[&[0, 3], &[1, 4], &[2, 5]]).unwrap()
    }

    /// The oriented hexagon 1 -> 2 -> 3 -> 1' -> 2' -> 3' -> 1.
    fn admissible_hexagon() -> GroupAction {
        let q = labelled(&HEX, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        GroupAction::new(q, vec![antipode()]).unwrap()
    }

    #[test]
    fn hexagon_with_antipodal_action() {
        let a = admissible_hexagon();
        assert!(a.is_admissible());
        assert_eq!(a.orbits().len(), 3);
        let m = a.mutate_orbit(2).unwrap();
        // 3 -> 2, 2 -> 1', 1' -> 3, 1' -> 2', 1 -> 2, 1 -> 3', 2' -> 1, 3' -> 2'
        let expected = labelled(
            &HEX,
            &[
                (2, 1),
                (1, 3),
                (3, 2),
                (3, 4),
                (0, 1),
                (0, 5),
                (4, 0),
                (5, 4),
            ],
        );
        assert_eq!(m.quiver(), &expected);
        let o = m.orbit_quiver();
        assert!(o.has_two_cycle());
        assert!(!o.has_loop());
        assert!(!m.is_admissible());
        assert!(matches!(
            m.valued_orbit_quiver(),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn trivial_action_gives_the_quiver() {
        let q = Quiver::alternating("D4".parse().unwrap()).unwrap();
        let a = GroupAction::trivial(q.clone());
        assert!(a.is_admissible());
        assert_eq!(a.group_order(), 1);
        let v = a.valued_orbit_quiver().unwrap();
        assert_eq!(v.matrix(), q.matrix());
        assert_eq!(v.symmetrizer(), &[1, 1, 1, 1]);
        let o = a.orbit_quiver();
        let expected: Vec<_> = q.arrows().into_iter().map(|(i, j, _)| (i, j)).collect();
        assert_eq!(o.arrows().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn a3_end_swap_folds_to_b2() {
        // 1 -> 2 <- 1'
        let q = labelled(&["1", "2", "1'"], &[(0, 1), (2, 1)]);
        let a =
            GroupAction::new(q, vec![Permutation::from_cycles(3, &[&[0, 2]]).unwrap()]).unwrap();
        let o = a.orbit_quiver();
        assert_eq!(o.arrows().collect::<Vec<_>>(), vec![(0, 1)]);
        let v = a.valued_orbit_quiver().unwrap();
        assert_eq!(v.arrows(), vec![(0, 1, (2, 1))]);
        assert_eq!(v.symmetrizer(), &[1, 2]);
        assert_eq!(v.labels(), &["{1,1'}".to_string(), "{2}".to_string()]);
    }

    #[test]
    fn d4_leaf_rotation_folds_to_g2() {
        // leaves 0, 2, 3 pointing at the centre 1
        let q = Quiver::from_arrows(4, &[(0, 1), (2, 1), (3, 1)]).unwrap();
        let rot = Permutation::from_cycles(4, &[&[0, 2, 3]]).unwrap();
        let a = GroupAction::new(q, vec![rot]).unwrap();
        assert_eq!(a.group_order(), 3);
        let v = a.valued_orbit_quiver().unwrap();
        assert_eq!(v.arrows(), vec![(0, 1, (3, 1))]);
        assert_eq!(v.symmetrizer(), &[1, 3]);
    }

    #[test]
    fn non_automorphisms_are_rejected() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        let swap = Permutation::from_cycles(3, &[&[0, 2]]).unwrap();
        assert!(GroupAction::new(q, vec![swap]).is_err());
        assert!(Permutation::new(vec![0, 0]).is_err());
    }

    #[test]
    fn product_action_orders_multiply() {
        let q = Quiver::from_arrows(4, &[(0, 1), (2, 1), (3, 1)]).unwrap();
        let rot = Permutation::from_cycles(4, &[&[0, 2, 3]]).unwrap();
        let g2 = GroupAction::new(q, vec![rot]).unwrap();
        let a3 = GroupAction::new(
            Quiver::from_arrows(3, &[(0, 1), (2, 1)]).unwrap(),
            vec![Permutation::from_cycles(3, &[&[0, 2]]).unwrap()],
        )
        .unwrap();
        let p = g2.product(&a3, ProductKind::Triangle).unwrap();
        assert_eq!(p.group_order(), 6);
        assert_eq!(p.orbits().len(), 4);
        assert!(p.is_admissible());
        let v = p.valued_orbit_quiver().unwrap();
        assert_eq!(v.symmetrizer(), &[1, 2, 3, 6]);
    }
}
