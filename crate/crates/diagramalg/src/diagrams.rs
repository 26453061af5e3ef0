//! Partition diagrams on `n + n'` vertices and their composition calculus.
//!
//! A diagram is a set partition of `{1..n} ∪ {1'..n'}`, drawn with the
//! unprimed vertices on top. Composition stacks two diagrams, merges
//! connected components across the shared middle row by union-find, restricts
//! to the outer boundary, and counts the middle-only components that vanish
//! (each contributes a `δ` factor in the partition algebra).
//!
//! Convention, fixed once for the whole crate: in `compose(a, b)` the LEFT
//! operand sits on top, its primed row glued to `b`'s unprimed row.
//! Permutation products are read the same way (`u.then(v)` applies `u`
//! first), which makes [`perm_to_diagram`] a homomorphism.
//!
//! Ramified diagrams are ordered pairs `(fine, coarse)` with `fine ≤ coarse`
//! in refinement order; both layers are composed over one stacking pass, the
//! fine layer counting removed bones and the coarse layer removed islands.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::partitions::{two_row_ground, GroundElement, SetPartition, UnionFind};
use crate::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] is the 0-based image of 0-based point i
    images: Vec<usize>,
}

impl Permutation {
    /// Builds from 1-based one-line notation, validating bijectivity.
    pub fn from_one_line(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::MalformedPartition(format!(
                    "not a permutation: {images:?}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| v - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition `(i j)` inside `S_n`, 1-based.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Permutation> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::BadIndex(format!("transposition ({i} {j}) in S_{n}")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// `self` followed by `other`: `(self.then(other))(i) = other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next_permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// A partition of `{1..n} ∪ {1'..n'}`, the basis of `P_n(δ')`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionDiagram {
    n: usize,
    partition: SetPartition,
}

impl PartitionDiagram {
    pub fn new(n: usize, partition: SetPartition) -> Result<PartitionDiagram> {
        if partition.ground() != two_row_ground(n) {
            return Err(Error::GroundMismatch(format!(
                "diagram ground must be {{1..{n}}} ∪ {{1'..{n}'}}"
            )));
        }
        Ok(PartitionDiagram { n, partition })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    /// Parses the partition text format, inferring `n` from the elements.
    pub fn parse(text: &str) -> Result<PartitionDiagram> {
        let p = SetPartition::parse(text)?;
        let n = p
            .ground()
            .iter()
            .map(|e| e.index)
            .max()
            .ok_or_else(|| Error::Parse("empty diagram".into()))?;
        PartitionDiagram::new(n, p)
    }

    /// Number of blocks containing both a primed and an unprimed vertex.
    pub fn propagating_count(&self) -> usize {
        self.partition
            .blocks()
            .iter()
            .filter(|b| b.iter().any(|e| e.primed) && b.iter().any(|e| !e.primed))
            .count()
    }

    /// `Some(w)` iff every block is `{i, w(i)'}`.
    pub fn as_permutation(&self) -> Option<Permutation> {
        let mut images = vec![0usize; self.n];
        for block in self.partition.blocks() {
            match block.as_slice() {
                [a, b] if !a.primed && b.primed => images[a.index - 1] = b.index,
                _ => return None,
            }
        }
        Permutation::from_one_line(&images).ok()
    }
}

impl fmt::Display for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)
    }
}

/// The permutation diagram with blocks `{i, w(i)'}`.
pub fn perm_to_diagram(w: &Permutation) -> PartitionDiagram {
    let n = w.len();
    let blocks = (1..=n)
        .map(|i| vec![GroundElement::plain(i), GroundElement::primed(w.image(i))])
        .collect();
    let partition = SetPartition::new(two_row_ground(n), blocks).expect("valid by construction");
    PartitionDiagram { n, partition }
}

/// The special basis elements `1`, `A^{i,j}`, `σ_{i,j}`, `e_i` of `P_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Special {
    One,
    A(usize, usize),
    Sigma(usize, usize),
    E(usize),
}

/// Builds a special element inside `P_n`.
pub fn special(n: usize, kind: Special) -> Result<PartitionDiagram> {
    let pair_ok = |i: usize, j: usize| i >= 1 && i < j && j <= n;
    let mut blocks: Vec<Vec<GroundElement>> = Vec::new();
    let diag = |i: usize| vec![GroundElement::plain(i), GroundElement::primed(i)];
    match kind {
        Special::One => {
            for i in 1..=n {
                blocks.push(diag(i));
            }
        }
        Special::A(i, j) => {
            if !pair_ok(i, j) {
                return Err(Error::BadIndex(format!("A^{{{i},{j}}} needs 1 ≤ i < j ≤ {n}")));
            }
            for k in 1..=n {
                if k == i {
                    blocks.push(vec![
                        GroundElement::plain(i),
                        GroundElement::plain(j),
                        GroundElement::primed(i),
                        GroundElement::primed(j),
                    ]);
                } else if k != j {
                    blocks.push(diag(k));
                }
            }
        }
        Special::Sigma(i, j) => {
            if !pair_ok(i, j) {
                return Err(Error::BadIndex(format!("σ_{{{i},{j}}} needs 1 ≤ i < j ≤ {n}")));
            }
            for k in 1..=n {
                if k == i {
                    blocks.push(vec![GroundElement::plain(i), GroundElement::primed(j)]);
                    blocks.push(vec![GroundElement::plain(j), GroundElement::primed(i)]);
                } else if k != j {
                    blocks.push(diag(k));
                }
            }
        }
        Special::E(i) => {
            if i == 0 || i > n {
                return Err(Error::BadIndex(format!("e_{i} needs 1 ≤ i ≤ {n}")));
            }
            for k in 1..=n {
                if k == i {
                    blocks.push(vec![GroundElement::plain(i)]);
                    blocks.push(vec![GroundElement::primed(i)]);
                } else {
                    blocks.push(diag(k));
                }
            }
        }
    }
    PartitionDiagram::new(n, SetPartition::new(two_row_ground(n), blocks)?)
}

/// Outcome of a diagram composition: the boundary diagram plus the count of
/// middle-layer components isolated from both boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionResult {
    pub diagram: PartitionDiagram,
    pub removed_bones: usize,
}

impl CompositionResult {
    /// The scalar `δ'^removed_bones` carried by the product in `P_n(δ')`.
    pub fn coefficient(&self, delta: &BigRational) -> BigRational {
        power(delta, self.removed_bones)
    }
}

fn power(x: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

// Vertex labels in the stacked picture: 0..n top, n..2n middle, 2n..3n bottom.
fn stack_partition(uf: &mut UnionFind, n: usize, p: &SetPartition, top_offset: usize) {
    // top_offset 0: plain → top row, primed → middle; top_offset n: plain →
    // middle, primed → bottom
    for block in p.blocks() {
        let coord = |e: &GroundElement| {
            if e.primed {
                top_offset + n + (e.index - 1)
            } else {
                top_offset + (e.index - 1)
            }
        };
        let first = coord(&block[0]);
        for e in &block[1..] {
            uf.union(first, coord(e));
        }
    }
}

fn boundary_partition(uf: &mut UnionFind, n: usize) -> (SetPartition, usize) {
    let mut classes: std::collections::HashMap<usize, Vec<GroundElement>> =
        std::collections::HashMap::new();
    for v in 0..3 * n {
        let root = uf.find(v);
        let entry = classes.entry(root).or_default();
        if v < n {
            entry.push(GroundElement::plain(v + 1));
        } else if v >= 2 * n {
            entry.push(GroundElement::primed(v - 2 * n + 1));
        }
    }
    let removed = classes.values().filter(|c| c.is_empty()).count();
    let blocks: Vec<Vec<GroundElement>> = classes.into_values().filter(|c| !c.is_empty()).collect();
    let partition =
        SetPartition::new(two_row_ground(n), blocks).expect("boundary classes cover the ground");
    (partition, removed)
}

/// Composes two diagrams, left operand on top. Returns the boundary diagram
/// and the number of removed middle components.
pub fn compose(a: &PartitionDiagram, b: &PartitionDiagram) -> Result<CompositionResult> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(format!(
            "compose: n = {} vs {}",
            a.n, b.n
        )));
    }
    let n = a.n;
    let mut uf = UnionFind::new(3 * n);
    stack_partition(&mut uf, n, &a.partition, 0);
    stack_partition(&mut uf, n, &b.partition, n);
    let (partition, removed_bones) = boundary_partition(&mut uf, n);
    Ok(CompositionResult {
        diagram: PartitionDiagram { n, partition },
        removed_bones,
    })
}

/// An ordered pair of diagrams with `fine ≤ coarse`: bones inside islands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RamifiedDiagram {
    fine: PartitionDiagram,
    coarse: PartitionDiagram,
}

impl RamifiedDiagram {
    pub fn new(fine: PartitionDiagram, coarse: PartitionDiagram) -> Result<RamifiedDiagram> {
        if fine.n != coarse.n {
            return Err(Error::SizeMismatch(format!(
                "ramified pair: n = {} vs {}",
                fine.n, coarse.n
            )));
        }
        if !fine.partition.refines(&coarse.partition)? {
            return Err(Error::MalformedPartition(format!(
                "not a ramified pair: {} does not refine {}",
                fine.partition, coarse.partition
            )));
        }
        Ok(RamifiedDiagram { fine, coarse })
    }

    pub fn n(&self) -> usize {
        self.fine.n
    }

    pub fn fine(&self) -> &PartitionDiagram {
        &self.fine
    }

    pub fn coarse(&self) -> &PartitionDiagram {
        &self.coarse
    }

    /// The identity pair `(1, 1)`.
    pub fn identity(n: usize) -> RamifiedDiagram {
        let one = perm_to_diagram(&Permutation::identity(n));
        RamifiedDiagram {
            fine: one.clone(),
            coarse: one,
        }
    }

    /// Parses the `fine | coarse` text format.
    pub fn parse(text: &str) -> Result<RamifiedDiagram> {
        let Some((f, c)) = text.split_once('|') else {
            return Err(Error::Parse("expected `fine | coarse`".into()));
        };
        let fine = PartitionDiagram::parse(f.trim())?;
        let coarse = PartitionDiagram::parse(c.trim())?;
        RamifiedDiagram::new(fine, coarse)
    }
}

impl fmt::Display for RamifiedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.fine, self.coarse)
    }
}

/// Outcome of a ramified composition: result pair plus removed bone and
/// island counts (the `δ1`/`δ2` exponents).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamifiedComposition {
    pub diagram: RamifiedDiagram,
    pub removed_bones: usize,
    pub removed_islands: usize,
}

impl RamifiedComposition {
    pub fn coefficient(&self, delta1: &BigRational, delta2: &BigRational) -> BigRational {
        power(delta1, self.removed_bones) * power(delta2, self.removed_islands)
    }
}

/// Composes two ramified diagrams over a single stacking pass: the fine and
/// coarse layers are merged with the same gluing, so the output is a valid
/// pair by construction.
pub fn compose_ramified(
    a: &RamifiedDiagram,
    b: &RamifiedDiagram,
) -> Result<RamifiedComposition> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(format!(
            "compose_ramified: n = {} vs {}",
            a.n(),
            b.n()
        )));
    }
    let n = a.n();
    let mut fine_uf = UnionFind::new(3 * n);
    stack_partition(&mut fine_uf, n, &a.fine.partition, 0);
    stack_partition(&mut fine_uf, n, &b.fine.partition, n);
    let (fine_partition, removed_bones) = boundary_partition(&mut fine_uf, n);

    let mut coarse_uf = UnionFind::new(3 * n);
    stack_partition(&mut coarse_uf, n, &a.coarse.partition, 0);
    stack_partition(&mut coarse_uf, n, &b.coarse.partition, n);
    let (coarse_partition, removed_islands) = boundary_partition(&mut coarse_uf, n);

    let fine = PartitionDiagram {
        n,
        partition: fine_partition,
    };
    let coarse = PartitionDiagram {
        n,
        partition: coarse_partition,
    };
    let diagram = RamifiedDiagram::new(fine, coarse).map_err(|_| {
        Error::InvariantViolation("ramified composition produced fine ⊀ coarse".into())
    })?;
    Ok(RamifiedComposition {
        diagram,
        removed_bones,
        removed_islands,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str) -> PartitionDiagram {
        PartitionDiagram::parse(text).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let u = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(u.image(1), 2);
        assert_eq!(u.then(&u.inverse()), Permutation::identity(3));
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Permutation::identity(3));
        // lexicographic one-line order
        let lines: Vec<Vec<usize>> = all.iter().map(|p| p.one_line()).collect();
        let mut sorted = lines.clone();
        sorted.sort();
        assert_eq!(lines, sorted);
    }

    #[test]
    fn compose_with_identity() {
        let one = perm_to_diagram(&Permutation::identity(2));
        for t in ["{1,2,1',2'}", "{1}{1'}{2,2'}", "{1,2'}{2,1'}"] {
            let x = d(t);
            let r = compose(&one, &x).unwrap();
            assert_eq!(r.diagram, x);
            assert_eq!(r.removed_bones, 0);
            let r = compose(&x, &one).unwrap();
            assert_eq!(r.diagram, x);
            assert_eq!(r.removed_bones, 0);
        }
    }

    #[test]
    fn compose_e1_with_itself_removes_one_component() {
        let e1 = special(2, Special::E(1)).unwrap();
        let r = compose(&e1, &e1).unwrap();
        assert_eq!(r.diagram, e1);
        assert_eq!(r.removed_bones, 1);
    }

    #[test]
    fn sigma_is_an_involution() {
        let s = special(2, Special::Sigma(1, 2)).unwrap();
        let r = compose(&s, &s).unwrap();
        assert_eq!(r.diagram, special(2, Special::One).unwrap());
        assert_eq!(r.removed_bones, 0);
    }

    #[test]
    fn a_is_idempotent_without_removals() {
        let a = special(2, Special::A(1, 2)).unwrap();
        let r = compose(&a, &a).unwrap();
        assert_eq!(r.diagram, a);
        assert_eq!(r.removed_bones, 0);
    }

    #[test]
    fn special_element_shapes() {
        assert_eq!(special(2, Special::A(1, 2)).unwrap().to_string(), "{1,2,1',2'}");
        assert_eq!(special(2, Special::One).unwrap().to_string(), "{1,1'}{2,2'}");
        // canonical block order: least elements 1 < 2 < 3 < 2'
        assert_eq!(
            special(3, Special::E(2)).unwrap().to_string(),
            "{1,1'}{2}{3,3'}{2'}"
        );
        assert_eq!(
            special(2, Special::Sigma(1, 2)).unwrap().to_string(),
            "{1,2'}{2,1'}"
        );
        assert!(special(2, Special::A(2, 2)).is_err());
        assert!(special(2, Special::E(3)).is_err());
    }

    #[test]
    fn propagating_counts() {
        assert_eq!(perm_to_diagram(&Permutation::identity(4)).propagating_count(), 4);
        assert_eq!(special(2, Special::E(1)).unwrap().propagating_count(), 1);
        assert_eq!(special(3, Special::A(1, 3)).unwrap().propagating_count(), 2);
    }

    #[test]
    fn perm_diagram_homomorphism_exhaustive_n4() {
        for u in Permutation::all(4) {
            for v in Permutation::all(4) {
                let lhs = perm_to_diagram(&u.then(&v));
                let r = compose(&perm_to_diagram(&u), &perm_to_diagram(&v)).unwrap();
                assert_eq!(r.diagram, lhs);
                assert_eq!(r.removed_bones, 0);
            }
        }
    }

    #[test]
    fn as_permutation_recovers() {
        for w in Permutation::all(4) {
            assert_eq!(perm_to_diagram(&w).as_permutation().unwrap(), w);
        }
        assert!(special(2, Special::E(1)).unwrap().as_permutation().is_none());
        assert!(special(2, Special::A(1, 2)).unwrap().as_permutation().is_none());
    }

    #[test]
    fn ramified_identity_and_validity() {
        let id = RamifiedDiagram::identity(3);
        let e1 = special(3, Special::E(1)).unwrap();
        let x = RamifiedDiagram::new(e1.clone(), e1.clone()).unwrap();
        let r = compose_ramified(&id, &x).unwrap();
        assert_eq!(r.diagram, x);
        assert_eq!((r.removed_bones, r.removed_islands), (0, 0));
        // fine must refine coarse
        let a = special(3, Special::A(1, 2)).unwrap();
        assert!(RamifiedDiagram::new(a, e1).is_err());
    }

    #[test]
    fn minimal_bone_and_island_removal_carries_delta1_delta2() {
        // e_1 paired with itself: composing with itself strands the middle
        // vertex in both layers, one bone and one island
        let e1 = special(2, Special::E(1)).unwrap();
        let x = RamifiedDiagram::new(e1.clone(), e1.clone()).unwrap();
        let r = compose_ramified(&x, &x).unwrap();
        assert_eq!(r.removed_bones, 1);
        assert_eq!(r.removed_islands, 1);
        assert_eq!(r.diagram, x);
        let d1 = BigRational::from_integer(3.into());
        let d2 = BigRational::from_integer(5.into());
        assert_eq!(r.coefficient(&d1, &d2), BigRational::from_integer(15.into()));
    }

    #[test]
    fn bone_removed_inside_surviving_island() {
        // fine layer strands the middle vertex, coarse layer keeps it
        // connected to the boundary: factor is δ1 alone
        let fine = d("{1}{1'}{2,2'}");
        let coarse = d("{1,2,1',2'}");
        let x = RamifiedDiagram::new(fine, coarse).unwrap();
        let r = compose_ramified(&x, &x).unwrap();
        assert_eq!(r.removed_bones, 1);
        assert_eq!(r.removed_islands, 0);
    }

    #[test]
    fn composition_text_roundtrip() {
        let x = RamifiedDiagram::parse("{1,2}{1'}{2'} | {1,2,1'}{2'}").unwrap();
        assert_eq!(x.to_string(), "{1,2}{1'}{2'} | {1,2,1'}{2'}");
        assert!(RamifiedDiagram::parse("{1}{1'} | {1,2,1',2'}").is_err());
    }
}
