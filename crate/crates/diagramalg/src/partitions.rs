//! Set partitions of finite labeled ground sets.
//!
//! The ground sets that matter here are `{1..n}`, `{1..n} ∪ {1'..n'}` and
//! their subsets. A [`SetPartition`] is kept in canonical form (each block
//! sorted, blocks sorted by least element), so structural equality and
//! hashing are the equality notion everywhere in the crate.
//!
//! The refinement order `p ≤ q` (every block of `q` is a union of blocks of
//! `p`) makes the set of partitions of a fixed ground set a lattice; this
//! module provides the order predicate, restriction to a subset, the join,
//! enumeration in restricted-growth-string order, and Bell numbers.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;

use crate::{Error, Result};

/// Default bound on `|X|` for full enumeration (Bell(12) ≈ 4.2 million).
pub const ENUMERATE_BOUND: usize = 12;

/// An element of a ground set: `i` or `i'`.
///
/// Total order: all unprimed elements before all primed ones, then by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundElement {
    /// Primed elements sort after every unprimed element.
    pub primed: bool,
    /// 1-based index.
    pub index: usize,
}

impl GroundElement {
    /// The unprimed element `i` (1-based).
    pub fn plain(index: usize) -> Self {
        GroundElement {
            primed: false,
            index,
        }
    }

    /// The primed element `i'` (1-based).
    pub fn primed(index: usize) -> Self {
        GroundElement {
            primed: true,
            index,
        }
    }
}

impl fmt::Display for GroundElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

/// The ground set `{1..n} ∪ {1'..n'}` in canonical order.
pub fn two_row_ground(n: usize) -> Vec<GroundElement> {
    (1..=n)
        .map(GroundElement::plain)
        .chain((1..=n).map(GroundElement::primed))
        .collect()
}

/// The ground set `{1..n}`.
pub fn one_row_ground(n: usize) -> Vec<GroundElement> {
    (1..=n).map(GroundElement::plain).collect()
}

/// A partition of a finite labeled ground set, always held in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    ground: Vec<GroundElement>,
    blocks: Vec<Vec<GroundElement>>,
}

impl SetPartition {
    /// Builds a partition from raw blocks, validating disjointness and cover.
    pub fn new(
        ground: Vec<GroundElement>,
        blocks: Vec<Vec<GroundElement>>,
    ) -> Result<SetPartition> {
        let mut ground = ground;
        ground.sort_unstable();
        ground.dedup();
        let mut seen: HashMap<GroundElement, ()> = HashMap::with_capacity(ground.len());
        let mut canon: Vec<Vec<GroundElement>> = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            let mut block = block;
            block.sort_unstable();
            for w in block.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::MalformedPartition(format!(
                        "element {} repeated inside a block",
                        w[0]
                    )));
                }
            }
            for &e in &block {
                if seen.insert(e, ()).is_some() {
                    return Err(Error::MalformedPartition(format!(
                        "element {e} appears in two blocks"
                    )));
                }
            }
            canon.push(block);
        }
        if seen.len() != ground.len() || ground.iter().any(|e| !seen.contains_key(e)) {
            return Err(Error::MalformedPartition(
                "blocks do not cover the ground set".into(),
            ));
        }
        canon.sort_unstable_by(|a, b| a[0].cmp(&b[0]));
        Ok(SetPartition {
            ground,
            blocks: canon,
        })
    }

    /// The finest partition (all singletons) of `ground`.
    pub fn finest(ground: Vec<GroundElement>) -> SetPartition {
        let blocks = ground.iter().map(|&e| vec![e]).collect();
        SetPartition::new(ground, blocks).expect("singletons always form a partition")
    }

    /// The coarsest partition (one block) of a nonempty `ground`.
    pub fn coarsest(ground: Vec<GroundElement>) -> SetPartition {
        let mut g = ground;
        g.sort_unstable();
        g.dedup();
        SetPartition {
            blocks: vec![g.clone()],
            ground: g,
        }
    }

    /// Builds a partition of `ground` from a restricted-growth string over
    /// `ground`'s canonical order: `rgs[k]` is the block id of the k-th element.
    pub fn from_rgs(ground: Vec<GroundElement>, rgs: &[usize]) -> Result<SetPartition> {
        let mut g = ground;
        g.sort_unstable();
        g.dedup();
        if rgs.len() != g.len() {
            return Err(Error::MalformedPartition(format!(
                "rgs length {} does not match ground size {}",
                rgs.len(),
                g.len()
            )));
        }
        let nblocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks: Vec<Vec<GroundElement>> = vec![Vec::new(); nblocks];
        for (k, &b) in rgs.iter().enumerate() {
            blocks[b].push(g[k]);
        }
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::MalformedPartition("gap in rgs block ids".into()));
        }
        // elements were pushed in ground order, so each block is sorted and
        // blocks are already ordered by least element when the string is a
        // genuine RGS; renormalize anyway to accept arbitrary id labelings
        SetPartition::new(g, blocks)
    }

    /// The restricted-growth string of this partition over its ground order.
    pub fn to_rgs(&self) -> Vec<usize> {
        let mut id_of: HashMap<GroundElement, usize> = HashMap::with_capacity(self.ground.len());
        for (b, block) in self.blocks.iter().enumerate() {
            for &e in block {
                id_of.insert(e, b);
            }
        }
        self.ground.iter().map(|e| id_of[e]).collect()
    }

    /// Ground set in canonical order.
    pub fn ground(&self) -> &[GroundElement] {
        &self.ground
    }

    /// Blocks in canonical order.
    pub fn blocks(&self) -> &[Vec<GroundElement>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Map element → block index (canonical order).
    pub fn block_ids(&self) -> HashMap<GroundElement, usize> {
        let mut m = HashMap::with_capacity(self.ground.len());
        for (b, block) in self.blocks.iter().enumerate() {
            for &e in block {
                m.insert(e, b);
            }
        }
        m
    }

    /// True iff `self` refines `q`: every block of `q` is a union of blocks
    /// of `self`. This is the partial order of the Bell lattice.
    pub fn refines(&self, q: &SetPartition) -> Result<bool> {
        if self.ground != q.ground {
            return Err(Error::GroundMismatch(
                "refines() needs equal ground sets".into(),
            ));
        }
        let q_ids = q.block_ids();
        // both are partitions of the same set, so `p ≤ q` iff each block of
        // `p` sits inside a single block of `q`
        Ok(self.blocks.iter().all(|block| {
            let id = q_ids[&block[0]];
            block[1..].iter().all(|e| q_ids[e] == id)
        }))
    }

    /// Restriction `p|_Y`: the nonempty intersections of blocks with `Y`.
    pub fn restrict(&self, subset: &[GroundElement]) -> Result<SetPartition> {
        let mut y: Vec<GroundElement> = subset.to_vec();
        y.sort_unstable();
        y.dedup();
        if !y.iter().all(|e| self.ground.binary_search(e).is_ok()) {
            return Err(Error::GroundMismatch(
                "restriction subset not contained in ground".into(),
            ));
        }
        let keep: HashMap<GroundElement, ()> = y.iter().map(|&e| (e, ())).collect();
        let blocks: Vec<Vec<GroundElement>> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .copied()
                    .filter(|e| keep.contains_key(e))
                    .collect::<Vec<_>>()
            })
            .filter(|b: &Vec<GroundElement>| !b.is_empty())
            .collect();
        SetPartition::new(y, blocks)
    }

    /// Join (least upper bound) in the refinement order: the finest partition
    /// coarser than both. Computed by union-find over the shared ground set.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch(
                "join() needs equal ground sets".into(),
            ));
        }
        let n = self.ground.len();
        let pos: HashMap<GroundElement, usize> = self
            .ground
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        let mut uf = UnionFind::new(n);
        for part in [&self.blocks, &other.blocks] {
            for block in part.iter() {
                let first = pos[&block[0]];
                for e in &block[1..] {
                    uf.union(first, pos[e]);
                }
            }
        }
        let mut by_root: HashMap<usize, Vec<GroundElement>> = HashMap::new();
        for (i, &e) in self.ground.iter().enumerate() {
            by_root.entry(uf.find(i)).or_default().push(e);
        }
        SetPartition::new(self.ground.clone(), by_root.into_values().collect())
    }

    /// Relabels a partition of `{1..n} ∪ {1'..n'}` through `i ↦ w(i)`,
    /// `i' ↦ w(i)'`, and recanonicalizes.
    pub fn conjugate(&self, w: &crate::diagrams::Permutation) -> Result<SetPartition> {
        let n = w.len();
        if self.ground != two_row_ground(n) {
            return Err(Error::GroundMismatch(format!(
                "conjugate needs ground {{1..{n}}} ∪ {{1'..{n}'}}"
            )));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| GroundElement {
                        primed: e.primed,
                        index: w.image(e.index),
                    })
                    .collect()
            })
            .collect();
        SetPartition::new(self.ground.clone(), blocks)
    }

    /// Parses the text form `{1,2,1'}{2'}`. The ground set is the union of
    /// the listed elements.
    pub fn parse(text: &str) -> Result<SetPartition> {
        let text = text.trim();
        if text.is_empty() {
            return SetPartition::new(vec![], vec![]);
        }
        let mut blocks = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('{') else {
                return Err(Error::Parse(format!("expected '{{' at: {rest}")));
            };
            let Some(end) = stripped.find('}') else {
                return Err(Error::Parse("unterminated block".into()));
            };
            let inner = &stripped[..end];
            let mut block = Vec::new();
            for tok in inner.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(Error::Parse("empty element in block".into()));
                }
                let (digits, primed) = match tok.strip_suffix('\'') {
                    Some(d) => (d, true),
                    None => (tok, false),
                };
                let index: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad element: {tok}")))?;
                if index == 0 {
                    return Err(Error::Parse("indices are 1-based".into()));
                }
                block.push(GroundElement { primed, index });
            }
            blocks.push(block);
            rest = stripped[end + 1..].trim_start();
        }
        let ground: Vec<GroundElement> = blocks.iter().flatten().copied().collect();
        SetPartition::new(ground, blocks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "{{")?;
            for (i, e) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Iterator over all restricted-growth strings of length `n`, in
/// lexicographic order. `n = 0` yields the single empty string.
pub struct RgsIter {
    n: usize,
    rgs: Vec<usize>,
    max_prefix: Vec<usize>,
    started: bool,
    done: bool,
}

impl RgsIter {
    pub fn new(n: usize) -> Self {
        RgsIter {
            n,
            rgs: vec![0; n],
            max_prefix: vec![0; n],
            started: false,
            done: false,
        }
    }
}

impl Iterator for RgsIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.n == 0 {
                self.done = true;
                return Some(Vec::new());
            }
            return Some(self.rgs.clone());
        }
        // find rightmost position whose value can still grow: rgs[k] may go
        // up to max(rgs[0..k]) + 1
        let mut k = self.n;
        loop {
            if k == 1 {
                self.done = true;
                return None;
            }
            k -= 1;
            if self.rgs[k] <= self.max_prefix[k] {
                break;
            }
        }
        self.rgs[k] += 1;
        for j in k + 1..self.n {
            self.rgs[j] = 0;
            self.max_prefix[j] = self.max_prefix[j - 1].max(self.rgs[j - 1]);
        }
        Some(self.rgs.clone())
    }
}

/// Enumerates all partitions of `ground`, exactly once each, in
/// restricted-growth-string order. Count equals `bell(|ground|)`.
pub fn enumerate(ground: &[GroundElement]) -> Result<impl Iterator<Item = SetPartition>> {
    enumerate_bounded(ground, ENUMERATE_BOUND)
}

/// Same as [`enumerate`] with an explicit size bound.
pub fn enumerate_bounded(
    ground: &[GroundElement],
    bound: usize,
) -> Result<impl Iterator<Item = SetPartition>> {
    let mut g = ground.to_vec();
    g.sort_unstable();
    g.dedup();
    if g.len() > bound {
        return Err(Error::SizeLimit {
            what: "ground size",
            requested: g.len(),
            bound,
        });
    }
    let n = g.len();
    Ok(RgsIter::new(n).map(move |rgs| {
        SetPartition::from_rgs(g.clone(), &rgs).expect("RGS strings are valid partitions")
    }))
}

/// Bell number `B_n` by the Bell-triangle recurrence.
pub fn bell(n: usize) -> BigUint {
    let mut row: Vec<BigUint> = vec![BigUint::from(1u32)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for v in &row {
            let last: BigUint = next.last().unwrap().clone();
            next.push(last + v);
        }
        row = next;
    }
    row[0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ge(i: usize) -> GroundElement {
        GroundElement::plain(i)
    }

    fn gp(i: usize) -> GroundElement {
        GroundElement::primed(i)
    }

    #[test]
    fn canonicalize_reorders_blocks_and_elements() {
        let p = SetPartition::new(
            two_row_ground(2),
            vec![vec![gp(1)], vec![ge(2), ge(1)], vec![gp(2)]],
        )
        .unwrap();
        assert_eq!(p.to_string(), "{1,2}{1'}{2'}");
        // idempotent on already-canonical input
        let q = SetPartition::new(p.ground().to_vec(), p.blocks().to_vec()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn canonicalize_already_canonical() {
        let p = SetPartition::parse("{1,1'}{2,2'}").unwrap();
        assert_eq!(p.to_string(), "{1,1'}{2,2'}");
    }

    #[test]
    fn overlapping_blocks_rejected() {
        let err = SetPartition::new(vec![ge(1)], vec![vec![ge(1)], vec![ge(1)]]).unwrap_err();
        assert!(matches!(err, Error::MalformedPartition(_)));
        let err = SetPartition::new(vec![ge(1), ge(2)], vec![vec![ge(1)]]).unwrap_err();
        assert!(matches!(err, Error::MalformedPartition(_)));
    }

    #[test]
    fn refines_examples() {
        // the fine part of a valid ramified pair refines its coarse part
        let p = SetPartition::parse("{1,2}{1'}{2'}").unwrap();
        let q = SetPartition::parse("{1,2,1'}{2'}").unwrap();
        assert!(p.refines(&q).unwrap());
        assert!(p.refines(&p).unwrap());
        let a = SetPartition::parse("{1,1'}{2,2'}").unwrap();
        let b = SetPartition::parse("{1}{2}{1'}{2'}").unwrap();
        assert!(!a.refines(&b).unwrap());
        assert!(b.refines(&a).unwrap());
    }

    #[test]
    fn refines_matches_brute_force_on_ground_4() {
        // oracle: q is a union of p-blocks, checked by literal block unions
        fn refines_oracle(p: &SetPartition, q: &SetPartition) -> bool {
            q.blocks().iter().all(|qb| {
                let members: Vec<_> = p
                    .blocks()
                    .iter()
                    .filter(|pb| pb.iter().all(|e| qb.contains(e)))
                    .flatten()
                    .copied()
                    .collect();
                let mut union = members;
                union.sort_unstable();
                union == *qb
            })
        }
        let all: Vec<SetPartition> = enumerate(&two_row_ground(2)).unwrap().collect();
        assert_eq!(all.len(), 15);
        for p in &all {
            for q in &all {
                assert_eq!(
                    p.refines(q).unwrap(),
                    refines_oracle(p, q),
                    "refines mismatch for {p} vs {q}"
                );
            }
        }
    }

    #[test]
    fn restrict_examples() {
        let p = SetPartition::parse("{1,2,1'}{2'}").unwrap();
        let r = p.restrict(&[ge(1), ge(2)]).unwrap();
        assert_eq!(r.to_string(), "{1,2}");
        assert_eq!(p.restrict(p.ground()).unwrap(), p);
        let d = SetPartition::parse("{1,1'}{2,2'}").unwrap();
        let r = d.restrict(&[ge(1), ge(2)]).unwrap();
        assert_eq!(r.to_string(), "{1}{2}");
        assert!(d.restrict(&[ge(3)]).is_err());
    }

    #[test]
    fn join_examples() {
        let g = one_row_ground(3);
        let p = SetPartition::new(g.clone(), vec![vec![ge(1), ge(2)], vec![ge(3)]]).unwrap();
        let q = SetPartition::new(g.clone(), vec![vec![ge(1)], vec![ge(2), ge(3)]]).unwrap();
        let j = p.join(&q).unwrap();
        assert_eq!(j, SetPartition::coarsest(g.clone()));
        assert_eq!(p.join(&p).unwrap(), p);
        let finest = SetPartition::finest(g);
        assert_eq!(p.join(&finest).unwrap(), p);
    }

    #[test]
    fn join_laws_exhaustive_on_size_3() {
        let g = one_row_ground(3);
        let all: Vec<SetPartition> = enumerate(&g).unwrap().collect();
        for p in &all {
            for q in &all {
                let j = p.join(q).unwrap();
                assert_eq!(j, q.join(p).unwrap());
                assert!(p.refines(&j).unwrap());
                assert!(q.refines(&j).unwrap());
                for r in &all {
                    assert_eq!(
                        p.join(q).unwrap().join(r).unwrap(),
                        p.join(&q.join(r).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate(&two_row_ground(2)).unwrap().count(), 15);
        assert_eq!(enumerate(&one_row_ground(1)).unwrap().count(), 1);
        assert_eq!(enumerate(&one_row_ground(5)).unwrap().count(), 52);
        assert_eq!(enumerate(&[]).unwrap().count(), 1);
        assert!(matches!(
            enumerate_bounded(&one_row_ground(6), 5),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn enumerate_no_duplicates_size_4() {
        let all: Vec<SetPartition> = enumerate(&one_row_ground(4)).unwrap().collect();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), set.len());
    }

    #[test]
    fn bell_values() {
        // oracle for small n: count partitions by direct enumeration
        for n in 0..=8 {
            let count = enumerate(&one_row_ground(n)).unwrap().count();
            assert_eq!(bell(n), BigUint::from(count), "bell({n})");
        }
        assert_eq!(bell(4), BigUint::from(15u32));
        assert_eq!(bell(0), BigUint::from(1u32));
        assert_eq!(bell(8), BigUint::from(4140u32));
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["{1,2,1'}{2'}", "{1,1'}{2,2'}", "{1}{2}{1'}{2'}"] {
            let p = SetPartition::parse(s).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(SetPartition::parse(&p.to_string()).unwrap(), p);
        }
        assert!(SetPartition::parse("{1,1}{2}").is_err());
        assert!(SetPartition::parse("{1,2").is_err());
    }

    #[test]
    fn rgs_roundtrip() {
        let g = two_row_ground(2);
        for p in enumerate(&g).unwrap() {
            let rgs = p.to_rgs();
            assert_eq!(SetPartition::from_rgs(g.clone(), &rgs).unwrap(), p);
        }
    }
}
