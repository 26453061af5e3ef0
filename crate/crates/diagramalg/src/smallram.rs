//! The small ramified partition algebra `P_n^⋉`.
//!
//! Its basis is the image of the injection `(w, b) ↦ (w, b·w)` from
//! `S_n × diag-P_n` into ramified pairs. Elements are stored in the `(w, b)`
//! coordinates, where the monoid multiplication has a closed form:
//!
//! ```text
//! (w₁, b₁)·(w₂, b₂) = (w₁w₂, b₁ ∨ (b₂ relabeled through w₁⁻¹))
//! ```
//!
//! with `w₁w₂` read left-to-right, matching the crate's left-on-top diagram
//! composition. The ramified-diagram and tensor-product multiplication paths
//! are kept as independent oracles; the three must agree on every pair.
//!
//! The dimension is `n!·B_n` and every product of basis elements is again a
//! single basis element (structure constants are 0/1), so the algebra is a
//! monoid algebra and carries no `δ` parameter.

use std::collections::HashMap;
use std::fmt;

use num_traits::ToPrimitive;

use crate::diagrams::{
    compose, compose_ramified, perm_to_diagram, PartitionDiagram, Permutation, RamifiedDiagram,
};
use crate::exactlin::{span_closure, BasisAlgebra, MonoidAlgebra, PartitionAlgebra, Rat};
use crate::partitions::{bell, one_row_ground, two_row_ground, GroundElement, SetPartition};
use crate::{Error, Result};

/// Default bound on `n` for basis enumeration (dimension 6240 at n = 5).
pub const BASIS_BOUND: usize = 5;

/// A partition of `{1..n}` standing for the diagonal partition in which `i`
/// and `i'` always share a block. Stored as a canonical restricted-growth
/// string, so equality and hashing are cheap in the hot multiplication path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalPartition {
    rgs: Vec<u8>,
}

impl DiagonalPartition {
    pub fn finest(n: usize) -> DiagonalPartition {
        DiagonalPartition {
            rgs: (0..n as u8).collect(),
        }
    }

    /// Builds from any block labeling; renormalizes to canonical form.
    pub fn from_labels(labels: Vec<u8>) -> DiagonalPartition {
        DiagonalPartition {
            rgs: normalize(labels),
        }
    }

    /// The partition with `i` and `j` merged (1-based), all else singleton.
    pub fn pair(n: usize, i: usize, j: usize) -> Result<DiagonalPartition> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::BadIndex(format!("pair ({i},{j}) in 1..={n}")));
        }
        let mut labels: Vec<u8> = (0..n as u8).collect();
        let (lo, hi) = (i.min(j) - 1, i.max(j) - 1);
        labels[hi] = labels[lo];
        Ok(DiagonalPartition::from_labels(labels))
    }

    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    /// Least upper bound in refinement order, by union-find on positions.
    pub fn join(&self, other: &DiagonalPartition) -> DiagonalPartition {
        debug_assert_eq!(self.n(), other.n());
        let n = self.n();
        let mut parent: Vec<u8> = (0..n as u8).collect();
        fn find(parent: &mut [u8], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let union = |parent: &mut Vec<u8>, a: u8, b: u8| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[rb.max(ra) as usize] = rb.min(ra);
            }
        };
        for rgs in [&self.rgs, &other.rgs] {
            let mut first_of: [u8; 256] = [u8::MAX; 256];
            for (pos, &lab) in rgs.iter().enumerate() {
                if first_of[lab as usize] == u8::MAX {
                    first_of[lab as usize] = pos as u8;
                } else {
                    union(&mut parent, first_of[lab as usize], pos as u8);
                }
            }
        }
        let labels = (0..n as u8).map(|i| find(&mut parent, i)).collect();
        DiagonalPartition::from_labels(labels)
    }

    /// Relabels block members through `i ↦ w(i)`.
    pub fn relabel(&self, w: &Permutation) -> DiagonalPartition {
        let n = self.n();
        debug_assert_eq!(w.len(), n);
        let mut labels = vec![0u8; n];
        for i in 1..=n {
            labels[w.image(i) - 1] = self.rgs[i - 1];
        }
        DiagonalPartition::from_labels(labels)
    }

    /// The quotient as a plain partition of `{1..n}`.
    pub fn to_quotient(&self) -> SetPartition {
        let rgs: Vec<usize> = self.rgs.iter().map(|&v| v as usize).collect();
        SetPartition::from_rgs(one_row_ground(self.n()), &rgs).expect("canonical rgs")
    }

    /// The diagonal diagram on `{1..n} ∪ {1'..n'}`: block `B` becomes
    /// `B ∪ B'`.
    pub fn to_diagram(&self) -> PartitionDiagram {
        let n = self.n();
        let nblocks = self.rgs.iter().map(|&v| v as usize).max().unwrap_or(0) + 1;
        let mut blocks: Vec<Vec<GroundElement>> = vec![Vec::new(); nblocks];
        for (pos, &lab) in self.rgs.iter().enumerate() {
            blocks[lab as usize].push(GroundElement::plain(pos + 1));
        }
        for (pos, &lab) in self.rgs.iter().enumerate() {
            blocks[lab as usize].push(GroundElement::primed(pos + 1));
        }
        let p = SetPartition::new(two_row_ground(n), blocks).expect("diagonal blocks are disjoint");
        PartitionDiagram::new(n, p).expect("correct ground")
    }

    /// Recovers the quotient from a diagonal diagram; `None` when some `i`
    /// and `i'` are separated.
    pub fn from_diagram(d: &PartitionDiagram) -> Option<DiagonalPartition> {
        let n = d.n();
        let ids = d.partition().block_ids();
        let mut labels = Vec::with_capacity(n);
        for i in 1..=n {
            let a = ids[&GroundElement::plain(i)];
            if a != ids[&GroundElement::primed(i)] {
                return None;
            }
            labels.push(a as u8);
        }
        Some(DiagonalPartition::from_labels(labels))
    }

    /// All diagonal partitions of `{1..n}` in restricted-growth-string order.
    pub fn all(n: usize) -> Vec<DiagonalPartition> {
        crate::partitions::RgsIter::new(n)
            .map(|rgs| DiagonalPartition {
                rgs: rgs.into_iter().map(|v| v as u8).collect(),
            })
            .collect()
    }
}

fn normalize(labels: Vec<u8>) -> Vec<u8> {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    labels
        .into_iter()
        .map(|l| {
            if map[l as usize] == u8::MAX {
                map[l as usize] = next;
                next += 1;
            }
            map[l as usize]
        })
        .collect()
}

impl fmt::Display for DiagonalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_quotient())
    }
}

/// A basis element of `P_n^⋉` in `(w, b)` coordinates, standing for the
/// ramified pair `(w, b·w)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmallBasisElement {
    pub w: Permutation,
    pub b: DiagonalPartition,
}

impl SmallBasisElement {
    pub fn new(w: Permutation, b: DiagonalPartition) -> Result<SmallBasisElement> {
        if w.len() != b.n() {
            return Err(Error::SizeMismatch(format!(
                "permutation on {} points, partition of {}",
                w.len(),
                b.n()
            )));
        }
        Ok(SmallBasisElement { w, b })
    }

    pub fn identity(n: usize) -> SmallBasisElement {
        SmallBasisElement {
            w: Permutation::identity(n),
            b: DiagonalPartition::finest(n),
        }
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    /// The image `(w, b·w)` as a ramified diagram.
    pub fn to_ramified(&self) -> RamifiedDiagram {
        ltimes(&self.w, &self.b)
    }

    /// The pair `(w, b·w)` with the coarse layer as a plain diagram in
    /// `P_n`: the tensor-embedding coordinates.
    pub fn to_tensor(&self) -> (Permutation, PartitionDiagram) {
        let r = self.to_ramified();
        (self.w.clone(), r.coarse().clone())
    }
}

impl fmt::Display for SmallBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ramified())
    }
}

/// The `⋉` map: `(w, b) ↦ (w, b·w)` as a ramified pair. Injective; the
/// images are exactly the basis diagrams of `P_n^⋉`.
pub fn ltimes(w: &Permutation, b: &DiagonalPartition) -> RamifiedDiagram {
    let fine = perm_to_diagram(w);
    let r = compose(&b.to_diagram(), &fine).expect("equal n");
    debug_assert_eq!(r.removed_bones, 0);
    RamifiedDiagram::new(fine, r.diagram).expect("fine refines b·w")
}

/// Why a ramified pair fails to be a `⋉` image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotInImage {
    /// the fine layer is not a permutation diagram
    FineNotPermutation,
    /// `coarse·fine⁻¹` is not a diagonal partition
    NotDiagonal,
}

impl fmt::Display for NotInImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotInImage::FineNotPermutation => write!(f, "fine layer is not a permutation diagram"),
            NotInImage::NotDiagonal => write!(f, "coarse·fine⁻¹ is not diagonal"),
        }
    }
}

/// Inverts `⋉` on its image: recovers `(w, b)` from `(w, b·w)`, or reports
/// why the pair is not an image (the map is not surjective).
pub fn from_ramified(r: &RamifiedDiagram) -> std::result::Result<SmallBasisElement, NotInImage> {
    let Some(w) = r.fine().as_permutation() else {
        return Err(NotInImage::FineNotPermutation);
    };
    let undo = perm_to_diagram(&w.inverse());
    let back = compose(r.coarse(), &undo).expect("equal n");
    if back.removed_bones != 0 {
        return Err(NotInImage::NotDiagonal);
    }
    let Some(b) = DiagonalPartition::from_diagram(&back.diagram) else {
        return Err(NotInImage::NotDiagonal);
    };
    // b·w must reproduce the coarse layer exactly
    let again = ltimes(&w, &b);
    if again.coarse() != r.coarse() {
        return Err(NotInImage::NotDiagonal);
    }
    Ok(SmallBasisElement { w, b })
}

/// The closed-form monoid product.
pub fn multiply(x: &SmallBasisElement, y: &SmallBasisElement) -> Result<SmallBasisElement> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch(format!("n = {} vs {}", x.n(), y.n())));
    }
    let w = x.w.then(&y.w);
    let b = x.b.join(&y.b.relabel(&x.w.inverse()));
    Ok(SmallBasisElement { w, b })
}

/// Oracle path 1: multiply through ramified diagram composition. Errors if
/// any middle component is removed or the result leaves the basis — both
/// impossible for `⋉` images.
pub fn multiply_via_diagrams(
    x: &SmallBasisElement,
    y: &SmallBasisElement,
) -> Result<SmallBasisElement> {
    let r = compose_ramified(&x.to_ramified(), &y.to_ramified())?;
    if r.removed_bones != 0 || r.removed_islands != 0 {
        return Err(Error::InvariantViolation(format!(
            "⋉-image product removed {} bones, {} islands",
            r.removed_bones, r.removed_islands
        )));
    }
    from_ramified(&r.diagram)
        .map_err(|e| Error::InvariantViolation(format!("product left the ⋉ image: {e}")))
}

/// Oracle path 2: multiply componentwise in `FS_n ⊗ Δ_n`, composing the
/// coarse layers as plain partition diagrams.
pub fn multiply_via_tensor(
    x: &SmallBasisElement,
    y: &SmallBasisElement,
) -> Result<SmallBasisElement> {
    let (wx, dx) = x.to_tensor();
    let (wy, dy) = y.to_tensor();
    let w = wx.then(&wy);
    let r = compose(&dx, &dy)?;
    if r.removed_bones != 0 {
        return Err(Error::InvariantViolation(
            "Δ_n component removed a middle component".into(),
        ));
    }
    from_ramified(&RamifiedDiagram::new(perm_to_diagram(&w), r.diagram)?)
        .map_err(|e| Error::InvariantViolation(format!("tensor product left the ⋉ image: {e}")))
}

/// All `n!·B_n` basis elements, ordered lexicographically by (one-line
/// permutation, restricted-growth string).
pub fn enumerate_basis(n: usize) -> Result<Vec<SmallBasisElement>> {
    enumerate_basis_bounded(n, BASIS_BOUND)
}

/// Same with an explicit bound on `n`.
pub fn enumerate_basis_bounded(n: usize, bound: usize) -> Result<Vec<SmallBasisElement>> {
    if n == 0 || n > bound {
        return Err(Error::SizeLimit {
            what: "smallram basis n",
            requested: n,
            bound,
        });
    }
    let parts = DiagonalPartition::all(n);
    let perms = Permutation::all(n);
    let mut out = Vec::with_capacity(perms.len() * parts.len());
    for w in &perms {
        for b in &parts {
            out.push(SmallBasisElement {
                w: w.clone(),
                b: b.clone(),
            });
        }
    }
    Ok(out)
}

/// The generating set of `P_n^⋉`: the `2(n−1)` elements `(1, A^{i,i+1})`
/// and `(σ_{i,i+1}, σ_{i,i+1})`, merge generators first.
pub fn generators(n: usize) -> Result<Vec<SmallBasisElement>> {
    if n < 2 {
        return Err(Error::BadIndex(format!("generators need n ≥ 2, got {n}")));
    }
    let mut out = Vec::with_capacity(2 * (n - 1));
    for i in 1..n {
        out.push(SmallBasisElement {
            w: Permutation::identity(n),
            b: DiagonalPartition::pair(n, i, i + 1)?,
        });
    }
    for i in 1..n {
        out.push(SmallBasisElement {
            w: Permutation::transposition(n, i, i + 1)?,
            b: DiagonalPartition::finest(n),
        });
    }
    Ok(out)
}

/// The merge generator `(1, A^{i,i+1})`, the image of `E_i`.
pub fn e_generator(n: usize, i: usize) -> Result<SmallBasisElement> {
    Ok(SmallBasisElement {
        w: Permutation::identity(n),
        b: DiagonalPartition::pair(n, i, i + 1)?,
    })
}

/// The transposition generator `(σ_{i,i+1}, σ_{i,i+1})`, the image of `T_i`.
pub fn t_generator(n: usize, i: usize) -> Result<SmallBasisElement> {
    Ok(SmallBasisElement {
        w: Permutation::transposition(n, i, i + 1)?,
        b: DiagonalPartition::finest(n),
    })
}

/// `P_n^⋉` as a monoid algebra: basis list, index lookup, dense product
/// table. The table rows are filled in parallel.
pub struct SmallRamAlgebra {
    n: usize,
    basis: Vec<SmallBasisElement>,
    index: HashMap<SmallBasisElement, u32>,
    algebra: MonoidAlgebra,
}

impl SmallRamAlgebra {
    pub fn build(n: usize) -> Result<SmallRamAlgebra> {
        Self::build_bounded(n, BASIS_BOUND)
    }

    pub fn build_bounded(n: usize, bound: usize) -> Result<SmallRamAlgebra> {
        use rayon::prelude::*;
        let basis = enumerate_basis_bounded(n, bound)?;
        let dim = basis.len();
        let index: HashMap<SmallBasisElement, u32> = basis
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        let basis_ref = &basis;
        let index_ref = &index;
        let table: Vec<u32> = (0..dim)
            .into_par_iter()
            .flat_map_iter(move |i| {
                (0..dim).map(move |j| {
                    let p = multiply(&basis_ref[i], &basis_ref[j]).expect("equal n");
                    index_ref[&p]
                })
            })
            .collect();
        let labels = basis.iter().map(|e| e.to_string()).collect();
        let unit = index[&SmallBasisElement::identity(n)] as usize;
        let algebra = MonoidAlgebra::new(labels, unit, table)?;
        Ok(SmallRamAlgebra {
            n,
            basis,
            index,
            algebra,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SmallBasisElement] {
        &self.basis
    }

    pub fn index_of(&self, e: &SmallBasisElement) -> Option<usize> {
        self.index.get(e).map(|&i| i as usize)
    }

    pub fn monoid(&self) -> &MonoidAlgebra {
        &self.algebra
    }

    /// Indices of the `2(n−1)` generators in the basis order.
    pub fn generator_indices(&self) -> Result<Vec<usize>> {
        generators(self.n)?
            .iter()
            .map(|g| {
                self.index_of(g)
                    .ok_or_else(|| Error::InvariantViolation("generator missing from basis".into()))
            })
            .collect()
    }
}

impl BasisAlgebra<Rat> for SmallRamAlgebra {
    fn dim(&self) -> usize {
        self.algebra.dim()
    }

    fn unit_index(&self) -> usize {
        self.algebra.unit_index()
    }

    fn mul_basis(&self, i: usize, j: usize) -> crate::exactlin::SparseVec<Rat> {
        self.algebra.mul_basis(i, j)
    }

    fn label(&self, i: usize) -> String {
        self.algebra.label(i)
    }
}

/// Span-closure dimensions of a generated subalgebra of `P_n(δ')`, with and
/// without the unit adjoined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureDims {
    pub unital: usize,
    pub non_unital: usize,
}

/// Dimension of `Γ_n = ⟨A^{i,j}⟩ ⊆ P_n(δ')`, reported both as a unital and
/// a non-unital closure (the generated-subalgebra convention is ambiguous).
/// Also asserts computationally that no product of the generators ever
/// removes a middle component, so the answer cannot depend on `δ'`.
pub fn gamma_dim(n: usize) -> Result<ClosureDims> {
    if n == 0 || n > 5 {
        return Err(Error::SizeLimit {
            what: "gamma_dim n",
            requested: n,
            bound: 5,
        });
    }
    let alg = PartitionAlgebra::new(n, crate::exactlin::rat(1))?;
    let mut seeds = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let a = crate::diagrams::special(n, crate::diagrams::Special::A(i, j))?;
            let idx = alg
                .diagram_index(&a)
                .ok_or_else(|| Error::InvariantViolation("A generator not in basis".into()))?;
            seeds.push(alg.basis_element(idx));
        }
    }
    let (unital, _) = span_closure(&alg, &seeds, true);
    let (non_unital, _) = span_closure(&alg, &seeds, false);
    if alg.removed_component_seen() {
        return Err(Error::InvariantViolation(
            "Γ_n closure product removed a middle component".into(),
        ));
    }
    Ok(ClosureDims { unital, non_unital })
}

/// Dimension of `Δ_n = ⟨S_n, A^{i,j}⟩ ⊆ P_n(δ')`, both closure flavors.
pub fn delta_dim(n: usize) -> Result<ClosureDims> {
    if n == 0 || n > 4 {
        return Err(Error::SizeLimit {
            what: "delta_dim n",
            requested: n,
            bound: 4,
        });
    }
    let alg = PartitionAlgebra::new(n, crate::exactlin::rat(1))?;
    let mut seeds = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let a = crate::diagrams::special(n, crate::diagrams::Special::A(i, j))?;
            seeds.push(alg.basis_element(alg.diagram_index(&a).unwrap()));
        }
    }
    for i in 1..n {
        let s = crate::diagrams::special(n, crate::diagrams::Special::Sigma(i, i + 1))?;
        seeds.push(alg.basis_element(alg.diagram_index(&s).unwrap()));
    }
    if n == 1 {
        // no generators at all; the closures are the unit line and zero
        let (unital, _) = span_closure(&alg, &seeds, true);
        return Ok(ClosureDims {
            unital,
            non_unital: 0,
        });
    }
    let (unital, _) = span_closure(&alg, &seeds, true);
    let (non_unital, _) = span_closure(&alg, &seeds, false);
    if alg.removed_component_seen() {
        return Err(Error::InvariantViolation(
            "Δ_n closure product removed a middle component".into(),
        ));
    }
    Ok(ClosureDims { unital, non_unital })
}

/// Expected dimension `n!·B_n` (usize; exact for the desk-scale range).
pub fn expected_dim(n: usize) -> usize {
    let factorial: usize = (1..=n).product();
    factorial * bell(n).to_usize().expect("desk-scale Bell number")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma(n: usize, i: usize) -> Permutation {
        Permutation::transposition(n, i, i + 1).unwrap()
    }

    #[test]
    fn diagonal_partition_normal_forms() {
        let p = DiagonalPartition::from_labels(vec![3, 3, 1]);
        assert_eq!(p.rgs(), &[0, 0, 1]);
        assert_eq!(p.to_quotient().to_string(), "{1,2}{3}");
        assert_eq!(DiagonalPartition::all(3).len(), 5);
        assert_eq!(DiagonalPartition::all(1).len(), 1);
    }

    #[test]
    fn join_and_relabel() {
        let a = DiagonalPartition::pair(3, 1, 2).unwrap();
        let b = DiagonalPartition::pair(3, 2, 3).unwrap();
        assert_eq!(a.join(&b).to_quotient().to_string(), "{1,2,3}");
        assert_eq!(a.join(&a), a);
        // relabel through the 3-cycle 1↦2↦3↦1
        let c = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(a.relabel(&c).to_quotient().to_string(), "{1}{2,3}");
        // conjugating twice by w, w⁻¹ restores
        assert_eq!(a.relabel(&c).relabel(&c.inverse()), a);
    }

    #[test]
    fn conjugate_matches_spec_example() {
        // {{1,2,1',2'},{3,3'}} relabeled through (2 3)
        let p = DiagonalPartition::pair(3, 1, 2).unwrap().to_diagram();
        let w = Permutation::from_one_line(&[1, 3, 2]).unwrap();
        let q = p.partition().conjugate(&w).unwrap();
        assert_eq!(q.to_string(), "{1,3,1',3'}{2,2'}");
        let id = Permutation::identity(3);
        assert_eq!(p.partition().conjugate(&id).unwrap(), *p.partition());
    }

    #[test]
    fn ltimes_examples() {
        let id2 = Permutation::identity(2);
        let fine2 = DiagonalPartition::finest(2);
        assert_eq!(ltimes(&id2, &fine2), RamifiedDiagram::identity(2));

        let r = ltimes(&sigma(2, 1), &fine2);
        assert_eq!(r.to_string(), "{1,2'}{2,1'} | {1,2'}{2,1'}");

        let r = ltimes(&id2, &DiagonalPartition::pair(2, 1, 2).unwrap());
        assert_eq!(r.to_string(), "{1,1'}{2,2'} | {1,2,1',2'}");
    }

    #[test]
    fn ltimes_images_have_n_propagating_lines() {
        for e in enumerate_basis(3).unwrap() {
            let r = e.to_ramified();
            assert_eq!(r.fine().propagating_count(), 3);
            assert_eq!(r.coarse().propagating_count(), r.coarse().partition().block_count());
        }
    }

    #[test]
    fn from_ramified_round_trip_and_rejections() {
        for e in enumerate_basis(3).unwrap() {
            assert_eq!(from_ramified(&e.to_ramified()).unwrap(), e);
        }
        // fine = e_1 is not a permutation diagram
        let e1 = crate::diagrams::special(2, crate::diagrams::Special::E(1)).unwrap();
        let r = RamifiedDiagram::new(e1.clone(), e1).unwrap();
        assert_eq!(from_ramified(&r), Err(NotInImage::FineNotPermutation));
        // fine = coarse = σ recovers (σ, finest)
        let s = perm_to_diagram(&sigma(2, 1));
        let r = RamifiedDiagram::new(s.clone(), s).unwrap();
        let e = from_ramified(&r).unwrap();
        assert_eq!(e.w, sigma(2, 1));
        assert_eq!(e.b, DiagonalPartition::finest(2));
        // when the fine layer IS a permutation diagram the pair is always
        // an image: coarse blocks are unions of fine blocks, so pulling
        // back through w⁻¹ lands in the diagonal subset
        let fine = perm_to_diagram(&sigma(2, 1));
        let coarse = PartitionDiagram::parse("{1,2,1',2'}").unwrap();
        let r = RamifiedDiagram::new(fine, coarse).unwrap();
        assert_eq!(
            from_ramified(&r).unwrap(),
            SmallBasisElement::new(sigma(2, 1), DiagonalPartition::pair(2, 1, 2).unwrap()).unwrap()
        );
    }

    #[test]
    fn ltimes_not_surjective() {
        // count valid ramified pairs with both layers arbitrary vs ⋉ images
        let all: Vec<_> = crate::partitions::enumerate(&two_row_ground(2))
            .unwrap()
            .collect();
        let mut valid_pairs = 0;
        let mut in_image = 0;
        for f in &all {
            for c in &all {
                if f.refines(c).unwrap() {
                    valid_pairs += 1;
                    let r = RamifiedDiagram::new(
                        PartitionDiagram::new(2, f.clone()).unwrap(),
                        PartitionDiagram::new(2, c.clone()).unwrap(),
                    )
                    .unwrap();
                    if from_ramified(&r).is_ok() {
                        in_image += 1;
                    }
                }
            }
        }
        assert_eq!(in_image, 4); // 2!·B_2
        assert!(valid_pairs > in_image);
    }

    #[test]
    fn multiply_examples() {
        let n = 2;
        let s = SmallBasisElement::new(sigma(n, 1), DiagonalPartition::finest(n)).unwrap();
        let one = SmallBasisElement::identity(n);
        assert_eq!(multiply(&s, &s).unwrap(), one);

        let e = e_generator(2, 1).unwrap();
        let t = t_generator(2, 1).unwrap();
        assert_eq!(multiply(&e, &t).unwrap(), multiply(&t, &e).unwrap());

        let e12 = e_generator(3, 1).unwrap();
        let e23 = e_generator(3, 2).unwrap();
        let p = multiply(&e12, &e23).unwrap();
        assert!(p.w.is_identity());
        assert_eq!(p.b.to_quotient().to_string(), "{1,2,3}");
    }

    #[test]
    fn identity_is_two_sided_unit() {
        let one = SmallBasisElement::identity(3);
        for e in enumerate_basis(3).unwrap() {
            assert_eq!(multiply(&one, &e).unwrap(), e);
            assert_eq!(multiply(&e, &one).unwrap(), e);
        }
    }

    #[test]
    fn three_multiplication_paths_agree_n2() {
        let basis = enumerate_basis(2).unwrap();
        for x in &basis {
            for y in &basis {
                let a = multiply(x, y).unwrap();
                let b = multiply_via_diagrams(x, y).unwrap();
                let c = multiply_via_tensor(x, y).unwrap();
                assert_eq!(a, b);
                assert_eq!(a, c);
            }
        }
    }

    #[test]
    fn basis_count_and_injectivity() {
        for n in 1..=4 {
            let basis = enumerate_basis(n).unwrap();
            assert_eq!(basis.len(), expected_dim(n));
            let images: std::collections::HashSet<_> =
                basis.iter().map(|e| e.to_ramified()).collect();
            assert_eq!(images.len(), basis.len(), "⋉ must be injective");
        }
        assert_eq!(expected_dim(2), 4);
        assert_eq!(expected_dim(4), 360);
    }

    #[test]
    fn generator_counts() {
        assert_eq!(generators(2).unwrap().len(), 2);
        assert_eq!(generators(4).unwrap().len(), 6);
        assert!(generators(1).is_err());
    }

    #[test]
    fn table_build_and_closure_small() {
        let alg = SmallRamAlgebra::build(2).unwrap();
        assert_eq!(alg.dim(), 4);
        let gens = alg.generator_indices().unwrap();
        let seeds: Vec<_> = gens.iter().map(|&g| alg.monoid().basis_element(g)).collect();
        let (dim, _) = span_closure(alg.monoid(), &seeds, true);
        assert_eq!(dim, 4);
    }

    #[test]
    fn gamma_and_delta_dims_small() {
        let g2 = gamma_dim(2).unwrap();
        assert_eq!(g2.unital, 2);
        assert_eq!(g2.non_unital, 1);
        let g1 = gamma_dim(1).unwrap();
        assert_eq!(g1.unital, 1);
        // Δ_2 = span{1, σ, A}
        let d2 = delta_dim(2).unwrap();
        assert_eq!(d2.unital, 3);
        assert_eq!(d2.non_unital, 3);
    }

    #[test]
    fn associativity_exhaustive_n2() {
        let basis = enumerate_basis(2).unwrap();
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let xy_z = multiply(&multiply(x, y).unwrap(), z).unwrap();
                    let x_yz = multiply(x, &multiply(y, z).unwrap()).unwrap();
                    assert_eq!(xy_z, x_yz);
                }
            }
        }
    }
}
