//! Finite-dimensional associative algebras given by structure constants,
//! and the certificates built on top of them.
//!
//! Three realizations share one interface: a general table of sparse
//! structure constants, a monoid algebra whose products are single basis
//! elements, and the partition algebra `P_n(δ')` whose products are computed
//! on the fly from diagram composition.
//!
//! Semisimplicity is certified through the regular trace form: over a
//! characteristic-zero field the radical is the kernel of the Gram matrix
//! `G[i][j] = tr(L_{b_i b_j})`, so `radical_dim = dim − rank(G)` and
//! `rank(G) = dim` certifies semisimplicity.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::field::{Field, Rat};
use super::matrix::{modular_rank, IntMatrix, Matrix};
use crate::diagrams::{compose, PartitionDiagram};
use crate::partitions::{enumerate_bounded, two_row_ground, SetPartition};
use crate::{Error, Result};

/// A sparse vector over the basis: sorted `(index, coeff)` pairs, no zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Normalizes raw (index, coeff) pairs: sorts, merges, drops zeros.
pub fn sparse_normalize<F: Field>(mut terms: Vec<(usize, F)>) -> SparseVec<F> {
    terms.sort_by_key(|&(i, _)| i);
    let mut out: SparseVec<F> = Vec::with_capacity(terms.len());
    for (i, c) in terms {
        match out.last_mut() {
            Some((j, acc)) if *j == i => acc.add_assign(&c),
            _ => out.push((i, c)),
        }
        if out.last().is_some_and(|(_, c)| c.is_zero()) {
            out.pop();
        }
    }
    out
}

/// `a + c·b`.
pub fn sparse_axpy<F: Field>(a: &SparseVec<F>, c: &F, b: &SparseVec<F>) -> SparseVec<F> {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Equal => {
                let v = a[i].1.add(&c.mul(&b[j].1));
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, c.mul(&b[j].1)));
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(k, v)| (*k, c.mul(v))));
    out
}

/// An algebra presented through its basis: the product of two basis elements
/// is a sparse combination of basis elements.
pub trait BasisAlgebra<F: Field>: Sync {
    fn dim(&self) -> usize;
    /// Index of the designated unit basis element, when the unit is a basis
    /// element (true for every algebra built here).
    fn unit_index(&self) -> usize;
    fn mul_basis(&self, i: usize, j: usize) -> SparseVec<F>;
    fn label(&self, i: usize) -> String;

    fn unit(&self) -> SparseVec<F> {
        vec![(self.unit_index(), F::one())]
    }

    fn basis_element(&self, i: usize) -> SparseVec<F> {
        vec![(i, F::one())]
    }
}

/// Bilinear extension of `mul_basis`.
pub fn mul_elements<F: Field>(
    alg: &(impl BasisAlgebra<F> + ?Sized),
    x: &SparseVec<F>,
    y: &SparseVec<F>,
) -> SparseVec<F> {
    let mut terms: Vec<(usize, F)> = Vec::new();
    for (i, a) in x {
        for (j, b) in y {
            let ab = a.mul(b);
            for (k, c) in alg.mul_basis(*i, *j) {
                terms.push((k, ab.mul(&c)));
            }
        }
    }
    sparse_normalize(terms)
}

/// The matrix of left multiplication by `x` in the basis.
pub fn regular_rep<F: Field>(
    alg: &(impl BasisAlgebra<F> + ?Sized),
    x: &SparseVec<F>,
) -> Matrix<F> {
    let d = alg.dim();
    let mut m = Matrix::zero(d, d);
    for j in 0..d {
        let col = mul_elements(alg, x, &alg.basis_element(j));
        for (k, c) in col {
            m.set(k, j, c);
        }
    }
    m
}

/// Traces of left multiplication by each basis element.
pub fn trace_vector<F: Field>(alg: &(impl BasisAlgebra<F> + ?Sized)) -> Vec<F> {
    let d = alg.dim();
    (0..d)
        .map(|k| {
            let mut t = F::zero();
            for j in 0..d {
                for (m, c) in alg.mul_basis(k, j) {
                    if m == j {
                        t.add_assign(&c);
                    }
                }
            }
            t
        })
        .collect()
}

/// The trace-form Gram matrix `G[i][j] = tr(L_{b_i·b_j})`.
pub fn trace_gram<F: Field>(alg: &(impl BasisAlgebra<F> + ?Sized)) -> Matrix<F> {
    let d = alg.dim();
    let traces = trace_vector(alg);
    let rows: Vec<Vec<F>> = (0..d)
        .into_par_iter()
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut g = F::zero();
                    for (k, c) in alg.mul_basis(i, j) {
                        g.add_assign(&c.mul(&traces[k]));
                    }
                    g
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows)
}

/// Dimension of the center `{x : xb = bx for all basis b}`, via the kernel
/// of the stacked commutator system.
pub fn center_dim<F: Field>(alg: &(impl BasisAlgebra<F> + ?Sized)) -> usize {
    let gens: Vec<usize> = (0..alg.dim()).collect();
    center_dim_against(alg, &gens)
}

/// Center dimension computed against a generating set only; agrees with
/// [`center_dim`] whenever `gens` generates the algebra.
pub fn center_dim_against<F: Field>(
    alg: &(impl BasisAlgebra<F> + ?Sized),
    gens: &[usize],
) -> usize {
    let d = alg.dim();
    let mut rows: Vec<Vec<F>> = Vec::with_capacity(gens.len() * d);
    for &g in gens {
        // row block expressing b_j·b_g − b_g·b_j = 0 coefficientwise
        let mut block: Vec<Vec<F>> = vec![vec![F::zero(); d]; d];
        for j in 0..d {
            for (k, c) in alg.mul_basis(j, g) {
                block[k][j].add_assign(&c);
            }
            for (k, c) in alg.mul_basis(g, j) {
                block[k][j].add_assign(&c.neg());
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|v| !v.is_zero())));
    }
    if rows.is_empty() {
        return d;
    }
    let m = Matrix::from_rows(rows);
    d - m.rank()
}

/// Echelonized spanning set with pivot bookkeeping, for closure computations.
struct Echelon<F: Field> {
    // pivot index → vector normalized to pivot coefficient 1
    rows: HashMap<usize, SparseVec<F>>,
}

impl<F: Field> Echelon<F> {
    fn new() -> Self {
        Echelon {
            rows: HashMap::new(),
        }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; inserts the remainder if
    /// nonzero. Returns true when the span grew.
    fn insert(&mut self, mut v: SparseVec<F>) -> bool {
        loop {
            let Some(&(pivot, ref coeff)) = v.first() else {
                return false;
            };
            match self.rows.get(&pivot) {
                Some(row) => {
                    let c = coeff.neg();
                    v = sparse_axpy(&v, &c, row);
                }
                None => {
                    let inv = coeff.inv();
                    let normalized = v
                        .iter()
                        .map(|(i, c)| (*i, c.mul(&inv)))
                        .collect::<Vec<_>>();
                    self.rows.insert(pivot, normalized);
                    return true;
                }
            }
        }
    }

    fn basis(&self) -> Vec<SparseVec<F>> {
        let mut keys: Vec<usize> = self.rows.keys().copied().collect();
        keys.sort_unstable();
        keys.into_iter().map(|k| self.rows[&k].clone()).collect()
    }
}

/// Smallest subalgebra containing `seeds` (plus the unit when `unital`),
/// by iterated multiply-and-reduce until the span stabilizes. Returns its
/// dimension and an echelonized basis.
pub fn span_closure<F: Field>(
    alg: &(impl BasisAlgebra<F> + ?Sized),
    seeds: &[SparseVec<F>],
    unital: bool,
) -> (usize, Vec<SparseVec<F>>) {
    let mut ech = Echelon::new();
    let mut work: Vec<SparseVec<F>> = Vec::new();
    let enqueue = |ech: &mut Echelon<F>, work: &mut Vec<SparseVec<F>>, v: SparseVec<F>| {
        if ech.insert(v.clone()) {
            work.push(v);
        }
    };
    if unital {
        enqueue(&mut ech, &mut work, alg.unit());
    }
    for s in seeds {
        enqueue(&mut ech, &mut work, s.clone());
    }
    while let Some(v) = work.pop() {
        for s in seeds {
            let prod = mul_elements(alg, &v, s);
            if !prod.is_empty() {
                enqueue(&mut ech, &mut work, prod);
            }
        }
    }
    (ech.len(), ech.basis())
}

/// How a Gram rank was established.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMethod {
    /// fraction-free elimination over the integers / field elimination
    Exact,
    /// rank over 𝔽_p, a lower bound that certifies only full rank
    Modular,
}

/// A machine-checkable semisimplicity verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemisimplicityCertificate {
    pub algebra: String,
    pub dim: usize,
    pub gram_rank: usize,
    pub radical_dim: usize,
    pub method: RankMethod,
    pub primes: Vec<u64>,
    pub center_dim: Option<usize>,
    pub semisimple: bool,
}

/// A general structure-constant algebra over `F`.
pub struct FiniteDimAlgebra<F: Field> {
    dim: usize,
    unit: usize,
    labels: Vec<String>,
    // row-major dim×dim table of sparse products
    table: Vec<SparseVec<F>>,
}

impl<F: Field> FiniteDimAlgebra<F> {
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        mut products: impl FnMut(usize, usize) -> SparseVec<F>,
    ) -> Self {
        let dim = labels.len();
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                table.push(products(i, j));
            }
        }
        FiniteDimAlgebra {
            dim,
            unit,
            labels,
            table,
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Spot-checks associativity on every triple (small dims only).
    pub fn check_associativity_exhaustive(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    self.check_triple(i, j, k)?;
                }
            }
        }
        Ok(())
    }

    pub fn check_triple(&self, i: usize, j: usize, k: usize) -> Result<()> {
        let left = mul_elements(self, &self.mul_basis(i, j), &self.basis_element(k));
        let right = mul_elements(self, &self.basis_element(i), &self.mul_basis(j, k));
        if left != right {
            return Err(Error::InvariantViolation(format!(
                "associativity fails at ({i},{j},{k})"
            )));
        }
        Ok(())
    }
}

impl<F: Field> BasisAlgebra<F> for FiniteDimAlgebra<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn unit_index(&self) -> usize {
        self.unit
    }

    fn mul_basis(&self, i: usize, j: usize) -> SparseVec<F> {
        self.table[i * self.dim + j].clone()
    }

    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }
}

/// A monoid algebra: the product of two basis elements is a single basis
/// element with coefficient 1, stored as a dense index table.
pub struct MonoidAlgebra {
    dim: usize,
    unit: usize,
    labels: Vec<String>,
    table: Vec<u32>,
}

impl MonoidAlgebra {
    pub fn new(labels: Vec<String>, unit: usize, table: Vec<u32>) -> Result<Self> {
        let dim = labels.len();
        if table.len() != dim * dim {
            return Err(Error::SizeMismatch(format!(
                "monoid table has {} entries for dim {dim}",
                table.len()
            )));
        }
        if table.iter().any(|&k| k as usize >= dim) {
            return Err(Error::BadIndex("monoid table entry out of range".into()));
        }
        Ok(MonoidAlgebra {
            dim,
            unit,
            labels,
            table,
        })
    }

    pub fn product_index(&self, i: usize, j: usize) -> usize {
        self.table[i * self.dim + j] as usize
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Restriction of the multiplication table to a subset closed under
    /// products; `keep[s]` is the index in the big algebra.
    pub fn sub_monoid(&self, keep: &[usize], labels: Vec<String>) -> Result<MonoidAlgebra> {
        let pos: HashMap<usize, u32> = keep
            .iter()
            .enumerate()
            .map(|(small, &big)| (big, small as u32))
            .collect();
        let d = keep.len();
        let mut table = Vec::with_capacity(d * d);
        for &a in keep {
            for &b in keep {
                let prod = self.product_index(a, b);
                let Some(&small) = pos.get(&prod) else {
                    return Err(Error::InvariantViolation(
                        "subset not closed under multiplication".into(),
                    ));
                };
                table.push(small);
            }
        }
        let unit = pos
            .get(&self.unit)
            .copied()
            .ok_or_else(|| Error::InvariantViolation("unit missing from subset".into()))?;
        MonoidAlgebra::new(labels, unit as usize, table)
    }

    /// Fixed-point counts `f(m) = #{k : b_m·b_k = b_k}`: the trace of left
    /// multiplication by a basis element.
    pub fn fixed_point_counts(&self) -> Vec<u32> {
        (0..self.dim)
            .into_par_iter()
            .map(|m| (0..self.dim).filter(|&k| self.product_index(m, k) == k).count() as u32)
            .collect()
    }

    /// Integer trace-form Gram matrix via the combinatorial formula
    /// `G[i][j] = f(b_i·b_j)`.
    pub fn gram_int(&self) -> IntMatrix {
        let f = self.fixed_point_counts();
        IntMatrix::from_fn(self.dim, self.dim, |i, j| {
            BigInt::from(f[self.product_index(i, j)])
        })
    }

    /// Same Gram matrix with raw u64 entries, for the modular path.
    pub fn gram_u64(&self) -> Vec<Vec<u64>> {
        let f = self.fixed_point_counts();
        (0..self.dim)
            .into_par_iter()
            .map(|i| {
                (0..self.dim)
                    .map(|j| f[self.product_index(i, j)] as u64)
                    .collect()
            })
            .collect()
    }
}

impl BasisAlgebra<Rat> for MonoidAlgebra {
    fn dim(&self) -> usize {
        self.dim
    }

    fn unit_index(&self) -> usize {
        self.unit
    }

    fn mul_basis(&self, i: usize, j: usize) -> SparseVec<Rat> {
        vec![(self.product_index(i, j), <Rat as Field>::one())]
    }

    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }
}

/// `P_n(δ')` with products computed on the fly from diagram composition;
/// the basis is every partition of `{1..n} ∪ {1'..n'}`, indexed in
/// restricted-growth-string order.
pub struct PartitionAlgebra {
    n: usize,
    delta: Rat,
    basis: Vec<PartitionDiagram>,
    index: HashMap<SetPartition, usize>,
    /// set when any product so far removed a middle component
    saw_removed: std::sync::atomic::AtomicBool,
}

impl PartitionAlgebra {
    pub fn new(n: usize, delta: Rat) -> Result<PartitionAlgebra> {
        let ground = two_row_ground(n);
        // bell(8) = 4140 keeps the on-the-fly table comfortable; bell(10)
        // is still fine for span closures that stay low-dimensional
        let basis: Vec<PartitionDiagram> = enumerate_bounded(&ground, 10)?
            .map(|p| PartitionDiagram::new(n, p).expect("enumerated over the right ground"))
            .collect();
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, d)| (d.partition().clone(), i))
            .collect();
        Ok(PartitionAlgebra {
            n,
            delta,
            basis,
            index,
            saw_removed: std::sync::atomic::AtomicBool::new(false),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagram_index(&self, d: &PartitionDiagram) -> Option<usize> {
        self.index.get(d.partition()).copied()
    }

    pub fn diagram(&self, i: usize) -> &PartitionDiagram {
        &self.basis[i]
    }

    /// True once any product has removed a middle component (and so picked
    /// up a δ' factor).
    pub fn removed_component_seen(&self) -> bool {
        self.saw_removed.load(std::sync::atomic::Ordering::Relaxed)
    }
}

impl BasisAlgebra<Rat> for PartitionAlgebra {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn unit_index(&self) -> usize {
        let one = crate::diagrams::perm_to_diagram(&crate::diagrams::Permutation::identity(self.n));
        self.index[one.partition()]
    }

    fn mul_basis(&self, i: usize, j: usize) -> SparseVec<Rat> {
        let r = compose(&self.basis[i], &self.basis[j]).expect("equal n by construction");
        if r.removed_bones > 0 {
            self.saw_removed
                .store(true, std::sync::atomic::Ordering::Relaxed);
        }
        let coeff = r.coefficient(&self.delta);
        if coeff.is_zero() {
            return Vec::new();
        }
        vec![(self.index[r.diagram.partition()], coeff)]
    }

    fn label(&self, i: usize) -> String {
        self.basis[i].to_string()
    }
}

/// Radical dimension via the trace form: `dim − rank(G)`.
pub fn radical_dim<F: Field>(alg: &(impl BasisAlgebra<F> + ?Sized)) -> usize {
    let g = trace_gram(alg);
    alg.dim() - g.rank()
}

/// Builds a semisimplicity certificate with exact Gram rank. The rank runs
/// fraction-free over the integers for monoid algebras and by field
/// elimination otherwise.
pub fn certify_semisimple_monoid(
    alg: &MonoidAlgebra,
    name: &str,
    generator_indices: Option<&[usize]>,
) -> SemisimplicityCertificate {
    let g = alg.gram_int();
    let rank = g.rank();
    let center = match generator_indices {
        Some(gens) => center_dim_against(alg, gens),
        None => center_dim(alg),
    };
    SemisimplicityCertificate {
        algebra: name.to_string(),
        dim: alg.dim,
        gram_rank: rank,
        radical_dim: alg.dim - rank,
        method: RankMethod::Exact,
        primes: Vec::new(),
        center_dim: Some(center),
        semisimple: rank == alg.dim,
    }
}

/// Modular certificate: the Gram rank lower bound over seeded primes.
/// Conclusive only when the bound reaches `dim`.
pub fn certify_semisimple_monoid_modular(
    alg: &MonoidAlgebra,
    name: &str,
    primes: &[u64],
) -> SemisimplicityCertificate {
    let g = alg.gram_int();
    let m = modular_rank(&g, primes);
    SemisimplicityCertificate {
        algebra: name.to_string(),
        dim: alg.dim,
        gram_rank: m.lower_bound,
        radical_dim: alg.dim - m.lower_bound,
        method: RankMethod::Modular,
        primes: primes.to_vec(),
        center_dim: None,
        semisimple: m.certifies_full(alg.dim),
    }
}

/// Exact certificate for a general structure-constant algebra over ℚ.
pub fn certify_semisimple_rational(
    alg: &FiniteDimAlgebra<Rat>,
    name: &str,
) -> SemisimplicityCertificate {
    let g = trace_gram(alg);
    let rank = IntMatrix::from_rational(&g).rank();
    SemisimplicityCertificate {
        algebra: name.to_string(),
        dim: alg.dim,
        gram_rank: rank,
        radical_dim: alg.dim - rank,
        method: RankMethod::Exact,
        primes: Vec::new(),
        center_dim: Some(center_dim(alg)),
        semisimple: rank == alg.dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::rat;

    /// ℚ[t]/(t²): the textbook non-semisimple algebra.
    fn dual_numbers() -> FiniteDimAlgebra<Rat> {
        FiniteDimAlgebra::new(vec!["1".into(), "t".into()], 0, |i, j| {
            if i == 0 && j == 0 {
                vec![(0, rat(1))]
            } else if i + j == 1 {
                vec![(1, rat(1))]
            } else {
                Vec::new() // t·t = 0
            }
        })
    }

    /// Group algebra of S_2 on the element basis {e, σ}.
    fn group_algebra_s2() -> MonoidAlgebra {
        MonoidAlgebra::new(vec!["e".into(), "s".into()], 0, vec![0, 1, 1, 0]).unwrap()
    }

    #[test]
    fn regular_rep_of_unit_is_identity() {
        let a = dual_numbers();
        let l1 = regular_rep(&a, &a.unit());
        assert_eq!(l1, Matrix::identity(2));
    }

    #[test]
    fn regular_rep_is_multiplicative() {
        let a = group_algebra_s2();
        let x = vec![(0usize, rat(2)), (1, rat(3))];
        let y = vec![(0usize, rat(-1)), (1, rat(5))];
        let lx = regular_rep(&a, &x);
        let ly = regular_rep(&a, &y);
        let lxy = regular_rep(&a, &mul_elements(&a, &x, &y));
        assert_eq!(lx.mul(&ly), lxy);
    }

    #[test]
    fn gram_of_s2_group_algebra() {
        let a = group_algebra_s2();
        let g = trace_gram(&a);
        assert_eq!(g, Matrix::from_rows(vec![vec![rat(2), rat(0)], vec![rat(0), rat(2)]]));
        // combinatorial formula agrees
        let gi = a.gram_int();
        assert_eq!(gi.get(0, 0), &BigInt::from(2));
        assert_eq!(gi.get(0, 1), &BigInt::from(0));
        assert_eq!(radical_dim(&a), 0);
    }

    #[test]
    fn dual_numbers_have_radical_dim_one() {
        let a = dual_numbers();
        let g = trace_gram(&a);
        assert_eq!(g, Matrix::from_rows(vec![vec![rat(2), rat(0)], vec![rat(0), rat(0)]]));
        assert_eq!(radical_dim(&a), 1);
        let cert = certify_semisimple_rational(&a, "Q[t]/(t^2)");
        assert!(!cert.semisimple);
        assert_eq!(cert.radical_dim, 1);
        assert_eq!(cert.center_dim, Some(2));
    }

    #[test]
    fn one_dimensional_gram() {
        let a = MonoidAlgebra::new(vec!["1".into()], 0, vec![0]).unwrap();
        let g = trace_gram(&a);
        assert_eq!(g, Matrix::from_rows(vec![vec![rat(1)]]));
    }

    #[test]
    fn commutative_algebra_center_is_everything() {
        let a = dual_numbers();
        assert_eq!(center_dim(&a), 2);
        let b = group_algebra_s2();
        assert_eq!(center_dim(&b), 2);
    }

    #[test]
    fn span_closure_of_nothing_is_the_unit_line() {
        let a = group_algebra_s2();
        let (d, basis) = span_closure(&a, &[], true);
        assert_eq!(d, 1);
        assert_eq!(basis, vec![vec![(0, rat(1))]]);
        let (d, _) = span_closure(&a, &[], false);
        assert_eq!(d, 0);
    }

    #[test]
    fn span_closure_monotone_and_idempotent() {
        let a = group_algebra_s2();
        let sigma = a.basis_element(1);
        let (d1, basis) = span_closure(&a, &[sigma.clone()], true);
        assert_eq!(d1, 2);
        // feeding the closure back in changes nothing
        let (d2, _) = span_closure(&a, &basis, true);
        assert_eq!(d2, d1);
    }

    #[test]
    fn sparse_axpy_merges_and_cancels() {
        let a = vec![(0usize, rat(1)), (2, rat(2))];
        let b = vec![(0usize, rat(1)), (1, rat(1)), (2, rat(-2))];
        let r = sparse_axpy(&a, &rat(1), &b);
        assert_eq!(r, vec![(0, rat(2)), (1, rat(1))]);
        let r = sparse_axpy(&a, &rat(0), &b);
        assert_eq!(r, a);
    }
}
