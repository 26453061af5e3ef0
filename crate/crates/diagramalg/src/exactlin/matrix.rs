//! Dense exact matrices: field elimination, fraction-free (Bareiss)
//! elimination over the integers, and a modular rank fast path.
//!
//! The modular rank is a certified LOWER bound on the exact rank (reduction
//! mod p can only collapse rows); when the bound reaches the full dimension
//! it certifies nondegeneracy without any big-integer growth.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Field, Rat};

/// A dense `rows × cols` matrix over an exact field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Matrix<F> {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix<F> {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Matrix<F> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Matrix<F> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows);
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                if !self.get(r, k).is_zero() && !other.get(k, c).is_zero() {
                    acc.add_assign(&self.get(r, k).mul(other.get(k, c)));
                }
            }
            acc
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..self.cols {
            let Some(nz) = (pr..self.rows).find(|&r| !self.get(r, pc).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, nz);
            let inv = self.get(pr, pc).inv();
            for c in pc..self.cols {
                let v = self.get(pr, c).mul(&inv);
                self.set(pr, c, v);
            }
            for r in 0..self.rows {
                if r == pr || self.get(r, pc).is_zero() {
                    continue;
                }
                let factor = self.get(r, pc).clone();
                for c in pc..self.cols {
                    let v = self.get(r, c).sub(&factor.mul(self.get(pr, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(pc);
            pr += 1;
            if pr == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank by exact field elimination.
    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of the right null space `{x : Mx = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = m.get(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant by field elimination (square matrices).
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = F::one();
        for pc in 0..m.cols {
            let Some(nz) = (pc..m.rows).find(|&r| !m.get(r, pc).is_zero()) else {
                return F::zero();
            };
            if nz != pc {
                m.swap_rows(pc, nz);
                det = det.neg();
            }
            det = det.mul(m.get(pc, pc));
            let inv = m.get(pc, pc).inv();
            for r in pc + 1..m.rows {
                if m.get(r, pc).is_zero() {
                    continue;
                }
                let factor = m.get(r, pc).mul(&inv);
                for c in pc..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(pc, c)));
                    m.set(r, c, v);
                }
            }
        }
        det
    }
}

impl Matrix<Rat> {
    /// Rank via the fraction-free integer path: rows are scaled by their
    /// denominator lcm (rank-preserving) and eliminated Bareiss-style.
    pub fn rank_fraction_free(&self) -> usize {
        IntMatrix::from_rational(self).rank()
    }
}

/// A dense matrix over the integers, eliminated fraction-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Scales each row of a rational matrix by its denominator lcm.
    pub fn from_rational(m: &Matrix<Rat>) -> Self {
        let mut rows = Vec::with_capacity(m.rows());
        for r in 0..m.rows() {
            let mut l = BigInt::one();
            for c in 0..m.cols() {
                l = l.lcm(m.get(r, c).denom());
            }
            let lr = BigRational::from_integer(l);
            rows.push(
                (0..m.cols())
                    .map(|c| (m.get(r, c) * &lr).to_integer())
                    .collect(),
            );
        }
        IntMatrix::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank by fraction-free (Bareiss one-step) elimination: every
    /// intermediate entry is an exact minor of the input, and each update
    /// divides exactly by the previous pivot.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for pc in 0..m.cols {
            if rank == m.rows {
                break;
            }
            // smallest-magnitude pivot damps entry growth
            let pivot_row = (rank..m.rows)
                .filter(|&r| !m.get(r, pc).is_zero())
                .min_by_key(|&r| m.get(r, pc).magnitude().bits());
            let Some(nz) = pivot_row else {
                continue;
            };
            m.swap_rows(rank, nz);
            let pivot = m.get(rank, pc).clone();
            for r in rank + 1..m.rows {
                let head = m.get(r, pc).clone();
                for c in pc + 1..m.cols {
                    let v = (&pivot * m.get(r, c) - &head * m.get(rank, c)).div_floor(&prev);
                    m.data[r * m.cols + c] = v;
                }
                m.data[r * m.cols + pc] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Determinant by Bareiss elimination (square matrices).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut prev = BigInt::one();
        let mut sign = 1i32;
        for k in 0..n {
            let Some(nz) = (k..n).find(|&r| !m.get(r, k).is_zero()) else {
                return BigInt::zero();
            };
            if nz != k {
                m.swap_rows(k, nz);
                sign = -sign;
            }
            let pivot = m.get(k, k).clone();
            for r in k + 1..n {
                let head = m.get(r, k).clone();
                for c in k + 1..n {
                    let v = (&pivot * m.get(r, c) - &head * m.get(k, c)).div_floor(&prev);
                    m.data[r * n + c] = v;
                }
                m.data[r * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Entries reduced into `[0, p)`.
    pub fn to_mod_rows(&self, p: u64) -> Vec<Vec<u64>> {
        let pb = BigInt::from(p);
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| {
                        let v = self.get(r, c).mod_floor(&pb);
                        v.to_u64().expect("reduced value fits u64")
                    })
                    .collect()
            })
            .collect()
    }
}

/// Rank of a matrix over `𝔽_p`, destructive on `rows`.
pub fn rank_mod_p(rows: &mut [Vec<u64>], p: u64) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for pc in 0..ncols {
        let Some(nz) = (rank..nrows).find(|&r| rows[r][pc] % p != 0) else {
            continue;
        };
        rows.swap(rank, nz);
        let inv = mod_inv(rows[rank][pc] % p, p);
        for c in pc..ncols {
            rows[rank][c] = mul_mod(rows[rank][c] % p, inv, p);
        }
        let (pivot_row, rest) = {
            let (a, b) = rows.split_at_mut(rank + 1);
            (&a[rank], b)
        };
        for row in rest.iter_mut() {
            let factor = row[pc] % p;
            if factor == 0 {
                continue;
            }
            for c in pc..ncols {
                let sub = mul_mod(factor, pivot_row[c], p);
                let v = row[c] % p;
                row[c] = if v >= sub { v - sub } else { v + p - sub };
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin, valid for all u64 with this base set.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Deterministic primes above 2³⁰, drawn from a seeded generator so
/// certificates are reproducible.
pub fn primes_from_seed(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut primes = Vec::with_capacity(count);
    while primes.len() < count {
        let mut cand: u64 = rng.gen_range((1u64 << 30)..(1u64 << 31)) | 1;
        while !is_prime_u64(cand) {
            cand += 2;
        }
        if !primes.contains(&cand) {
            primes.push(cand);
        }
    }
    primes
}

/// Outcome of modular rank computation across several primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularRank {
    pub per_prime: Vec<(u64, usize)>,
    /// max over primes; a certified lower bound on the exact rank
    pub lower_bound: usize,
}

impl ModularRank {
    /// True when the lower bound certifies full rank.
    pub fn certifies_full(&self, dim: usize) -> bool {
        self.lower_bound == dim
    }
}

/// Ranks mod each prime; the max is a lower bound on the exact rank.
pub fn modular_rank(m: &IntMatrix, primes: &[u64]) -> ModularRank {
    let per_prime: Vec<(u64, usize)> = primes
        .iter()
        .map(|&p| {
            let mut rows = m.to_mod_rows(p);
            (p, rank_mod_p(&mut rows, p))
        })
        .collect();
    let lower_bound = per_prime.iter().map(|&(_, r)| r).max().unwrap_or(0);
    ModularRank {
        per_prime,
        lower_bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::rat;

    fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_and_zero_ranks() {
        assert_eq!(Matrix::<Rat>::identity(3).rank(), 3);
        assert!(Matrix::<Rat>::identity(3).kernel().is_empty());
        assert_eq!(Matrix::<Rat>::zero(3, 3).rank(), 0);
        assert_eq!(int_matrix(&[&[1, 0], &[0, 1]]).rank(), 2);
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let m = Matrix::from_rows(vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
        ]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in 0..2 {
                let mut acc = rat(0);
                for c in 0..3 {
                    acc += m.get(r, c) * &v[c];
                }
                assert_eq!(acc, rat(0));
            }
        }
    }

    #[test]
    fn bareiss_det_matches_known_values() {
        assert_eq!(int_matrix(&[&[2, 1], &[1, 2]]).det(), BigInt::from(3));
        assert_eq!(
            int_matrix(&[&[0, 1, 2], &[1, 0, 3], &[4, 5, 0]]).det(),
            BigInt::from(22)
        );
        assert_eq!(int_matrix(&[&[1, 2], &[2, 4]]).det(), BigInt::from(0));
    }

    #[test]
    fn modular_rank_is_a_lower_bound() {
        // diag(6): rank 0 mod 3 but 1 mod 5; the max is the honest bound
        let d6 = int_matrix(&[&[6]]);
        let r = modular_rank(&d6, &[3, 5]);
        assert_eq!(r.per_prime, vec![(3, 0), (5, 1)]);
        assert_eq!(r.lower_bound, 1);
        assert!(r.certifies_full(1));
    }

    #[test]
    fn modular_vs_exact_on_random_matrices() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let primes = primes_from_seed(42, 3);
        for trial in 0..6 {
            let n = 8 + trial;
            let m = IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-9i64..=9)));
            let exact = m.rank();
            let modular = modular_rank(&m, &primes);
            assert!(modular.lower_bound <= exact);
            assert_eq!(modular.lower_bound, exact, "primes above 2^30 miss nothing here");
        }
    }

    #[test]
    fn fraction_free_rank_agrees_with_field_rank() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            let m = Matrix::from_fn(6, 9, |_, _| {
                rat(rng.gen_range(-5i64..=5)) / rat(rng.gen_range(1i64..=4))
            });
            assert_eq!(m.rank(), m.rank_fraction_free());
        }
    }

    #[test]
    fn seeded_primes_are_deterministic() {
        let a = primes_from_seed(0xD1A6, 3);
        let b = primes_from_seed(0xD1A6, 3);
        assert_eq!(a, b);
        assert!(a.iter().all(|&p| p > (1 << 30) && is_prime_u64(p)));
    }

    #[test]
    fn field_det_and_rref() {
        let m = Matrix::from_rows(vec![vec![rat(2), rat(1)], vec![rat(1), rat(2)]]);
        assert_eq!(m.det(), rat(3));
        assert_eq!(m.rank(), 2);
        assert!(m.is_symmetric());
    }
}
