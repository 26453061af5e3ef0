//! Exact linear algebra over the rationals and over `ℚ(u)`.
//!
//! Everything downstream of the diagram combinatorics funnels through here:
//! dense matrices with exact entries, fraction-free (Bareiss) elimination and
//! a modular fast path for integer matrices, finite-dimensional algebras
//! given by structure constants, regular representations, trace-form Gram
//! matrices, radical/center dimensions, and span closures of generated
//! subalgebras.

pub mod algebra;
pub mod field;
pub mod matrix;
pub mod ratfunc;

pub use algebra::{
    mul_elements, span_closure, trace_gram, BasisAlgebra, FiniteDimAlgebra, MonoidAlgebra,
    PartitionAlgebra, RankMethod, SemisimplicityCertificate, SparseVec,
};
pub use field::{rat, rat_from, Field, Rat};
pub use matrix::{modular_rank, primes_from_seed, rank_mod_p, IntMatrix, Matrix, ModularRank};
pub use ratfunc::{Poly, RatFunc};
