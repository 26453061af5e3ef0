//! Exact-arithmetic diagram algebras.
//!
//! This crate builds the combinatorial diagram algebras attached to set
//! partitions of `{1..n} ∪ {1'..n'}` — the partition algebra `P_n(δ')`, its
//! 2-ramified extension, and the small ramified algebra `P_n^⋉` on the
//! `(permutation, diagonal partition)` basis — together with a presented
//! algebra `E_n(x)` on generators `T_i, E_i`, and enough exact linear algebra
//! (arbitrary-precision rationals, univariate rational functions, fraction-free
//! elimination, modular rank) to certify structural facts about them:
//! dimension counts, monoid closure, the generator map `E_i ↦ (1, A^{i,i+1})`,
//! `T_i ↦ (σ_{i,i+1}, σ_{i,i+1})` being an isomorphism at `u = 1`, and
//! semisimplicity via trace-form Gram ranks.
//!
//! All arithmetic is exact; nothing here touches floating point.
//!
//! Modules:
//! - [`partitions`] — set partitions, refinement lattice, enumeration, Bell numbers
//! - [`diagrams`] — partition diagrams, ramified pairs, composition with removed-component counting
//! - [`smallram`] — the `⋉` basis of `P_n^⋉` and its monoid multiplication
//! - [`exactlin`] — exact fields, matrices, structure-constant algebras, semisimplicity certificates
//! - [`presented`] — free-algebra rewriting for the `T_i, E_i` presentation
//! - [`juyumaya`] — relation checks, isomorphism certificates, parameter scans
//! - [`render`] — SVG/ASCII pictures of (ramified) diagrams

#![forbid(unsafe_code)]

pub mod diagrams;
pub mod exactlin;
pub mod juyumaya;
pub mod partitions;
pub mod presented;
pub mod render;
pub mod smallram;

pub use diagrams::{PartitionDiagram, Permutation, RamifiedDiagram};
pub use partitions::{GroundElement, SetPartition};
pub use smallram::SmallBasisElement;

use thiserror::Error;

/// Schema tag stamped on every JSON document this crate emits.
pub const SCHEMA: &str = "diagramalg/1";

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Blocks overlap or fail to cover the ground set.
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    /// Two partitions (or a partition and a subset) live on different ground sets.
    #[error("ground set mismatch: {0}")]
    GroundMismatch(String),
    /// A size-bounded enumeration was asked to exceed its configured bound.
    #[error("size limit exceeded: {what} = {requested}, bound {bound}")]
    SizeLimit {
        what: &'static str,
        requested: usize,
        bound: usize,
    },
    /// Two diagrams of different sizes were composed.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    /// An internal invariant that should be unreachable was breached.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    /// Generator or element index out of range.
    #[error("bad index: {0}")]
    BadIndex(String),
    /// Rewriting completion exceeded its degree bound.
    #[error("degree bound {bound} exceeded: {detail}")]
    BoundExceeded { bound: usize, detail: String },
    /// A guard against runaway coefficient growth fired.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    /// Text input did not parse.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
