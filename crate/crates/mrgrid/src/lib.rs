//! Maximally recoverable codes for grid-like topologies.
//!
//! A grid-like topology `T(m x n)(a, b, h)` places an `m x n` array of symbols
//! under `a` parity checks per column, `b` per row, and `h` global checks whose
//! supports cover the whole grid. Fixing the check coefficients over a binary
//! extension field GF(2^d) instantiates a concrete linear code. This crate
//! provides:
//!
//! * [`gf2k`] — arithmetic in GF(2^d) for 1 <= d <= 32, plus the additive
//!   subgroup/coset split used by the `T(1,0,2)` construction;
//! * [`linalg`] — dense elimination, rank, solving, kernels and determinants
//!   over those fields;
//! * [`topology`] — topologies, instantiations, constraint matrices, encoding
//!   and erasure decoding;
//! * [`patterns`] — erasure-pattern classification: regularity, peeling,
//!   closed-form correctability tests and a randomized generic-rank oracle;
//! * [`constructions`] — MDS component codes, tensor instantiations, the
//!   explicit maximally recoverable `T(1,0,2)` family, pattern-tailored row
//!   codes, boosting, and exhaustive MR verification;
//! * [`cycles`] — edge labelings of complete bipartite graphs with nonzero
//!   simple-cycle sums, path-weight-class counting, and minimal label
//!   dimension search;
//! * [`cli`] / [`io`] — the `mrgrid` command-line front end and its JSON
//!   schemas.

pub mod cli;
pub mod constructions;
pub mod cycles;
pub mod gf2k;
pub mod io;
pub mod linalg;
pub mod patterns;
pub mod topology;

pub use gf2k::{FieldElement, FieldSpec};
pub use linalg::Matrix;
pub use topology::{ErasurePattern, Instantiation, Topology};
