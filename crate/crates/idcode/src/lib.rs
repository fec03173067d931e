//! Identifying codes in triangle-free graphs.
//!
//! An identifying code is a dominating set whose members give every vertex a
//! distinct trace: the intersection of the vertex's closed ball with the
//! code. This crate builds codes of size at most
//! `n - n/(Δ + 3Δ/(ln Δ - 1))` in connected identifiable triangle-free
//! graphs of maximum degree Δ ≥ 3, certifies every property it relies on at
//! runtime, and ships an exhaustive solver for small instances so the
//! guarantees can be checked against ground truth.
//!
//! The pieces:
//!
//! * [`graph`]: bit-vector adjacency, twin and false-twin detection.
//! * [`certify`]: definition-level checkers used as oracles everywhere.
//! * [`exact`]: branch-and-bound minimum identifying code for small graphs.
//! * [`indep`]: independent-set routines with certified size fractions.
//! * [`lr_codes`]: quasi-identifying codes around a strong induced matching.
//! * [`construct`]: the full pipeline with its two cases and variants.
//! * [`families`]: generators and known optimal sizes for named families.
//! * [`io`]: edge-list and DIMACS-style readers, deterministic writer.

pub mod bounds;
pub mod certify;
pub mod construct;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod indep;
pub mod io;
pub mod lr_codes;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
