//! Exact computation and verification of double and k-tuple domination
//! parameters.
//!
//! The crate provides:
//!
//! * [`graph`] — bit-vector simple graphs, graph6 / edge-list I/O, degree
//!   profiles, corona products, orientations, and exhaustive enumeration of
//!   small labeled graphs;
//! * [`slater`] — the Slater and double Slater degree-sequence lower bounds
//!   for domination and double domination, with the size-based bound
//!   `(4n - 2m + e - p)/3` and its exact equality test;
//! * [`exact`] — brute-force and branch-and-bound solvers for minimum
//!   k-tuple dominating sets, an exact k-tuple domatic partition solver, and
//!   the domatic upper bound with its integer equality form;
//! * [`families`] — constructors and recognizers for the extremal families
//!   attaining the bounds above;
//! * [`gadget`] — the 3-SAT reduction building graphs whose double
//!   domination number equals its double Slater bound exactly when the
//!   formula is satisfiable, plus a restricted-CNF parser and solver;
//! * [`verify`] — an exhaustive small-graph harness checking every claimed
//!   inequality and equality characterization against the exact solvers;
//! * [`cli`] — the `domino` command-line interface.

#![forbid(unsafe_code)]

pub mod bitset;
pub mod cli;
pub mod error;
pub mod exact;
pub mod families;
pub mod gadget;
pub mod graph;
pub mod slater;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
