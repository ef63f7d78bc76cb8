//! Exact search and audit tooling for list coloring with union separation.
//!
//! A `(k, t)`-list assignment gives every vertex at least `k` colors and, for
//! `t > k`, makes the lists of adjacent vertices cover at least `t` colors
//! together (for `t <= k`, share at most `t`). This crate decides whether such
//! assignments admit proper colorings, builds graphs where they do not,
//! computes maximum average degree exactly, and re-checks the arithmetic of
//! the discharging arguments with exact rationals.

pub mod choosability;
pub mod constructions;
pub mod discharge;
pub mod error;
pub mod graph;
pub mod reducibility;
pub mod separation;
pub mod solver;
pub mod sparsity;
pub mod textio;

/// Exact rational used in every verdict path.
pub type Rational = num_rational::Ratio<i64>;

pub use error::{Error, Result};
pub use graph::Graph;
pub use separation::{ColorSet, Coloring, ListAssignment, Regime, SeparationParams};
