//! Induced-saturation workbench.
//!
//! A graph `G` is `H`-induced-saturated when `G` has no induced copy of `H`
//! but flipping any single vertex pair (adding a non-edge or deleting an
//! edge) creates one. Trigraphs generalize this by marking pairs black
//! (forced edge), white (forced non-edge), or gray (free); `indsat(n, H)` is
//! the minimum number of gray pairs over `H`-induced-saturated trigraphs on
//! `n` vertices, and `sis(n, H)` is the minimum edge count of an
//! `H`-induced-saturated graph when one exists.
//!
//! The crate provides the value types and graph algebra, an induced-subgraph
//! engine, the saturation verifiers, an executable catalogue of extremal
//! constructions, and exhaustive isomorph-rejecting searches that recompute
//! `indsat`/`sis` at small orders, all behind a single CLI.

pub mod canon;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod induced;
pub mod io;
pub mod patterns;
pub mod saturation;
pub mod search;
pub mod trigraph;

pub use error::{Error, Result};
pub use graph::{blowup, cartesian_product, disjoint_union, join, BlowupMode, Graph};
pub use patterns::{pattern, Pattern};
pub use trigraph::{EdgeColor, Trigraph};
