//! Localized spectral Turán toolkit for weighted graphs.
//!
//! The crate computes per-edge and per-vertex largest-clique sizes, spectral
//! radii of weighted adjacency matrices, a catalog of clique-localized bounds on
//! the spectral radius (and on edge counts and chromatic numbers), optimizes the
//! weighted Motzkin–Straus quadratic forms over the standard simplex, certifies
//! equality in the weighted localized spectral bound, and runs all of it over
//! exhaustively enumerated or randomly generated graphs.
//!
//! ```
//! use localturan::{bounds, graph::families};
//!
//! let g = families::complete(3);
//! let report = bounds::bound_main_weighted(&g).unwrap();
//! assert!(report.equality);
//! ```

pub mod bounds;
pub mod certify;
pub mod clique;
pub mod coloring;
mod error;
pub mod enumerate;
pub mod graph;
pub mod json;
pub mod numeric;
pub mod random;
pub mod simplex;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Partition, WeightedGraph};
