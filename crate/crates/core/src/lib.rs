//! Atom decomposition of undirected graphs.
//!
//! An atom (maximal prime subgraph) is a maximal connected subgraph without
//! a clique minimal separator. This crate finds all atoms without building a
//! triangulation: the convex hull of the closed neighborhood of the last
//! vertex of a Maximum Cardinality Search is an atom, and repeating the
//! search on what remains yields the rest.
//!
//! ```
//! use atomdecomp::{decompose_graph, fixtures, Algorithm, DecomposeOptions, TieBreak};
//!
//! let g = fixtures::worked_example();
//! let d = decompose_graph(&g, Algorithm::Rda, TieBreak::LowestId, &DecomposeOptions::default())?;
//! assert_eq!(d.atoms.len(), 5);
//! assert_eq!(d.separators.map(|s| s.len()), Some(4));
//! # Ok::<(), atomdecomp::Error>(())
//! ```
//!
//! Modules:
//! - [`graph`]: the immutable graph type, edge-list loading, set primitives.
//! - [`mcs`]: Maximum Cardinality Search orderings with weight traces.
//! - [`hull`]: convexity and convex hulls.
//! - [`decompose`]: the recursive and parallel decompositions.
//! - [`baseline`]: MCS-M based comparator.
//! - [`oracle`]: exhaustive reference implementations for small graphs.
//! - [`generate`]: seeded random graph families.

pub mod baseline;
pub mod decompose;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod hull;
pub mod mcs;
pub mod oracle;
mod scratch;

pub use decompose::{
    clique_minimal_separators, decompose_graph, prda, prda_with_cutoff, rda, Algorithm, AtomSet,
    CancelToken, DecomposeOptions, Decomposition,
};
pub use error::{Error, Result};
pub use graph::{Graph, Induced, LoadReport, VertexId, VertexSet};
pub use hull::{close_minimal_separator, convex_hull, is_convex};
pub use mcs::{
    is_valid_mcs_ordering, mcs_ordering, mcs_ordering_traced, Ordering, Stamp, TieBreak,
};
