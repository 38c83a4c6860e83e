//! Spectral sufficient conditions for spanning k-trees and perfect matchings.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] and [`graph6`]: simple graphs, bipartite graphs, the join
//!   operators and graph6 interchange.
//! * [`canon`] and [`corpus`]: canonical labelling for small graphs and
//!   exhaustive enumeration of non-isomorphic graphs.
//! * [`spectral`]: `A`, `Q`, `A_a = aD + A`, a certified power iteration for
//!   the spectral radius, the Hong and Das bounds, equitable quotients.
//! * [`families`]: the extremal graphs together with their closed-form
//!   spectral radii and quotient polynomials.
//! * [`certifiers`]: exact k-tree search, Win-condition violators, bipartite
//!   perfect matchings with Hall violators.
//! * [`verify`]: theorem and lemma harnesses producing JSON reports.
//! * [`cli`]: the `specert` command-line front end.

pub mod canon;
pub mod certifiers;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Graph, VertexSet};
