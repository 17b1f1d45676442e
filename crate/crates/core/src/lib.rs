//! Shortest directed networks in the plane.
//!
//! A directed network over a set of sources `A` and sinks `B` (an
//! *(A,B)-network*) is a geometric digraph containing a directed path from
//! every source to every sink. Networks may use extra nodes, called Steiner
//! points, whose positions are free.
//!
//! This crate provides:
//!
//! - [`norms`]: the Euclidean norm and four polygonal plane norms, together
//!   with dominance gaps, broken-segment decompositions and axis projections;
//! - [`digraph`]: embedded directed networks, validity, length,
//!   simplification and convex-hull checks;
//! - [`local_structure`]: Fermat–Torricelli computations, the local
//!   classifier for Steiner points of shortest networks, the shortening
//!   moves used to reject non-optimal configurations, and decomposition
//!   into full Steiner trees and pass-through segments;
//! - [`solver`]: a desk-scale exact solver that enumerates candidate simple
//!   topologies and minimizes Steiner coordinates by convex descent;
//! - [`certificates`]: verified lower bounds on network length built from
//!   dominated polygonal norms and per-pair direction-class accounting;
//! - [`instance`] and [`fixtures`]: problem instance I/O and the built-in
//!   benchmark configurations.

pub mod certificates;
pub mod digraph;
pub mod fixtures;
pub mod instance;
pub mod local_structure;
pub mod norms;
pub mod solver;

pub use digraph::{GeoDigraph, Node, NodeId, NodeRole};
pub use instance::Instance;
pub use norms::{Norm, NormKind, Point};
