//! Finite matroids from circuit families, 2-sums, trees of matroids with
//! overlap one, canonical adhesion-2 decompositions, eventually periodic
//! rays of matroids and one-ended layered graphs.
//!
//! Everything is exact and brute force at small scale. `oracle` holds
//! independent reference implementations and `suite` runs the acceptance
//! checks against them.

pub mod cli;
pub mod corpus;
pub mod decomposition;
pub mod dot;
pub mod error;
pub mod format;
pub mod graph;
pub mod layered;
pub mod matroid;
pub mod oracle;
pub mod ray;
pub mod set;
pub mod suite;
pub mod tree;
pub mod two_sum;

pub use decomposition::{canonical_decompose, TorsoKind, TreeDecomposition};
pub use error::{Axiom, Error, Result};
pub use graph::{FiniteGraph, GraphPath, OrientedArcSpec};
pub use layered::{LayeredGraph, Psi, SymbolicEdgeSet};
pub use matroid::{Matroid, ScrawlVerdict, Separation};
pub use ray::{c4_ray, q_ray, RayTree, WindowMode};
pub use set::ElemSet;
pub use tree::{GroundView, MatroidTree, Precircuit};
pub use two_sum::{fold_two_sums, two_sum, SharedEdgeWitness};
