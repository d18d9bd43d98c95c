//! Exact computation of the multiplicity of 1 as a Laplacian eigenvalue,
//! together with the graph reductions that preserve or shift it and
//! exhaustive sweeps that check the resulting identities on small graphs.
//!
//! * [`graph`]: graphs, graph6, canonical forms, structural predicates.
//! * [`linalg`]: integer matrices, exact rank and characteristic polynomials.
//! * [`reduction`]: multiplicity-preserving transformations and the fast
//!   multiplicity pipeline with replayable traces.
//! * [`enumerate`]: isomorph-free trees and unicyclic graphs, class filters,
//!   seeded random graphs.
//! * [`extremal`]: the graphs attaining the tree and unicyclic bounds.
//! * [`verify`]: verification suites and their reports.

#![allow(clippy::needless_range_loop)]

pub mod enumerate;
pub mod extremal;
pub mod graph;
pub mod linalg;
pub mod reduction;
pub mod verify;

pub use graph::{CanonicalForm, Graph, GraphError, PathKind, PathLocation, PendantProfile};
pub use linalg::{IntMatrix, LinalgError, RationalScalar};
