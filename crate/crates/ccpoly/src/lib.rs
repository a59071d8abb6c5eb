//! Exact-arithmetic toolkit for cardinality-constrained path and cycle
//! polytopes.
//!
//! Given a complete digraph (or graph) and a strictly increasing list of
//! allowed cardinalities, the convex hulls of the incidence vectors of
//! simple paths or cycles whose size is one of the allowed values form
//! four polytope families: directed/undirected, path/cycle. This crate
//! provides
//!
//! - generators for the inequality classes that describe these polytopes,
//!   with the known facet classification for each class encoded as a
//!   three-valued predicate;
//! - brute-force ground truth at desk scale: polytope dimension, validity
//!   and facet certification by exact affine-rank computations;
//! - separation oracles (max-flow based, greedy, and exhaustive for the
//!   NP-hard classes) over exact rational fractional points;
//! - lifting of path facets to cycle facets and deorientation of
//!   symmetric inequalities to the undirected families;
//! - an exact rational simplex and a cutting-plane solver for min-weight
//!   cardinality-constrained path/cycle instances.
//!
//! Everything is computed in exact rational arithmetic; no floating point
//! is involved in any decision. All types are immutable after
//! construction and all operations are pure, so values may be shared
//! freely across threads.

pub mod cardinality;
pub mod enumerate;
pub mod equivalence;
pub mod error;
pub mod generators;
pub mod graph;
pub mod inequality;
pub mod io;
pub mod facet;
pub mod linalg;
pub mod maxflow;
pub mod rational;
pub mod separation;
pub mod simplex;
pub mod solver;
pub mod transform;
pub mod verify;

pub use cardinality::CardinalitySequence;
pub use enumerate::IncidenceVector;
pub use error::{Error, Result};
pub use graph::{CompleteDigraph, CompleteGraph, PathDigraph, Space, Variant};
pub use inequality::{ClassSpec, ClassTag, LinearInequality, Sense};
pub use rational::Rational;
