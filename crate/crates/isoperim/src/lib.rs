//! Vertex-isoperimetric minimal sets in the planar integer lattice.
//!
//! A finite set `A` of lattice points has vertex boundary `∂A`: the points
//! outside `A` with a 4-neighbor inside `A`. `A` is *minimal* when no set of
//! the same size has a smaller boundary. This crate computes boundaries,
//! canonical forms under the lattice symmetries, the diagonal box families
//! that realize the isoperimetric minima, the greedy minimal sequence of
//! Wang and Wang, classification predicates (saturated, efficient, dead,
//! mortal), the graph of minimal classes under single-vertex moves, and
//! brute-force oracles that certify all of it on small sizes.

#![forbid(unsafe_code)]

mod error;
pub mod boxes;
pub mod classify;
pub mod graphmin;
pub mod lattice;
pub mod oracle;
pub mod symmetry;
pub mod wangwang;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
