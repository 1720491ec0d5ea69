//! Structure and hamiltonicity analysis of plane triangulations.
//!
//! The crate revolves around one validated type, [`Triangulation`]: a simple
//! 3-connected triangulation of the sphere stored as a rotation system. On
//! top of it sit
//!
//! - [`planar_code`]: the standard binary exchange format plus a readable
//!   text form,
//! - [`canonical`]: canonical codes for isomorphism testing and dedup,
//! - [`surgery`]: local rewrites (edge contraction, face and edge
//!   subdivision, diagonal flips) that stay inside the class,
//! - [`structure`]: separating triangles, 4-connectivity, reducible edges,
//!   and scattering certificates that rule out hamiltonian connectedness,
//! - [`decomposition`]: splitting along separating triangles into a tree of
//!   4-connected pieces,
//! - [`search`]: exhaustive hamiltonian path and cycle searches,
//! - [`checker`]: a pruned all-pairs hamiltonian-connectedness checker with
//!   an auditable rule trail,
//! - [`constructions`]: parameterized families, including triangulations
//!   that are hamiltonian yet not hamiltonian-connected,
//! - [`enumerate`]: exhaustive enumeration of all triangulations of a given
//!   order up to isomorphism,
//! - [`cli`]: the command-line front end.
//!
//! See the `examples/` directory for end-to-end tours of each capability.

pub mod canonical;
pub mod checker;
pub mod cli;
pub mod constructions;
pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod planar_code;
pub mod plane_graph;
pub mod search;
pub mod structure;
pub mod surgery;
pub mod triangulation;
pub mod vertex_set;

pub use error::{Error, Result};
pub use plane_graph::{PlaneGraph, Vertex};
pub use triangulation::{EdgePair, Triangulation, Triple};
pub use vertex_set::VertexSet;
