//! Structural graph toolkit for large pathwidth and the induced subgraphs it forces.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: immutable simple graphs with stable vertex identifiers, plus
//!   edge-list and graph6 IO.
//! - [`generators`]: complete binary trees, k-ary trees, subdivisions, net-graph
//!   replacements, wattles and the layered "hat" trees, each with a certificate.
//! - [`width`]: exact pathwidth (subset DP and the tree algorithm), minor lower
//!   bounds and bounded-degree subgraph search.
//! - [`patterns`]: induced subgraph / induced subdivision search and the shape
//!   recognisers (forks, semi-forks, tripods, ...).
//! - [`minors`]: minor models, their validator, minor search, sparsifiable
//!   vertices, the violating-edge repair loop and radius-2 ball contraction.
//! - [`extract`]: induced minor to wattle to monochromatic subtree to induced
//!   subgraph, the two pipelines and the forbidden-set decision procedure.
//! - [`cert`]: text serialisation of every certificate kind, keyed by graph
//!   content hashes.
//!
//! Every search takes a [`Budget`] and distinguishes "not found" from
//! "budget exhausted".

pub mod budget;
pub mod cert;
pub mod error;
pub mod extract;
pub mod generators;
pub mod graph;
pub mod minors;
pub mod patterns;
pub mod width;

pub use budget::{Budget, Exhausted, Search};
pub use error::{Error, Result};
pub use graph::{Graph, Layering, RootedTree, Vertex};
