//! Orientable graph embeddings through rotation systems.
//!
//! - [`map`]: dart-based combinatorial maps and face tracing
//! - [`ringel`]: quadrangular embeddings of `K_{n,m}`
//! - [`construct`]: genus-`L(n)` embeddings of `K_{n,n}` with a Hamiltonian face
//! - [`search`]: exhaustive and randomized search over Hamiltonian-face rotation systems
//! - [`interchange`]: the road-interchange model built on top of embeddings

pub mod construct;
pub mod interchange;
pub mod map;
pub mod ringel;
pub mod search;

pub use construct::{construct, l_of_n, ConstructionResult};
pub use interchange::{Color, Interchange, InterchangeError, OptimalityStatus, OptimalityVerdict};
pub use map::{CombinatorialMap, Dart, EdgeId, FaceCensus, MapError};
