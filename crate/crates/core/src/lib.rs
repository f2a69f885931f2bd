//! Spectral spread of graphs with excluded clique minors.
//!
//! * [`graph`]: bitset graphs, graph6, named families, canonical forms.
//! * [`spectral`]: dense symmetric eigensolver, spread, interior-eigenvalue
//!   bounds for joins.
//! * [`minor`]: exact clique/biclique minor search with certificates and a
//!   contraction-closure reference implementation.
//! * [`join_series`]: eigenvalues of `H ∨ mK₁` via the secular equation and
//!   its Laurent expansion.
//! * [`search`]: isomorph-free enumeration and spread maximization over
//!   `K_r`-minor-free graphs.

pub mod error;
pub mod graph;
pub mod join_series;
pub mod minor;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
