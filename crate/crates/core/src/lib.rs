//! Exact graph-polynomial toolkit.
//!
//! Computes dependence, independence and other induced-property generating
//! polynomials of small graphs with arbitrary-precision coefficients, decides
//! the log-concavity hierarchy and real-rootedness (via Sturm chains over the
//! rationals), builds the Hessian certificates behind ultra log-concavity of
//! dependence polynomials, and checks l-matroid exchange conditions on
//! independence systems. [`campaign`] drives exhaustive verification scans.

pub mod campaign;
pub mod error;
pub mod graph;
pub mod graph_poly;
pub mod hessian;
pub mod poly;
pub mod systems;

pub use error::{Error, Result};
pub use graph::Graph;
pub use poly::Polynomial;
