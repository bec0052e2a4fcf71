//! Exact computation of distance ideals of graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bitset graphs, graph6 / edge-list ingestion, distances,
//!   induced-subgraph search, blow-ups and the catalog of named forbidden graphs.
//! * [`linalg`]: big-integer matrices, Smith normal form, Bareiss
//!   determinants and minor gcds.
//! * [`poly`]: sparse multivariate polynomials over `Z` or `Q` and Gröbner
//!   bases (Buchberger over `Q`, strong bases over `Z`).
//! * [`ideal`]: generalized distance matrices, their minors, distance ideals,
//!   `Φ`, evaluated Smith forms and nontriviality certificates.
//! * [`classify`]: membership in the `Λ` families with witnesses.
//! * [`harness`]: graph streams and the reproducible verification suites.

pub mod classify;
mod error;
pub mod graph;
pub mod harness;
pub mod ideal;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
