//! Exact Harary polynomials and friends for small simple graphs.
//!
//! A Harary polynomial counts partitions of the vertex set of a graph into
//! blocks that each induce a member of a fixed graph property `P`:
//!
//! ```text
//! chi_P(G; k) = sum_i h_i(G) * k(k-1)...(k-i+1)
//! ```
//!
//! where `h_i` is the number of such partitions with exactly `i` blocks. For
//! `P` = edge-less graphs this is the chromatic polynomial.
//!
//! The crate is organised as:
//!
//! - [`graph`]: bitset graphs of order at most 32, graph6 I/O, named
//!   families, canonical forms and small-graph censuses.
//! - [`properties`]: a composable algebra of graph properties with bounded
//!   closure checks and speed counters.
//! - [`polynomials`]: Harary counts, basis conversion, Stirling numbers and
//!   the classical polynomials (chromatic, independence, clique, domination,
//!   matching, characteristic, Laplacian).
//! - [`mates`]: fingerprint classification into mate classes and
//!   distinguishing-power comparison with witnesses.
//! - [`random`]: seeded `G(n, p)` sampling and Monte-Carlo experiments.
//! - [`harness`]: named, runnable checks of the structural claims.
//! - [`cli`]: the `harary` command-line front end.

pub mod cli;
pub mod error;
pub mod graph;
pub mod harness;
pub mod limits;
pub mod mates;
pub mod partitions;
pub mod polynomials;
pub mod properties;
pub mod random;

pub use error::{Error, Result};
pub use graph::{CanonicalCode, Graph, VertexSet};
pub use limits::Limits;
pub use polynomials::{FFPoly, MonoPoly};
pub use properties::Property;
