//! Exact integer computations of spanning-tree counts, rooted-spanning-forest
//! counts, Jacobians and forest groups of finite multigraphs.
//!
//! The forest group `coker(I + L(G))` of a graph is the Jacobian of the cone
//! over `G`, and its order `det(I + L(G))` is the number of spanning trees of
//! that cone. For circulant graphs and cobordisms of circulant graphs the
//! same groups are obtained from small companion matrices in [`fastpath`].
//!
//! All arithmetic is exact (`num_bigint::BigInt`); there is no floating point
//! anywhere in the crate.

pub mod closed_forms;
pub mod error;
pub mod fastpath;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod oracle;
pub mod parse;

pub use error::{Error, Result};
pub use fastpath::{FastPath, LaurentPoly};
pub use graph::{CirculantSpec, CobordismSpec, Multigraph};
pub use linalg::{AbelianGroup, IntMatrix, IntPoly, SmithForm};
pub use parse::GraphSource;
