//! Galois group presentations and genera of quasi-cyclotomic function fields
//! over `k = F_q(T)`, q odd.
//!
//! The layers build on each other:
//!
//! - [`algebra`]: F_q, F_q[T], irreducibility and factorization.
//! - [`symbols`]: the (q−1)-th power residue symbol and its composite extension.
//! - [`cyclotomic`]: conductors, the structure of `Gal(K/k)` and the genus of `K`.
//! - [`quasi`]: pair sets, the formal sums `a_PQ`, ramification in `K̃/K`,
//!   the presentation of `Gal(K̃/k)` and the genus of `K̃`.
//! - [`report`]: JSON job configs, the full pipeline and its report.
//! - [`selfcheck`]: exhaustive consistency suites.

pub mod algebra;
pub mod cyclotomic;
pub mod error;
pub mod quasi;
pub mod report;
pub mod selfcheck;
pub mod symbols;

pub use error::{Error, ErrorKind, Result};
