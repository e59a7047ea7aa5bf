//! Exact arithmetic in F_q and F_q[T].

pub mod factor;
pub mod field;
pub mod poly;

pub use factor::{factor, monic_irreducibles, phi, Factorization, PrimePower};
pub use field::{FieldCtx, FqElem, MAX_FIELD_ORDER};
pub use poly::{enumerate_monic_below, Poly};
