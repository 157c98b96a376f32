//! Equivariant quantum Schubert polynomials for complete and partial flag
//! varieties, and the structure constants of the equivariant quantum
//! cohomology ring of `Fl(n)` computed by expanding products in the Schubert
//! basis.

pub mod error;
pub mod golden;
mod linalg;
mod memo;
pub mod permgroup;
pub mod polyring;
pub mod qhmodule;
pub mod quantize;
pub mod universal;

pub use error::{Error, Result};
pub use permgroup::{FlagShape, Permutation};
pub use polyring::{Family, Integer, Monomial, Poly, Var};
