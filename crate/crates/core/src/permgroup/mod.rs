//! Permutations in one-line notation and flag-shape combinatorics.

mod perm;
mod shape;

pub use perm::Permutation;
pub use shape::FlagShape;
