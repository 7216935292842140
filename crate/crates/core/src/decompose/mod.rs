//! Affine cells, hulls and the syzygy-driven partition algorithm.
//!
//! A cell `X = V(F) \ V(h)` is split along a syzygy witness `g` (with
//! `g f_i` in the ideal of the other equations and `g` outside `I_X`)
//! into `X \ V(g)`, where `f_i` becomes redundant, and the hull of `X`
//! along `g`. Recursion stops when the codimension meets its upper bound
//! or when no witness exists, in which case the sequence is locally
//! regular and the cell is equidimensional.

mod cell;
mod partition;
mod verify;

pub use cell::AffineCell;
pub use partition::{
    decompose, hull, kalk_part, remove, Certificate, Decomposer, Partition, PartitionEntry,
    SplitStrategy, Stats,
};
pub use verify::{verify_partition, VerificationReport};

#[cfg(test)]
mod tests;
