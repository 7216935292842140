//! Equidimensional decomposition of affine algebraic sets over prime fields.
//!
//! The input is a finite sequence `F` of polynomials; the output is an
//! irredundant Kalkbrener partition of `V(F)`: locally closed cells
//! `V(F_i) \ V(h_i)` that share no irreducible components, each
//! equidimensional, whose closures together have exactly the components
//! of `V(F)`. Equidimensionality is certified either by a codimension
//! bound or by showing that the cell's sequence is a local regular
//! sequence through its syzygies.
//!
//! Module map:
//! - [`arith`]: prime fields, monomials, orders, polynomials, text syntax.
//! - [`groebner`]: Buchberger's algorithm and normal forms.
//! - [`ideal`]: saturation, elimination, dimension, intersection.
//! - [`syzygy`]: syzygy modules and the witness search on a cell.
//! - [`decompose`]: affine cells, hulls and the partition algorithm.

pub mod arith;
pub mod decompose;
mod error;
pub mod groebner;
pub mod ideal;
pub mod syzygy;
#[cfg(test)]
mod testutil;

pub use arith::{Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField};
pub use decompose::{AffineCell, Certificate, Decomposer, Partition, PartitionEntry};
pub use error::{ArithError, DecomposeError, ParseError};
pub use groebner::GroebnerBasis;
