//! Prime-field coefficients, monomials, monomial orders and polynomials.

mod field;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;
pub(crate) mod term;

pub use field::{is_prime, PrimeField, MODULUS_LIMIT};
pub use monomial::{Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use poly::Polynomial;
pub(crate) use ring::same_ring;
pub use ring::{PolyRing, VariableContext};
