use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::arith::{PolyRing, Polynomial};
use crate::error::DecomposeError;
use crate::groebner::GroebnerBasis;
use crate::ideal::{dimension, saturate, saturate_basis};
use crate::syzygy::{get_syz, Witness};

/// The locally closed set `V(F) \ V(h)`, stored with the reduced DRL basis
/// `G` of `I_X = sat(<F>, h)`.
///
/// `h` is accumulated as a product. The empty cell produced by removing
/// `V(0)` carries `h = 0` and `G = {1}`.
#[derive(Clone)]
pub struct AffineCell {
    equations: Vec<Polynomial>,
    inequation: Polynomial,
    basis: GroebnerBasis,
}

impl AffineCell {
    /// The cell `V(F)` with `h = 1`. Zero polynomials are dropped; an
    /// all-zero input gives the whole space.
    pub fn new(ring: &Arc<PolyRing>, equations: &[Polynomial]) -> Self {
        let equations: Vec<Polynomial> = equations
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| f.to_ring(ring))
            .collect();
        let basis = GroebnerBasis::compute(ring, &equations);
        AffineCell {
            equations,
            inequation: Polynomial::one(ring),
            basis,
        }
    }

    /// Assembles a cell without recomputing its basis.
    pub(crate) fn from_parts(
        equations: Vec<Polynomial>,
        inequation: Polynomial,
        basis: GroebnerBasis,
    ) -> Self {
        AffineCell {
            equations,
            inequation,
            basis,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.basis.ring()
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.equations
    }

    pub fn inequation(&self) -> &Polynomial {
        &self.inequation
    }

    /// Reduced DRL basis of `I_X`.
    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    /// `X ∩ V(g)`: appends `g` to the sequence and saturates `G + <g>` by
    /// `h`. A zero `g` leaves the cell unchanged.
    pub fn add_equation(&self, g: &Polynomial) -> AffineCell {
        if g.is_zero() {
            return self.clone();
        }
        let g = g.to_ring(self.ring());
        let mut gens = self.basis.generators().to_vec();
        gens.push(g.clone());
        let basis = saturate(&gens, &self.inequation);
        let mut equations = self.equations.clone();
        equations.push(g);
        AffineCell {
            equations,
            inequation: self.inequation.clone(),
            basis,
        }
    }

    /// `X \ V(g)`: multiplies `h` by `g` and saturates `G` by `g`.
    /// Nonzero constants leave the cell unchanged; `g = 0` empties it.
    pub fn add_inequation(&self, g: &Polynomial) -> AffineCell {
        if g.is_constant() && !g.is_zero() {
            return self.clone();
        }
        let ring = self.ring();
        if g.is_zero() {
            return AffineCell {
                equations: self.equations.clone(),
                inequation: Polynomial::zero(ring),
                basis: GroebnerBasis::unit(ring),
            };
        }
        let g = g.to_ring(ring);
        AffineCell {
            equations: self.equations.clone(),
            inequation: &self.inequation * &g,
            basis: saturate_basis(&self.basis, &g),
        }
    }

    /// True iff `1 ∈ G`.
    pub fn is_empty(&self) -> bool {
        self.basis.is_unit()
    }

    /// `n - dim V(I_X)`.
    pub fn codim(&self) -> Result<usize, DecomposeError> {
        if self.is_empty() {
            return Err(DecomposeError::EmptyCell);
        }
        Ok((self.ring().nvars() as i64 - dimension(&self.basis)) as usize)
    }

    /// A syzygy entry of the sequence outside `I_X`, if any.
    pub fn get_syz(&self) -> Option<Witness> {
        get_syz(&self.equations, &self.basis)
    }

    /// Whether `G` equals a fresh saturation of the sequence by `h`.
    pub fn is_coherent(&self) -> bool {
        saturate(&self.equations, &self.inequation) == self.basis
    }

    /// Orders cells by basis, then sequence, then inequation.
    pub fn cmp_canonical(&self, other: &AffineCell) -> Ordering {
        self.basis
            .cmp_canonical(&other.basis)
            .then_with(|| cmp_lists(&self.equations, &other.equations))
            .then_with(|| self.inequation.cmp_terms(&other.inequation))
    }
}

fn cmp_lists(a: &[Polynomial], b: &[Polynomial]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let c = x.cmp_terms(y);
        if c != Ordering::Equal {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

impl fmt::Debug for AffineCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AffineCell")
            .field(
                "equations",
                &self
                    .equations
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>(),
            )
            .field("inequation", &self.inequation.to_string())
            .field("basis", &self.basis)
            .finish()
    }
}
