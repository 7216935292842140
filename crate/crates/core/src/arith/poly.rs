use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::Monomial;
use super::ring::{same_ring, PolyRing};
use super::term::{self, Term};
use crate::error::ArithError;

/// A multivariate polynomial over a prime field.
///
/// Terms are stored strictly descending in the ring's monomial order with
/// nonzero coefficients; the zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term<()>>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: i64) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), ring.field().from_i64(c))
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), index), 1)
    }

    pub fn monomial(ring: &Arc<PolyRing>, mono: Monomial, coeff: u32) -> Self {
        assert_eq!(mono.nvars(), ring.nvars());
        let coeff = coeff % ring.field().modulus();
        let terms = if coeff == 0 {
            Vec::new()
        } else {
            vec![Term {
                pos: (),
                mono,
                coeff,
            }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// combining duplicates.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, u32)>,
    ) -> Self {
        let p = ring.field().modulus();
        let raw = terms
            .into_iter()
            .map(|(mono, coeff)| {
                assert_eq!(mono.nvars(), ring.nvars());
                Term {
                    pos: (),
                    mono,
                    coeff: coeff % p,
                }
            })
            .collect();
        Polynomial {
            ring: ring.clone(),
            terms: term::normalize(&**ring, raw),
        }
    }

    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<Term<()>>) -> Self {
        debug_assert!(term::is_sorted(&**ring, &terms));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn raw_terms(&self) -> &[Term<()>] {
        &self.terms
    }

    pub(crate) fn into_raw_terms(self) -> Vec<Term<()>> {
        self.terms
    }

    #[inline]
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Terms in descending order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, u32)> + '_ {
        self.terms.iter().map(|t| (&t.mono, t.coeff))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].coeff == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.coeff)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.mono.involves(var))
    }

    pub fn monic(mut self) -> Self {
        term::make_monic(self.ring.field(), &mut self.terms);
        self
    }

    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.ring.field().modulus();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        let mut terms = self.terms.clone();
        term::scale(self.ring.field(), &mut terms, c);
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn mul_term(&self, mono: &Monomial, coeff: u32) -> Self {
        let field = self.ring.field();
        if coeff.is_multiple_of(field.modulus()) {
            return Self::zero(&self.ring);
        }
        // multiplication by a monomial preserves the order
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                pos: (),
                mono: t.mono.mul(mono),
                coeff: field.mul(t.coeff, coeff),
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a point given by canonical field elements.
    pub fn eval(&self, point: &[u32]) -> u32 {
        assert_eq!(point.len(), self.ring.nvars());
        let field = self.ring.field();
        self.terms.iter().fold(0, |acc, t| {
            let value = t
                .mono
                .exponents()
                .iter()
                .zip(point)
                .fold(t.coeff, |v, (&e, &x)| field.mul(v, field.pow(x, e as u64)));
            field.add(acc, value)
        })
    }

    /// The same polynomial sorted for another compatible ring (usually a
    /// different monomial order).
    pub fn to_ring(&self, ring: &Arc<PolyRing>) -> Self {
        assert!(
            self.ring.is_compatible(ring),
            "incompatible polynomial rings"
        );
        let mut terms = self.terms.clone();
        if ring.order() != self.ring.order() {
            terms.sort_by(|a, b| ring.order().compare(&b.mono, &a.mono));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Views the polynomial in a ring with one extra variable at `pos`.
    pub fn extend(&self, ring: &Arc<PolyRing>, pos: usize) -> Self {
        assert_eq!(ring.nvars(), self.ring.nvars() + 1);
        let mut terms: Vec<Term<()>> = self
            .terms
            .iter()
            .map(|t| Term {
                pos: (),
                mono: t.mono.insert_var(pos),
                coeff: t.coeff,
            })
            .collect();
        terms.sort_by(|a, b| ring.order().compare(&b.mono, &a.mono));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Inverse of [`Polynomial::extend`]; fails if the variable at `pos`
    /// occurs.
    pub fn restrict(&self, ring: &Arc<PolyRing>, pos: usize) -> Result<Self, ArithError> {
        assert_eq!(ring.nvars() + 1, self.ring.nvars());
        if self.involves(pos) {
            return Err(ArithError::InvolvesDroppedVariable(
                self.ring.var_names()[pos].clone(),
            ));
        }
        let mut terms: Vec<Term<()>> = self
            .terms
            .iter()
            .map(|t| Term {
                pos: (),
                mono: t.mono.remove_var(pos),
                coeff: t.coeff,
            })
            .collect();
        terms.sort_by(|a, b| ring.order().compare(&b.mono, &a.mono));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials live in different rings"
        );
    }

    /// Term-by-term comparison in the ring order (then by coefficient);
    /// used for canonical sorting of output.
    pub fn cmp_terms(&self, other: &Polynomial) -> Ordering {
        let ord = self.ring.order();
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let c = ord
                .compare(&a.mono, &b.mono)
                .then_with(|| a.coeff.cmp(&b.coeff));
            if c != Ordering::Equal {
                return c;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.is_compatible(&other.ring) && {
            if self.ring.order() == other.ring.order() {
                self.terms == other.terms
            } else {
                self.terms == other.to_ring(&self.ring).terms
            }
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let one = Monomial::one(self.ring.nvars());
        let terms = term::add_scaled(&*self.ring, &self.terms, 1, &one, &rhs.terms);
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let one = Monomial::one(self.ring.nvars());
        let minus_one = self.ring.field().neg(1);
        let terms = term::add_scaled(&*self.ring, &self.terms, minus_one, &one, &rhs.terms);
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let field = self.ring.field();
        let mut raw = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                raw.push(Term {
                    pos: (),
                    mono: a.mono.mul(&b.mono),
                    coeff: field.mul(a.coeff, b.coeff),
                });
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: term::normalize(&*self.ring, raw),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
