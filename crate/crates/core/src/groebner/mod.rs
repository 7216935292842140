//! Groebner bases of polynomial ideals: Buchberger's algorithm, normal
//! forms, membership and ideal equality.
//!
//! Division always reduces by the first basis element (in basis order,
//! i.e. ascending leading monomial) whose leading monomial divides the
//! current term, so normal forms are deterministic.

pub(crate) mod engine;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::arith::term::{add_scaled, Term};
use crate::arith::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial};

/// A reduced Groebner basis: monic generators, sorted by ascending leading
/// monomial, no leading monomial dividing any term of another generator.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Reduced basis of the ideal generated by `gens`, for the order of
    /// `ring`. Inputs may use a different order over the same variables.
    pub fn compute(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Self {
        let input = gens
            .iter()
            .map(|g| g.to_ring(ring).into_raw_terms())
            .collect();
        let out = engine::groebner_basis(&**ring, input);
        GroebnerBasis {
            ring: ring.clone(),
            generators: out
                .into_iter()
                .map(|v| Polynomial::from_sorted(ring, v))
                .collect(),
        }
    }

    /// The basis `{1}` of the unit ideal.
    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            generators: vec![Polynomial::one(ring)],
        }
    }

    /// Wraps generators that are already a reduced basis in ascending order.
    pub(crate) fn from_reduced(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Self {
        let gb = GroebnerBasis {
            ring: ring.clone(),
            generators,
        };
        debug_assert!(gb.is_reduced());
        gb
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    /// True for the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True iff `1` lies in the ideal.
    pub fn is_unit(&self) -> bool {
        self.generators.first().is_some_and(|g| g.is_unit())
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.generators.iter().filter_map(|g| g.leading_monomial())
    }

    fn reducers(&self) -> Vec<&[Term<()>]> {
        self.generators.iter().map(|g| g.raw_terms()).collect()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let f = if same_ring(f.ring(), &self.ring) {
            f.clone()
        } else {
            f.to_ring(&self.ring)
        };
        if self.generators.is_empty() || f.is_zero() {
            return f;
        }
        let rem = engine::full_reduce(&*self.ring, f.into_raw_terms(), &self.reducers());
        Polynomial::from_sorted(&self.ring, rem)
    }

    pub fn is_member(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        if self.is_unit() {
            return true;
        }
        self.normal_form(f).is_zero()
    }

    /// `other ⊆ self`
    pub fn contains(&self, other: &GroebnerBasis) -> bool {
        other.generators.iter().all(|g| self.is_member(g))
    }

    /// Equality of ideals, decided by comparing reduced bases.
    ///
    /// Panics if the two bases use different monomial orders.
    pub fn ideal_equal(&self, other: &GroebnerBasis) -> bool {
        assert!(
            self.ring.is_compatible(&other.ring) && self.order() == other.order(),
            "bases over different rings or orders"
        );
        self.generators == other.generators
    }

    /// Checks the reduced-basis invariants (monic, minimal, tail-reduced,
    /// sorted).
    pub fn is_reduced(&self) -> bool {
        let ord = self.order();
        let monic = self.generators.iter().all(|g| g.leading_coeff() == Some(1));
        let sorted = self.generators.windows(2).all(|w| {
            ord.compare(
                w[0].leading_monomial().unwrap(),
                w[1].leading_monomial().unwrap(),
            ) == Ordering::Less
        });
        let tails = self.generators.iter().enumerate().all(|(i, g)| {
            self.generators.iter().enumerate().all(|(j, h)| {
                let lm = h.leading_monomial().unwrap();
                g.terms()
                    .enumerate()
                    .all(|(k, (m, _))| !lm.divides(m) || (i == j && k == 0))
            })
        });
        monic && sorted && tails
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let reducers = self.reducers();
        let gens = &self.generators;
        (0..gens.len()).all(|i| {
            (i + 1..gens.len()).all(|j| {
                let s = engine::s_vector(&*self.ring, gens[i].raw_terms(), gens[j].raw_terms());
                engine::full_reduce(&*self.ring, s, &reducers).is_empty()
            })
        })
    }

    /// Lexicographic comparison of the generator lists; a total order on
    /// reduced bases used for canonical output sorting.
    pub fn cmp_canonical(&self, other: &GroebnerBasis) -> Ordering {
        for (a, b) in self.generators.iter().zip(&other.generators) {
            let c = a.cmp_terms(b);
            if c != Ordering::Equal {
                return c;
            }
        }
        self.generators.len().cmp(&other.generators.len())
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring.is_compatible(&other.ring)
            && self.order() == other.order()
            && self.generators == other.generators
    }
}

impl Eq for GroebnerBasis {}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.generators.iter().map(|g| g.to_string()))
            .finish()
    }
}

/// Multivariate division with quotients: returns `(q, r)` with
/// `f = sum q_i d_i + r` and no term of `r` divisible by a leading
/// monomial of the divisors. Divisors are tried in order.
pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
    let ring = f.ring().clone();
    let field = *ring.field();
    let divisors: Vec<Polynomial> = divisors.iter().map(|d| d.to_ring(&ring)).collect();
    let mut quotients: Vec<Vec<Term<()>>> = vec![Vec::new(); divisors.len()];
    let mut rem = Vec::new();
    let mut work = f.raw_terms().to_vec();
    let one = Monomial::one(ring.nvars());
    while let Some(lead) = work.first().copied() {
        let hit = divisors.iter().enumerate().find(|(_, d)| {
            d.leading_monomial()
                .is_some_and(|lm| lm.divides(&lead.mono))
        });
        match hit {
            Some((k, d)) => {
                let lc = d.leading_coeff().unwrap();
                let c = field.mul(lead.coeff, field.inv(lc).expect("nonzero"));
                let shift = lead.mono.div(d.leading_monomial().unwrap()).unwrap();
                let q = [Term {
                    pos: (),
                    mono: shift,
                    coeff: c,
                }];
                quotients[k] = add_scaled(&*ring, &quotients[k], 1, &one, &q);
                work = add_scaled(
                    &*ring,
                    &work[1..],
                    field.neg(c),
                    &shift,
                    &d.raw_terms()[1..],
                );
            }
            None => {
                rem.push(lead);
                work.remove(0);
            }
        }
    }
    (
        quotients
            .into_iter()
            .map(|q| Polynomial::from_sorted(&ring, q))
            .collect(),
        Polynomial::from_sorted(&ring, rem),
    )
}
