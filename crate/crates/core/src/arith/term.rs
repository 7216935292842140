//! Sorted term vectors shared by polynomials and free-module elements.
//!
//! A term carries a position (`()` for polynomials, a component index for
//! module elements), a monomial and a nonzero coefficient. Vectors are kept
//! strictly descending under the layout's term order.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;

use super::field::PrimeField;
use super::monomial::Monomial;
use super::ring::PolyRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Term<P> {
    pub pos: P,
    pub mono: Monomial,
    pub coeff: u32,
}

/// Coefficient field plus a total order on (position, monomial) keys.
pub(crate) trait Layout: Sync {
    type Pos: Copy + Ord + Eq + Hash + Debug + Send + Sync;
    /// Rank-one layouts: the product criterion applies and a constant
    /// leading term means the unit ideal.
    const SCALAR: bool;

    fn field(&self) -> &PrimeField;
    fn cmp_key(&self, a: (Self::Pos, &Monomial), b: (Self::Pos, &Monomial)) -> Ordering;

    #[inline]
    fn cmp_terms(&self, a: &Term<Self::Pos>, b: &Term<Self::Pos>) -> Ordering {
        self.cmp_key((a.pos, &a.mono), (b.pos, &b.mono))
    }
}

impl Layout for PolyRing {
    type Pos = ();
    const SCALAR: bool = true;

    #[inline]
    fn field(&self) -> &PrimeField {
        PolyRing::field(self)
    }

    #[inline]
    fn cmp_key(&self, a: ((), &Monomial), b: ((), &Monomial)) -> Ordering {
        self.order().compare(a.1, b.1)
    }
}

/// Sorts descending, merges equal keys and drops zero coefficients.
pub(crate) fn normalize<L: Layout>(layout: &L, mut terms: Vec<Term<L::Pos>>) -> Vec<Term<L::Pos>> {
    let field = layout.field();
    terms.sort_by(|a, b| layout.cmp_terms(b, a));
    let mut out: Vec<Term<L::Pos>> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.pos == t.pos && last.mono == t.mono => {
                last.coeff = field.add(last.coeff, t.coeff);
                if last.coeff == 0 {
                    out.pop();
                }
            }
            _ => {
                if t.coeff != 0 {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// `a + c * shift * b`, both inputs sorted.
pub(crate) fn add_scaled<L: Layout>(
    layout: &L,
    a: &[Term<L::Pos>],
    c: u32,
    shift: &Monomial,
    b: &[Term<L::Pos>],
) -> Vec<Term<L::Pos>> {
    let field = layout.field();
    if c == 0 || b.is_empty() {
        return a.to_vec();
    }
    let shifted = |t: &Term<L::Pos>| Term {
        pos: t.pos,
        mono: t.mono.mul(shift),
        coeff: field.mul(c, t.coeff),
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut pending = b.first().map(shifted);
    while let Some(tb) = pending {
        if i == a.len() {
            out.push(tb);
            out.extend(b[j + 1..].iter().map(shifted));
            return out;
        }
        match layout.cmp_terms(&a[i], &tb) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(tb);
                j += 1;
                pending = b.get(j).map(shifted);
            }
            Ordering::Equal => {
                let s = field.add(a[i].coeff, tb.coeff);
                if s != 0 {
                    out.push(Term { coeff: s, ..tb });
                }
                i += 1;
                j += 1;
                pending = b.get(j).map(shifted);
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out
}

pub(crate) fn scale<P: Copy>(field: &PrimeField, terms: &mut [Term<P>], c: u32) {
    for t in terms {
        t.coeff = field.mul(t.coeff, c);
    }
}

/// Divides by the leading coefficient.
pub(crate) fn make_monic<P: Copy>(field: &PrimeField, terms: &mut [Term<P>]) {
    if let Some(lead) = terms.first() {
        if lead.coeff != 1 {
            let inv = field
                .inv(lead.coeff)
                .expect("leading coefficient is nonzero");
            scale(field, terms, inv);
        }
    }
}

pub(crate) fn is_sorted<L: Layout>(layout: &L, terms: &[Term<L::Pos>]) -> bool {
    terms
        .windows(2)
        .all(|w| layout.cmp_terms(&w[0], &w[1]) == Ordering::Greater)
        && terms.iter().all(|t| t.coeff != 0)
}
