use std::cmp::Ordering;
use std::fmt;

use super::monomial::Monomial;

/// Monomial orders used by the engine.
///
/// `BlockElim(k)` ranks the first `k` variables above all others: two
/// monomials are compared by degree-reverse-lexicographic order on the
/// first block, and only on a tie on the remaining variables (again by
/// DRL). With `k = 1` and the auxiliary variable in front, the induced
/// order on the other variables is plain DRL.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    BlockElim(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex(a, b, 0, a.nvars())),
            MonomialOrder::BlockElim(k) => {
                let k = k.min(a.nvars());
                drl_range(a, b, 0, k).then_with(|| drl_range(a, b, k, a.nvars()))
            }
        }
    }
}

fn drl_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u32 = a.exponents()[lo..hi].iter().map(|&e| e as u32).sum();
    let db: u32 = b.exponents()[lo..hi].iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| revlex(a, b, lo, hi))
}

/// Among equal degrees, the smaller exponent in the last differing
/// position makes the monomial larger.
#[inline]
fn revlex(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    for i in (lo..hi).rev() {
        if ea[i] != eb[i] {
            return eb[i].cmp(&ea[i]);
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => write!(f, "drl"),
            MonomialOrder::BlockElim(k) => write!(f, "block-drl({k})"),
        }
    }
}
