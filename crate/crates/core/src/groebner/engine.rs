//! Buchberger's algorithm over sorted term vectors.
//!
//! The same code runs for polynomials (`Pos = ()`) and for elements of a
//! free module (`Pos = component index`). Pairs are pruned with the
//! Gebauer-Moller update; the product criterion is only used for rank-one
//! layouts. Pairs are selected by smallest lcm degree (normal strategy).

use crate::arith::term::{add_scaled, make_monic, Layout, Term};
use crate::arith::Monomial;

pub(crate) type Vector<P> = Vec<Term<P>>;

#[inline]
fn find_reducer<'a, P: Copy + Eq>(
    reducers: &[&'a [Term<P>]],
    t: &Term<P>,
) -> Option<&'a [Term<P>]> {
    reducers
        .iter()
        .find(|g| g[0].pos == t.pos && g[0].mono.divides(&t.mono))
        .copied()
}

/// Coefficient that cancels `lead` against a reducer with leading
/// coefficient `lc`, negated for use with `add_scaled`.
#[inline]
fn cancel_coeff<L: Layout>(layout: &L, lead: u32, lc: u32) -> u32 {
    let field = layout.field();
    let q = if lc == 1 {
        lead
    } else {
        field.mul(lead, field.inv(lc).expect("nonzero leading coefficient"))
    };
    field.neg(q)
}

/// Reduces until the leading term is irreducible (or the vector vanishes).
pub(crate) fn top_reduce<L: Layout>(
    layout: &L,
    mut f: Vector<L::Pos>,
    reducers: &[&[Term<L::Pos>]],
) -> Vector<L::Pos> {
    while let Some(lead) = f.first().copied() {
        let Some(g) = find_reducer(reducers, &lead) else {
            break;
        };
        let shift = lead.mono.div(&g[0].mono).expect("divisor checked");
        let c = cancel_coeff(layout, lead.coeff, g[0].coeff);
        f = add_scaled(layout, &f[1..], c, &shift, &g[1..]);
    }
    f
}

/// Full reduction: no term of the result is divisible by a reducer's
/// leading term. Reducers are tried in the given order.
pub(crate) fn full_reduce<L: Layout>(
    layout: &L,
    mut f: Vector<L::Pos>,
    reducers: &[&[Term<L::Pos>]],
) -> Vector<L::Pos> {
    let mut rem = Vec::new();
    let mut start = 0;
    while start < f.len() {
        let lead = f[start];
        match find_reducer(reducers, &lead) {
            Some(g) => {
                let shift = lead.mono.div(&g[0].mono).expect("divisor checked");
                let c = cancel_coeff(layout, lead.coeff, g[0].coeff);
                f = add_scaled(layout, &f[start + 1..], c, &shift, &g[1..]);
                start = 0;
            }
            None => {
                rem.push(lead);
                start += 1;
            }
        }
    }
    rem
}

/// S-polynomial of two monic vectors with leading terms in the same position.
pub(crate) fn s_vector<L: Layout>(
    layout: &L,
    f: &[Term<L::Pos>],
    g: &[Term<L::Pos>],
) -> Vector<L::Pos> {
    debug_assert!(f[0].pos == g[0].pos && f[0].coeff == 1 && g[0].coeff == 1);
    let lcm = f[0].mono.lcm(&g[0].mono);
    let mf = lcm.div(&f[0].mono).expect("lcm");
    let mg = lcm.div(&g[0].mono).expect("lcm");
    let shifted: Vector<L::Pos> = f[1..]
        .iter()
        .map(|t| Term {
            pos: t.pos,
            mono: t.mono.mul(&mf),
            coeff: t.coeff,
        })
        .collect();
    add_scaled(layout, &shifted, layout.field().neg(1), &mg, &g[1..])
}

struct Pair<P> {
    i: usize,
    j: usize,
    pos: P,
    lcm: Monomial,
}

struct State<P> {
    polys: Vec<Vector<P>>,
    active: Vec<bool>,
    pairs: Vec<Pair<P>>,
}

impl<P: Copy + Eq> State<P> {
    fn reducers(&self) -> Vec<&[Term<P>]> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p.as_slice())
            .collect()
    }

    fn pop_pair<L: Layout<Pos = P>>(&mut self, layout: &L) -> Option<Pair<P>> {
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.lcm
                .degree()
                .cmp(&pb.lcm.degree())
                .then_with(|| layout.cmp_key((pa.pos, &pa.lcm), (pb.pos, &pb.lcm)))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    /// Adds a new monic, top-reduced element and updates the pair set
    /// following Gebauer and Moller.
    fn insert<L: Layout<Pos = P>>(&mut self, h: Vector<P>) {
        let hi = self.polys.len();
        let (hpos, hlm) = (h[0].pos, h[0].mono);
        self.polys.push(h);
        self.active.push(true);

        // candidate pairs (g, h)
        let cands: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&k| self.active[k] && self.polys[k][0].pos == hpos)
            .map(|k| {
                let glm = &self.polys[k][0].mono;
                (k, glm.lcm(&hlm), L::SCALAR && glm.is_coprime(&hlm))
            })
            .collect();
        let mut keep = vec![false; cands.len()];
        for a in 0..cands.len() {
            if cands[a].2 {
                keep[a] = true;
                continue;
            }
            let dominated = (0..cands.len())
                .any(|b| b != a && (b > a || keep[b]) && cands[b].1.divides(&cands[a].1));
            keep[a] = !dominated;
        }

        // chain criterion on old pairs
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if p.pos != hpos || !hlm.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i][0].mono.lcm(&hlm);
            let lj = polys[p.j][0].mono.lcm(&hlm);
            li == p.lcm || lj == p.lcm
        });

        for (a, (k, lcm, coprime)) in cands.into_iter().enumerate() {
            if keep[a] && !coprime {
                self.pairs.push(Pair {
                    i: k,
                    j: hi,
                    pos: hpos,
                    lcm,
                });
            }
        }

        for k in 0..hi {
            if self.active[k] && self.polys[k][0].pos == hpos && hlm.divides(&self.polys[k][0].mono)
            {
                self.active[k] = false;
            }
        }
    }
}

/// Reduced Groebner basis of the submodule generated by `input`, sorted by
/// ascending leading term. All elements are monic.
pub(crate) fn groebner_basis<L: Layout>(
    layout: &L,
    input: Vec<Vector<L::Pos>>,
) -> Vec<Vector<L::Pos>> {
    let field = layout.field();
    let mut input: Vec<_> = input.into_iter().filter(|f| !f.is_empty()).collect();
    input.sort_by(|a, b| layout.cmp_terms(&a[0], &b[0]));

    let mut st = State {
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };

    // Returns the unit element if the ideal turns out to be the whole ring.
    let absorb = |st: &mut State<L::Pos>, f: Vector<L::Pos>| -> Option<Vector<L::Pos>> {
        let mut r = {
            let reducers = st.reducers();
            top_reduce(layout, f, &reducers)
        };
        if r.is_empty() {
            return None;
        }
        make_monic(field, &mut r);
        if L::SCALAR && r[0].mono.is_one() {
            return Some(r);
        }
        st.insert::<L>(r);
        None
    };

    for f in input {
        if let Some(unit) = absorb(&mut st, f) {
            return vec![unit];
        }
    }
    while let Some(pair) = st.pop_pair(layout) {
        let s = s_vector(layout, &st.polys[pair.i], &st.polys[pair.j]);
        if let Some(unit) = absorb(&mut st, s) {
            return vec![unit];
        }
    }

    let minimal: Vec<&Vector<L::Pos>> = st
        .polys
        .iter()
        .zip(&st.active)
        .filter(|(_, &a)| a)
        .map(|(p, _)| p)
        .collect();
    let mut out: Vec<Vector<L::Pos>> = minimal
        .iter()
        .enumerate()
        .map(|(k, g)| {
            let others: Vec<&[Term<L::Pos>]> = minimal
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, o)| o.as_slice())
                .collect();
            let mut v = vec![g[0]];
            v.extend(full_reduce(layout, g[1..].to_vec(), &others));
            v
        })
        .collect();
    out.sort_by(|a, b| layout.cmp_terms(&a[0], &b[0]));
    out
}
