//! Ideal operations on top of the Groebner engine: elimination,
//! saturation, Krull dimension, radical membership and intersection.
//!
//! Saturation and radical membership use the Rabinowitsch device: a fresh
//! variable `t` is inserted at position 0 and eliminated under
//! `BlockElim(1)`. Inside each block the order is DRL, so the `t`-free part
//! of a reduced block basis is already the reduced DRL basis of the
//! elimination ideal.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::{MonomialOrder, PolyRing, Polynomial};
use crate::groebner::GroebnerBasis;

/// A list of generators with a lazily computed basis in the ring's order.
pub struct IdealHandle {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    basis: OnceLock<GroebnerBasis>,
}

impl IdealHandle {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Self {
        IdealHandle {
            ring: ring.clone(),
            generators,
            basis: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &GroebnerBasis {
        self.basis
            .get_or_init(|| GroebnerBasis::compute(&self.ring, &self.generators))
    }

    pub fn has_basis(&self) -> bool {
        self.basis.get().is_some()
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.generators.iter().map(|g| g.to_string()))
            .finish()
    }
}

/// Generators of `G` free of the first `k` variables, restricted to the
/// ring without them (ordered by DRL). `G` must be a basis for
/// `BlockElim(k)`.
pub fn eliminate(g: &GroebnerBasis, k: usize) -> Vec<Polynomial> {
    assert_eq!(
        g.order(),
        MonomialOrder::BlockElim(k),
        "basis is not a block elimination basis"
    );
    let mut ring = g.ring().clone();
    let mut kept: Vec<Polynomial> = g
        .generators()
        .iter()
        .filter(|p| (0..k).all(|v| !p.involves(v)))
        .cloned()
        .collect();
    for _ in 0..k {
        let smaller = ring.with_var_removed(0, MonomialOrder::DegRevLex);
        kept = kept
            .iter()
            .map(|p| {
                p.restrict(&smaller, 0)
                    .expect("filtered out eliminated variables")
            })
            .collect();
        ring = smaller;
    }
    kept
}

fn ring_with_t(ring: &Arc<PolyRing>, order: MonomialOrder) -> Arc<PolyRing> {
    ring.with_var_inserted(0, "t", order)
}

/// Reduced basis in `ring` (DRL) of the `t`-free part of a block basis.
fn eliminated_basis(ring: &Arc<PolyRing>, block: &GroebnerBasis) -> GroebnerBasis {
    let drl = drl_ring(ring);
    let gens = eliminate(block, 1)
        .into_iter()
        .map(|p| p.to_ring(&drl))
        .collect();
    GroebnerBasis::from_reduced(&drl, gens)
}

fn drl_ring(ring: &Arc<PolyRing>) -> Arc<PolyRing> {
    if ring.order() == MonomialOrder::DegRevLex {
        ring.clone()
    } else {
        ring.with_order(MonomialOrder::DegRevLex)
    }
}

/// Reduced DRL basis of `sat(<gens>, h) = { f : f h^k in <gens> for some k }`.
///
/// `h = 0` gives the unit ideal and a nonzero constant `h` gives `<gens>`.
pub fn saturate(gens: &[Polynomial], h: &Polynomial) -> GroebnerBasis {
    let ring = drl_ring(h.ring());
    if h.is_zero() {
        return GroebnerBasis::unit(&ring);
    }
    if h.is_constant() {
        return GroebnerBasis::compute(&ring, gens);
    }
    let ext = ring_with_t(&ring, MonomialOrder::BlockElim(1));
    let t = Polynomial::var(&ext, 0);
    let mut input: Vec<Polynomial> = gens.iter().map(|f| f.extend(&ext, 0)).collect();
    input.push(&(&t * &h.extend(&ext, 0)) - &Polynomial::one(&ext));
    let block = GroebnerBasis::compute(&ext, &input);
    eliminated_basis(&ring, &block)
}

/// `sat(<G>, h)` for an existing basis.
pub fn saturate_basis(g: &GroebnerBasis, h: &Polynomial) -> GroebnerBasis {
    if h.is_constant() && !h.is_zero() {
        return g.clone();
    }
    saturate(g.generators(), h)
}

/// Krull dimension of `V(<G>)`: the size of a largest set of variables
/// containing the support of no leading monomial. `-1` for the unit ideal.
pub fn dimension(g: &GroebnerBasis) -> i64 {
    if g.is_unit() {
        return -1;
    }
    let masks: Vec<u32> = g.leading_monomials().map(|m| m.support()).collect();
    max_independent_set(g.ring().nvars(), &masks) as i64
}

/// Largest `S` (as a bit count) with `m & !S != 0` for every mask `m`.
pub(crate) fn max_independent_set(n: usize, masks: &[u32]) -> usize {
    // keep only inclusion-minimal supports
    let mut minimal: Vec<u32> = Vec::new();
    let mut sorted = masks.to_vec();
    sorted.sort_by_key(|m| m.count_ones());
    for m in sorted {
        if !minimal.iter().any(|&k| k & !m == 0) {
            minimal.push(m);
        }
    }
    if minimal.contains(&0) {
        return 0;
    }
    let mut best = 0;
    search(n, &minimal, 0, 0, 0, &mut best);
    best
}

fn search(n: usize, masks: &[u32], v: usize, set: u32, size: usize, best: &mut usize) {
    if size + (n - v) <= *best {
        return;
    }
    if v == n {
        *best = size;
        return;
    }
    let with = set | (1 << v);
    if masks.iter().all(|&m| m & !with != 0) {
        search(n, masks, v + 1, with, size + 1, best);
    }
    search(n, masks, v + 1, set, size, best);
}

/// `f` in the radical of `<G>`, decided by `1 in <G, t f - 1>`.
pub fn radical_member(f: &Polynomial, g: &GroebnerBasis) -> bool {
    if f.is_zero() || g.is_unit() {
        return true;
    }
    if f.is_constant() {
        return false;
    }
    if g.is_member(f) {
        return true;
    }
    let ext = ring_with_t(g.ring(), MonomialOrder::DegRevLex);
    let t = Polynomial::var(&ext, 0);
    let mut input: Vec<Polynomial> = g.generators().iter().map(|p| p.extend(&ext, 0)).collect();
    input.push(&(&t * &f.extend(&ext, 0)) - &Polynomial::one(&ext));
    GroebnerBasis::compute(&ext, &input).is_unit()
}

/// Reduced DRL basis of `<G1> ∩ <G2>`, eliminating `t` from
/// `<t G1, (1 - t) G2>`.
pub fn intersect(g1: &GroebnerBasis, g2: &GroebnerBasis) -> GroebnerBasis {
    let ring = drl_ring(g1.ring());
    if g1.is_unit() {
        return GroebnerBasis::compute(&ring, g2.generators());
    }
    if g2.is_unit() {
        return GroebnerBasis::compute(&ring, g1.generators());
    }
    let ext = ring_with_t(&ring, MonomialOrder::BlockElim(1));
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let input: Vec<Polynomial> = g1
        .generators()
        .iter()
        .map(|p| &t * &p.extend(&ext, 0))
        .chain(
            g2.generators()
                .iter()
                .map(|p| &one_minus_t * &p.extend(&ext, 0)),
        )
        .collect();
    let block = GroebnerBasis::compute(&ext, &input);
    eliminated_basis(&ring, &block)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::divide;
    use crate::testutil::{parse, parse_all, random_poly, ring};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gb(r: &Arc<PolyRing>, src: &[&str]) -> GroebnerBasis {
        GroebnerBasis::compute(r, &parse_all(r, src))
    }

    #[test]
    fn elimination_examples() {
        let base = ring(&["x"]);
        let ext = base.with_var_inserted(0, "t", MonomialOrder::BlockElim(1));
        let g = gb(&ext, &["t", "x - 1"]);
        let e = eliminate(&g, 1);
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].to_string(), "x - 1");
        assert_eq!(e[0].ring().nvars(), 1);

        let g = gb(&ext, &["t*x - 1", "x"]);
        assert!(eliminate(&g, 1)[0].is_one());

        let g = gb(&ext, &["t - x"]);
        assert!(eliminate(&g, 1).is_empty());
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y", "z"]);
        let f = parse_all(&r, &["x*y", "x*z", "y*z"]);
        assert_eq!(saturate(&f, &parse(&r, "y")), gb(&r, &["x", "z"]));
        assert_eq!(
            saturate(&f, &parse(&r, "1")),
            gb(&r, &["x*y", "x*z", "y*z"])
        );
        assert!(saturate(&parse_all(&r, &["x^2"]), &parse(&r, "x")).is_unit());
        assert_eq!(
            saturate(&parse_all(&r, &["x*y"]), &parse(&r, "x")),
            gb(&r, &["y"])
        );
        assert!(saturate(&f, &Polynomial::zero(&r)).is_unit());
        assert!(saturate(&[], &parse(&r, "x")).is_empty());
    }

    /// `I : h` as `(I ∩ <h>) / h`.
    fn quotient(g: &GroebnerBasis, h: &Polynomial) -> GroebnerBasis {
        let hb = GroebnerBasis::compute(g.ring(), std::slice::from_ref(h));
        let cap = intersect(g, &hb);
        let gens: Vec<Polynomial> = cap
            .generators()
            .iter()
            .map(|p| {
                let (q, r) = divide(p, std::slice::from_ref(h));
                assert!(r.is_zero());
                q.into_iter().next().unwrap()
            })
            .collect();
        GroebnerBasis::compute(g.ring(), &gens)
    }

    fn iterated_quotient(gens: &[Polynomial], h: &Polynomial) -> GroebnerBasis {
        let mut cur = GroebnerBasis::compute(h.ring(), gens);
        loop {
            let next = quotient(&cur, h);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    #[test]
    fn saturation_matches_iterated_quotients() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for case in 0..25 {
            let n = rng.gen_range(1..=3);
            let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let r = PolyRing::drl(65521, names).unwrap();
            let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
                .map(|_| {
                    let terms = rng.gen_range(1..=3);
                    random_poly(&r, &mut rng, 3, terms)
                })
                .collect();
            let terms = rng.gen_range(1..=2);
            let h = random_poly(&r, &mut rng, 2, terms);
            if h.is_zero() {
                continue;
            }
            assert_eq!(
                saturate(&gens, &h),
                iterated_quotient(&gens, &h),
                "case {case}"
            );
        }
    }

    #[test]
    fn saturation_contains_input_and_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let r = ring(&["x", "y", "z"]);
        for _ in 0..20 {
            let gens: Vec<Polynomial> = (0..3).map(|_| random_poly(&r, &mut rng, 3, 3)).collect();
            let h = random_poly(&r, &mut rng, 2, 2);
            let s = saturate(&gens, &h);
            assert!(gens.iter().all(|f| s.is_member(f)));
            assert_eq!(saturate_basis(&s, &h), s);
        }
    }

    fn naive_dimension(g: &GroebnerBasis) -> i64 {
        if g.is_unit() {
            return -1;
        }
        let n = g.ring().nvars();
        let lms: Vec<u32> = g.leading_monomials().map(|m| m.support()).collect();
        (0u32..1 << n)
            .filter(|s| lms.iter().all(|m| m & !s != 0))
            .map(|s| s.count_ones() as i64)
            .max()
            .unwrap()
    }

    #[test]
    fn dimension_examples() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(dimension(&gb(&r, &["x*y", "x*z", "y*z"])), 1);
        assert_eq!(dimension(&gb(&r, &[])), 3);
        assert_eq!(dimension(&gb(&r, &["x", "y"])), 1);
        assert_eq!(dimension(&gb(&r, &["1"])), -1);
    }

    proptest! {
        #[test]
        fn independent_set_matches_exhaustive(
            n in 1usize..=8,
            raw in proptest::collection::vec(1u32..256, 0..6),
        ) {
            let masks: Vec<u32> = raw.iter().map(|m| m & ((1 << n) - 1)).filter(|&m| m != 0).collect();
            let naive = (0u32..1 << n)
                .filter(|s| masks.iter().all(|m| m & !s != 0))
                .map(|s| s.count_ones() as usize)
                .max()
                .unwrap();
            prop_assert_eq!(max_independent_set(n, &masks), naive);
        }
    }

    #[test]
    fn dimension_matches_naive_and_is_antitone() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let r = ring(&["a", "b", "c", "d"]);
        for _ in 0..20 {
            let mut gens: Vec<Polynomial> =
                (0..2).map(|_| random_poly(&r, &mut rng, 2, 2)).collect();
            let g = GroebnerBasis::compute(&r, &gens);
            assert_eq!(dimension(&g), naive_dimension(&g));
            gens.push(random_poly(&r, &mut rng, 2, 2));
            let bigger = GroebnerBasis::compute(&r, &gens);
            assert!(dimension(&bigger) <= dimension(&g));
        }
    }

    #[test]
    fn radical_membership_examples() {
        let r = ring(&["x", "y"]);
        assert!(radical_member(&parse(&r, "x"), &gb(&r, &["x^2"])));
        assert!(!radical_member(&parse(&r, "x"), &gb(&r, &["x*y"])));
        assert!(radical_member(&parse(&r, "x + y"), &gb(&r, &["x", "y"])));
        assert!(!radical_member(&parse(&r, "1"), &gb(&r, &["x"])));
    }

    #[test]
    fn radical_membership_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let r = ring(&["x", "y", "z"]);
        for _ in 0..15 {
            let gens: Vec<Polynomial> = (0..2).map(|_| random_poly(&r, &mut rng, 2, 2)).collect();
            let g = GroebnerBasis::compute(&r, &gens);
            let f = if rng.gen_bool(0.5) {
                gens[0].clone()
            } else {
                random_poly(&r, &mut rng, 2, 2)
            };
            let base = radical_member(&f, &g);
            if g.is_member(&f) {
                assert!(base);
            }
            for k in 2..=3 {
                assert_eq!(radical_member(&f.pow(k), &g), base);
            }
        }
    }

    #[test]
    fn intersection_examples() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(
            intersect(&gb(&r, &["x"]), &gb(&r, &["y"])),
            gb(&r, &["x*y"])
        );
        let i = gb(&r, &["x^2 - y", "z"]);
        assert_eq!(intersect(&i, &gb(&r, &["1"])), i);
        let cap = intersect(&gb(&r, &["x", "y"]), &gb(&r, &["x", "z"]));
        let expected = gb(&r, &["x", "y*z"]);
        assert!(cap.contains(&expected) && expected.contains(&cap));
    }

    #[test]
    fn handle_caches_basis() {
        let r = ring(&["x", "y"]);
        let h = IdealHandle::new(&r, parse_all(&r, &["x + y", "y"]));
        assert!(!h.has_basis());
        let b = h.basis().clone();
        assert!(h.has_basis());
        assert!(h.generators().iter().all(|g| b.is_member(g)));
        assert!(b
            .generators()
            .iter()
            .all(|g| { GroebnerBasis::compute(&r, h.generators()).is_member(g) }));
    }
}
