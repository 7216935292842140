//! Random inputs shared by unit tests.

use std::sync::Arc;

use rand::Rng;

use crate::arith::{Monomial, PolyRing, Polynomial};

pub(crate) fn ring(names: &[&str]) -> Arc<PolyRing> {
    PolyRing::drl(65521, names.iter().copied()).unwrap()
}

pub(crate) fn parse(r: &Arc<PolyRing>, src: &str) -> Polynomial {
    Polynomial::parse(r, src).unwrap()
}

pub(crate) fn parse_all(r: &Arc<PolyRing>, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| parse(r, s)).collect()
}

/// Up to `terms` terms of degree at most `max_deg`.
pub(crate) fn random_poly(
    r: &Arc<PolyRing>,
    rng: &mut impl Rng,
    max_deg: u32,
    terms: usize,
) -> Polynomial {
    let p = r.field().modulus();
    Polynomial::from_terms(
        r,
        (0..terms).map(|_| {
            let mut e = vec![0u32; r.nvars()];
            for _ in 0..rng.gen_range(0..=max_deg) {
                e[rng.gen_range(0..r.nvars())] += 1;
            }
            (Monomial::from_exponents(&e).unwrap(), rng.gen_range(1..p))
        }),
    )
}
