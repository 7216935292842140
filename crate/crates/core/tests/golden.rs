use std::sync::Arc;

use equidim::ideal::{dimension, intersect, radical_member, saturate};
use equidim::syzygy::{get_syz, syzygy_basis, SyzygyVector};
use equidim::{AffineCell, Certificate, Decomposer, GroebnerBasis, PolyRing, Polynomial};

fn ring(names: &[&str]) -> Arc<PolyRing> {
    PolyRing::drl(65521, names.iter().copied()).unwrap()
}

fn polys(r: &Arc<PolyRing>, src: &[&str]) -> Vec<Polynomial> {
    src.iter()
        .map(|s| Polynomial::parse(r, s).unwrap())
        .collect()
}

fn gb(r: &Arc<PolyRing>, src: &[&str]) -> GroebnerBasis {
    GroebnerBasis::compute(r, &polys(r, src))
}

#[test]
fn twisted_cubic_basis() {
    let r = ring(&["x", "y", "z"]);
    let g = gb(&r, &["y - x^2", "z - x^3"]);
    assert!(g.is_reduced());
    assert!(g.s_pairs_reduce_to_zero());
    assert_eq!(dimension(&g), 1);
    let yz = Polynomial::parse(&r, "y^3 - z^2").unwrap();
    assert!(g.is_member(&yz));
}

#[test]
fn saturation_strips_the_origin() {
    let r = ring(&["x", "y"]);
    let f = polys(&r, &["x^2*y", "x*y^2"]);
    let x = Polynomial::parse(&r, "x").unwrap();
    assert_eq!(saturate(&f, &x), gb(&r, &["y"]));
}

#[test]
fn radical_and_intersection() {
    let r = ring(&["x", "y"]);
    let g = gb(&r, &["x^3", "y^2"]);
    assert!(radical_member(&Polynomial::parse(&r, "x + y").unwrap(), &g));
    assert!(!radical_member(
        &Polynomial::parse(&r, "x + 1").unwrap(),
        &g
    ));
    let cap = intersect(&gb(&r, &["x"]), &gb(&r, &["y"]));
    assert_eq!(cap, gb(&r, &["x*y"]));
}

#[test]
fn monomial_pair_has_a_non_koszul_syzygy() {
    let r = ring(&["x", "y", "z"]);
    let f = polys(&r, &["x*y", "x*z"]);
    let s = syzygy_basis(&f);
    let v = SyzygyVector::new(polys(&r, &["z", "-y"]));
    assert!(s.contains(&v));
    let w = get_syz(&f, &GroebnerBasis::compute(&r, &f)).unwrap();
    assert_eq!(w.index, 0);
}

#[test]
fn axes_split_into_three_lines() {
    let r = ring(&["x", "y", "z"]);
    let p = Decomposer::new()
        .decompose(&r, &polys(&r, &["x*y", "x*z", "y*z"]))
        .unwrap();
    assert_eq!(p.codims(), [2, 2, 2]);
    assert!(equidim::decompose::verify_partition(
        &AffineCell::new(&r, &polys(&r, &["x*y", "x*z", "y*z"])),
        &p
    )
    .passed());
}

#[test]
fn regular_system_is_its_own_partition() {
    let r = ring(&["x", "y", "z"]);
    let f = polys(&r, &["x^2 + y^2 - 1", "z - x*y"]);
    let p = Decomposer::new().decompose(&r, &f).unwrap();
    assert_eq!(p.len(), 1);
    let e = &p.entries()[0];
    assert_eq!(e.codim, 2);
    assert_eq!(e.certificate, Certificate::CodimBound { bound: 2 });
    assert_eq!(e.cell.basis(), &GroebnerBasis::compute(&r, &f));
}

#[test]
fn inconsistent_system_is_empty() {
    let r = ring(&["x", "y"]);
    let p = Decomposer::new()
        .decompose(&r, &polys(&r, &["x*y - 1", "x"]))
        .unwrap();
    assert!(p.is_empty());
}
