use std::sync::Arc;
use std::time::Duration;

use super::*;
use crate::arith::{PolyRing, Polynomial};
use crate::error::DecomposeError;
use crate::groebner::GroebnerBasis;
use crate::ideal::{intersect, radical_member};
use crate::testutil::{parse, parse_all, random_poly, ring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cell(r: &Arc<PolyRing>, src: &[&str]) -> AffineCell {
    AffineCell::new(r, &parse_all(r, src))
}

fn gb(r: &Arc<PolyRing>, src: &[&str]) -> GroebnerBasis {
    GroebnerBasis::compute(r, &parse_all(r, src))
}

fn axes() -> (Arc<PolyRing>, AffineCell) {
    let r = ring(&["x", "y", "z"]);
    let x = cell(&r, &["x*y", "x*z", "y*z"]);
    (r, x)
}

/// Every generator of `b` lies in `a`.
fn contains(a: &GroebnerBasis, b: &GroebnerBasis) -> bool {
    a.contains(b)
}

#[test]
fn remove_follows_the_worked_example() {
    let (r, x) = axes();
    let cells = remove(&x, &parse_all(&r, &["z", "x"]));
    assert_eq!(cells.len(), 2);
    assert_eq!(cells[0].basis(), &gb(&r, &["y", "z"]));
    assert_eq!(cells[0].inequation().to_string(), "x");
    assert_eq!(cells[1].basis(), &gb(&r, &["x", "y"]));
    assert_eq!(cells[1].inequation().to_string(), "z^2");
}

#[test]
fn hull_examples() {
    let (r, x) = axes();
    let cells = hull(&x, &parse(&r, "y"));
    let bases: Vec<&GroebnerBasis> = cells.iter().map(|c| c.basis()).collect();
    assert_eq!(bases, [&gb(&r, &["y", "z"]), &gb(&r, &["x", "y"])]);
    let h0 = cells[0].inequation();
    assert!(GroebnerBasis::compute(&r, &[parse(&r, "x")]).is_member(h0));

    let all = hull(&x, &Polynomial::zero(&r));
    assert_eq!(all.len(), 1);
    assert_eq!(all[0].basis(), x.basis());
    assert!(hull(&x, &parse(&r, "1")).is_empty());
}

#[test]
fn remove_base_cases() {
    let (r, x) = axes();
    let same = remove(&x, &[parse(&r, "1")]);
    assert_eq!(same.len(), 1);
    assert_eq!(same[0].basis(), x.basis());
    assert!(remove(&x, &[]).is_empty());
}

#[test]
fn regular_pair_is_one_cell() {
    let r = ring(&["x", "y"]);
    let x = cell(&r, &["x", "y"]);
    let p = kalk_part(&x, 2);
    assert_eq!(p.codims(), [2]);
    assert_eq!(
        p.entries()[0].certificate,
        Certificate::CodimBound { bound: 2 }
    );
}

#[test]
fn two_products() {
    let r = ring(&["x", "y", "z"]);
    let x = cell(&r, &["x*y", "x*z"]);
    let p = kalk_part(&x, 2);
    let mut codims = p.codims();
    codims.sort();
    assert_eq!(codims, [1, 2]);
    for (expected, c) in [(gb(&r, &["x"]), 1), (gb(&r, &["y", "z"]), 2)] {
        let e = p.entries().iter().find(|e| e.codim == c).unwrap();
        let ideal = e.cell.basis();
        assert!(expected
            .generators()
            .iter()
            .all(|g| radical_member(g, ideal)));
        assert!(ideal
            .generators()
            .iter()
            .all(|g| radical_member(g, &expected)));
    }
    assert!(verify_partition(&x, &p).passed());
}

#[test]
fn three_axes_are_covered_once() {
    let (r, x) = axes();
    let p = kalk_part(&x, 3);
    assert!(p.codims().iter().all(|&c| c == 2));
    for prime in [["x", "y"], ["x", "z"], ["y", "z"]] {
        let prime = gb(&r, &prime);
        let hits = p.cells().filter(|c| contains(&prime, c.basis())).count();
        assert_eq!(hits, 1);
    }
    assert!(verify_partition(&x, &p).passed());
}

#[test]
fn verification_detects_duplicates() {
    let r = ring(&["x", "y", "z"]);
    let x = cell(&r, &["x*y", "x*z"]);
    let p = kalk_part(&x, 2);
    let mut entries = p.clone().into_entries();
    entries.push(entries[0].clone());
    let report = verify_partition(&x, &Partition::new(entries));
    assert!(!report.passed());
    assert_eq!(report.overlaps.len(), 1);

    let mut entries = p.into_entries();
    entries.pop();
    let report = verify_partition(&x, &Partition::new(entries));
    assert!(report.covering_failed);
}

#[test]
fn regular_sequence_partition_matches_input() {
    let r = ring(&["x", "y", "z"]);
    let x = cell(&r, &["x^2 + y", "y*z - 1"]);
    let p = kalk_part(&x, 2);
    assert_eq!(p.len(), 1);
    assert_eq!(p.entries()[0].cell.basis(), x.basis());
    assert!(verify_partition(&x, &p).passed());
}

#[test]
fn regular_certificate_below_bound() {
    // V(x*y, x*z) \ V(x) is V(y, z) minus a hyperplane: codim 2, bound 3.
    let r = ring(&["x", "y", "z"]);
    let x = cell(&r, &["x*y", "x*z"]).add_inequation(&parse(&r, "x"));
    let p = kalk_part(&x, 3);
    assert_eq!(p.len(), 1);
    assert_eq!(p.entries()[0].certificate, Certificate::RegularSequence);
    assert!(verify_partition(&x, &p).passed());
}

#[test]
fn empty_and_full_cells() {
    let r = ring(&["x", "y"]);
    assert!(kalk_part(&cell(&r, &["1"]), 1).is_empty());
    let full = cell(&r, &[]);
    let p = kalk_part(&full, 0);
    assert_eq!(p.codims(), [0]);
}

fn random_cells(seed: u64, count: usize) -> Vec<AffineCell> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = ring(&["x", "y", "z"]);
    (0..count)
        .map(|_| {
            let mut f: Vec<Polynomial> = Vec::new();
            // products of linear forms give reducible systems
            for _ in 0..3 {
                let a = random_poly(&r, &mut rng, 1, 2);
                let b = random_poly(&r, &mut rng, 1, 2);
                f.push(&a * &b);
            }
            AffineCell::new(&r, &f)
        })
        .collect()
}

#[test]
fn random_partitions_verify() {
    for x in random_cells(41, 12) {
        if x.is_empty() {
            continue;
        }
        let c = x.equations().len().min(3);
        let p = kalk_part(&x, c);
        let report = verify_partition(&x, &p);
        assert!(report.passed(), "{x:?}: {report}");
        for e in p.entries() {
            assert!(e.cell.is_coherent());
            assert!(e.codim <= c);
            if e.certificate == Certificate::RegularSequence {
                assert_eq!(e.codim, e.cell.equations().len());
            }
        }
    }
}

#[test]
fn hull_and_complement_cover_the_cell() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for x in random_cells(43, 8) {
        if x.is_empty() {
            continue;
        }
        let g = random_poly(x.ring(), &mut rng, 1, 2);
        let cells = hull(&x, &g);
        for z in &cells {
            assert!(z.basis().contains(x.basis()));
            assert!(z.is_coherent());
        }
        let outside = x.add_inequation(&g);
        let cap = cells
            .iter()
            .fold(outside.basis().clone(), |acc, z| intersect(&acc, z.basis()));
        assert!(cap
            .generators()
            .iter()
            .all(|p| radical_member(p, x.basis())));
    }
}

#[test]
fn parallel_run_matches_sequential() {
    for x in random_cells(44, 6).into_iter().chain([axes().1]) {
        let c = x.equations().len().min(3);
        let seq = kalk_part(&x, c);
        let par = Decomposer::new()
            .with_parallel(true)
            .kalk_part(&x, c)
            .unwrap();
        assert_eq!(format!("{:?}", seq), format!("{:?}", par));
    }
}

#[test]
fn counters_and_deadline() {
    let (r, _) = axes();
    let d = Decomposer::new();
    let p = d
        .decompose(&r, &parse_all(&r, &["x*y", "x*z", "y*z"]))
        .unwrap();
    assert_eq!(p.len(), 3);
    let stats = d.stats();
    assert!(stats.groebner_calls > 1 && stats.syzygy_calls >= 1);

    let d = Decomposer::new().with_time_limit(Duration::ZERO);
    let err = d
        .decompose(&r, &parse_all(&r, &["x*y", "x*z", "y*z"]))
        .unwrap_err();
    assert_eq!(err, DecomposeError::Timeout);
}

#[test]
fn naive_split_covers_but_leaves_embedded_pieces() {
    let r = ring(&["x", "y", "z"]);
    let x = cell(&r, &["x*y", "x*z"]);
    let p = Decomposer::new()
        .with_strategy(SplitStrategy::Naive)
        .kalk_part(&x, 2)
        .unwrap();
    let report = verify_partition(&x, &p);
    assert!(!report.covering_failed);
    assert!(report.containment_failures.is_empty());
    // V(x, y) shows up next to V(x)
    assert!(!report.overlaps.is_empty());
    assert!(verify_partition(&x, &kalk_part(&x, 2)).passed());
}

#[test]
fn canonical_sort_orders_by_codim() {
    let r = ring(&["x", "y", "z"]);
    let mut p = kalk_part(&cell(&r, &["x*y", "x*z"]), 2);
    p.sort_canonical();
    assert_eq!(p.codims(), [1, 2]);
}
