use std::fmt;

use super::cell::AffineCell;
use super::partition::{Certificate, Partition};
use crate::groebner::GroebnerBasis;
use crate::ideal::{dimension, intersect, radical_member};

/// Outcome of [`verify_partition`]. Each list holds offending cell indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    /// Recorded codimension differs from the cell's codimension.
    pub codim_mismatches: Vec<usize>,
    /// The recorded certificate does not hold.
    pub certificate_failures: Vec<usize>,
    /// The cell ideal does not contain the input ideal.
    pub containment_failures: Vec<usize>,
    /// Some generator of the intersection of the cell ideals is not in the
    /// radical of the input ideal.
    pub covering_failed: bool,
    /// Pairs of cells where a component of one closure lies in the other.
    pub overlaps: Vec<(usize, usize)>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.codim_mismatches.is_empty()
            && self.certificate_failures.is_empty()
            && self.containment_failures.is_empty()
            && !self.covering_failed
            && self.overlaps.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "all checks passed");
        }
        let mut parts = Vec::new();
        if !self.codim_mismatches.is_empty() {
            parts.push(format!(
                "codimension mismatch in cells {:?}",
                self.codim_mismatches
            ));
        }
        if !self.certificate_failures.is_empty() {
            parts.push(format!(
                "certificate fails for cells {:?}",
                self.certificate_failures
            ));
        }
        if !self.containment_failures.is_empty() {
            parts.push(format!(
                "cells {:?} do not contain the input ideal",
                self.containment_failures
            ));
        }
        if self.covering_failed {
            parts.push("cells do not cover the input".to_string());
        }
        if !self.overlaps.is_empty() {
            parts.push(format!("cells share components: {:?}", self.overlaps));
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks a partition of `x` against the definition:
/// codimensions and equidimensionality certificates, closure covering via
/// radical membership in both directions, and pairwise component
/// disjointness (which also rules out embedded extra components).
pub fn verify_partition(x: &AffineCell, partition: &Partition) -> VerificationReport {
    let mut report = VerificationReport::default();
    let ring = x.ring();

    for (k, e) in partition.entries().iter().enumerate() {
        let cell = &e.cell;
        match cell.codim() {
            Ok(c) if c == e.codim => {}
            _ => report.codim_mismatches.push(k),
        }
        let certified = match e.certificate {
            Certificate::CodimBound { bound } => e.codim == bound,
            Certificate::RegularSequence => {
                e.codim == cell.equations().len() && cell.get_syz().is_none()
            }
        };
        if !certified {
            report.certificate_failures.push(k);
        }
        if !cell.basis().contains(x.basis()) {
            report.containment_failures.push(k);
        }
    }

    let cap = partition.cells().fold(GroebnerBasis::unit(ring), |acc, c| {
        intersect(&acc, c.basis())
    });
    report.covering_failed = !cap
        .generators()
        .iter()
        .all(|g| radical_member(g, x.basis()));

    let entries = partition.entries();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if shares_component(
                &entries[i].cell,
                entries[i].codim,
                &entries[j].cell,
                entries[j].codim,
            ) {
                report.overlaps.push((i, j));
            }
        }
    }
    report
}

/// Whether some component of one closure lies inside the other. For
/// equidimensional closures this holds iff their intersection keeps the
/// larger of the two codimensions. In a valid partition it never does:
/// equal codimensions would mean a shared component, different ones an
/// embedded piece that is not a component of the input.
fn shares_component(a: &AffineCell, ca: usize, b: &AffineCell, cb: usize) -> bool {
    let mut gens = a.basis().generators().to_vec();
    gens.extend_from_slice(b.basis().generators());
    let sum = GroebnerBasis::compute(a.ring(), &gens);
    let d = dimension(&sum);
    d >= 0 && a.ring().nvars() as i64 - d == ca.max(cb) as i64
}
