use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::cell::AffineCell;
use crate::arith::{PolyRing, Polynomial};
use crate::error::DecomposeError;
use crate::groebner::GroebnerBasis;
use crate::ideal::saturate_basis;

/// Why a cell is known to be equidimensional.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The codimension reached the upper bound passed down the recursion.
    CodimBound { bound: usize },
    /// No syzygy entry lies outside the cell ideal: the sequence is a
    /// local regular sequence.
    RegularSequence,
}

#[derive(Clone, Debug)]
pub struct PartitionEntry {
    pub cell: AffineCell,
    pub codim: usize,
    pub certificate: Certificate,
}

/// Equidimensional cells whose closures partition the components of the
/// input.
#[derive(Clone, Debug, Default)]
pub struct Partition {
    entries: Vec<PartitionEntry>,
}

impl Partition {
    pub fn new(entries: Vec<PartitionEntry>) -> Self {
        Partition { entries }
    }

    pub fn entries(&self) -> &[PartitionEntry] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<PartitionEntry> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = &AffineCell> + '_ {
        self.entries.iter().map(|e| &e.cell)
    }

    pub fn codims(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.codim).collect()
    }

    /// Sorts by codimension, then basis, then sequence, then inequation.
    pub fn sort_canonical(&mut self) {
        self.entries.sort_by(|a, b| {
            a.codim
                .cmp(&b.codim)
                .then_with(|| a.cell.cmp_canonical(&b.cell))
        });
    }
}

/// How a cell is split once a syzygy witness `g` is found.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SplitStrategy {
    /// `X \ V(g)` with the witnessed equation dropped, plus `hull(X, g)`.
    #[default]
    Hull,
    /// `X \ V(g)` plus `X ∩ V(g)`. Correct as a covering but may repeat
    /// components; kept for comparison only.
    Naive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub groebner_calls: u64,
    pub syzygy_calls: u64,
}

/// Runs the decomposition, counting Groebner and syzygy computations.
#[derive(Debug, Default)]
pub struct Decomposer {
    groebner_calls: AtomicU64,
    syzygy_calls: AtomicU64,
    deadline: Option<Instant>,
    parallel: bool,
    strategy: SplitStrategy,
}

type Res<T> = Result<T, DecomposeError>;

impl Decomposer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fails with [`DecomposeError::Timeout`] once `budget` has elapsed.
    pub fn with_time_limit(mut self, budget: Duration) -> Self {
        self.deadline = Some(Instant::now() + budget);
        self
    }

    /// Runs independent branches on the rayon pool. The result order is
    /// the same as in a sequential run.
    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn with_strategy(mut self, strategy: SplitStrategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn stats(&self) -> Stats {
        Stats {
            groebner_calls: self.groebner_calls.load(AtomicOrdering::Relaxed),
            syzygy_calls: self.syzygy_calls.load(AtomicOrdering::Relaxed),
        }
    }

    fn tick(&self) -> Res<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(DecomposeError::Timeout),
            _ => Ok(()),
        }
    }

    fn count_gb(&self) {
        self.groebner_calls.fetch_add(1, AtomicOrdering::Relaxed);
    }

    pub fn make_cell(&self, ring: &Arc<PolyRing>, equations: &[Polynomial]) -> AffineCell {
        self.count_gb();
        AffineCell::new(ring, equations)
    }

    pub fn add_equation(&self, x: &AffineCell, g: &Polynomial) -> AffineCell {
        if !g.is_zero() {
            self.count_gb();
        }
        x.add_equation(g)
    }

    pub fn add_inequation(&self, x: &AffineCell, g: &Polynomial) -> AffineCell {
        if !g.is_constant() {
            self.count_gb();
        }
        x.add_inequation(g)
    }

    /// Closure partition of `hull(X, g)`: the components of `X` on which
    /// `g` vanishes identically.
    pub fn hull(&self, x: &AffineCell, g: &Polynomial) -> Res<Vec<AffineCell>> {
        let h = if g.is_zero() {
            GroebnerBasis::unit(x.ring())
        } else {
            self.count_gb();
            saturate_basis(x.basis(), g)
        };
        self.remove(x, h.generators())
    }

    /// Closure partition of `X \ V(P)`. The last element of `P` is split
    /// off first.
    pub fn remove(&self, x: &AffineCell, p: &[Polynomial]) -> Res<Vec<AffineCell>> {
        self.tick()?;
        let Some((last, rest)) = p.split_last() else {
            return Ok(Vec::new());
        };
        let y = self.add_inequation(x, last);
        if x.basis() == y.basis() {
            return Ok(vec![y]);
        }
        let d = self.remove(x, rest)?;
        if y.is_empty() {
            return Ok(d);
        }
        let gy = y.basis().generators();
        let tails: Vec<Vec<AffineCell>> = if self.parallel {
            d.par_iter()
                .map(|z| self.remove(z, gy))
                .collect::<Res<_>>()?
        } else {
            d.iter().map(|z| self.remove(z, gy)).collect::<Res<_>>()?
        };
        let mut out = vec![y];
        out.extend(tails.into_iter().flatten());
        Ok(out)
    }

    /// Irredundant Kalkbrener partition of `X`, given an upper bound `c` on
    /// the codimension of its components.
    pub fn kalk_part(&self, x: &AffineCell, c: usize) -> Res<Partition> {
        self.tick()?;
        if x.is_empty() {
            return Ok(Partition::default());
        }
        let codim = x.codim()?;
        if codim == c {
            return Ok(Partition::new(vec![PartitionEntry {
                cell: x.clone(),
                codim,
                certificate: Certificate::CodimBound { bound: c },
            }]));
        }
        self.syzygy_calls.fetch_add(1, AtomicOrdering::Relaxed);
        let Some(w) = x.get_syz() else {
            return Ok(Partition::new(vec![PartitionEntry {
                cell: x.clone(),
                codim,
                certificate: Certificate::RegularSequence,
            }]));
        };

        // X \ V(g) with f_i dropped; sat(G, g) = sat(F \ f_i, g h) because
        // g f_i lies in the ideal of the other equations.
        let reduced = self.add_inequation(x, &w.g);
        let mut equations = reduced.equations().to_vec();
        equations.remove(w.index);
        let x1 = AffineCell::from_parts(
            equations,
            reduced.inequation().clone(),
            reduced.basis().clone(),
        );
        let r1 = x1.equations().len();

        let (first, others) = match self.strategy {
            SplitStrategy::Hull => {
                let hull = self.hull(x, &w.g)?;
                let others: Vec<(AffineCell, usize)> = hull
                    .iter()
                    .map(|z| (self.add_equation(z, &w.g), c))
                    .collect();
                ((x1, c.min(r1)), others)
            }
            SplitStrategy::Naive => {
                let x2 = self.add_equation(x, &w.g);
                let c2 = x2.equations().len().min(x.ring().nvars());
                ((x1, c.min(r1)), vec![(x2, c2)])
            }
        };

        let (a, rest) = if self.parallel {
            rayon::join(
                || self.kalk_part(&first.0, first.1),
                || {
                    others
                        .par_iter()
                        .map(|(z, cz)| self.kalk_part(z, *cz))
                        .collect::<Res<Vec<_>>>()
                },
            )
        } else {
            let a = self.kalk_part(&first.0, first.1);
            let rest = others
                .iter()
                .map(|(z, cz)| self.kalk_part(z, *cz))
                .collect::<Res<Vec<_>>>();
            (a, rest)
        };
        let mut entries = a?.into_entries();
        for part in rest? {
            entries.extend(part.into_entries());
        }
        Ok(Partition::new(entries))
    }

    /// Partition of `V(F)` starting from the bound `min(|F|, n)`.
    pub fn decompose(&self, ring: &Arc<PolyRing>, equations: &[Polynomial]) -> Res<Partition> {
        let x = self.make_cell(ring, equations);
        let c = x.equations().len().min(ring.nvars());
        self.kalk_part(&x, c)
    }
}

/// Sequential decomposition with default settings.
pub fn decompose(ring: &Arc<PolyRing>, equations: &[Polynomial]) -> Partition {
    Decomposer::new()
        .decompose(ring, equations)
        .expect("no time limit set")
}

/// Sequential `hull` with default settings.
pub fn hull(x: &AffineCell, g: &Polynomial) -> Vec<AffineCell> {
    Decomposer::new().hull(x, g).expect("no time limit set")
}

/// Sequential `remove` with default settings.
pub fn remove(x: &AffineCell, p: &[Polynomial]) -> Vec<AffineCell> {
    Decomposer::new().remove(x, p).expect("no time limit set")
}

/// Sequential `kalk_part` with default settings.
pub fn kalk_part(x: &AffineCell, c: usize) -> Partition {
    Decomposer::new()
        .kalk_part(x, c)
        .expect("no time limit set")
}
