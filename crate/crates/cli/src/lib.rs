//! Command-line front end: read a system file, decompose it, print the
//! cells and optionally a JSON report.

pub mod system;

use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::Parser;
use equidim::decompose::{verify_partition, SplitStrategy, Stats};
use equidim::{AffineCell, DecomposeError, Decomposer, Partition, Polynomial};
use serde::Serialize;

pub use system::{parse_system, SystemFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

#[derive(Clone, Debug, Default, Parser)]
#[command(
    name = "equidim",
    version,
    about = "Equidimensional decomposition of polynomial systems over prime fields"
)]
pub struct Options {
    /// System file: `p <prime>`, `vars <names>`, then one polynomial per line.
    pub file: PathBuf,
    /// Check the partition (codimensions, covering, disjointness).
    #[arg(long)]
    pub verify: bool,
    /// Write a JSON report to this path.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Print statistics and include wall time in the JSON report.
    #[arg(long)]
    pub stats: bool,
    /// Abort with exit code 3 after this many seconds.
    #[arg(long, value_name = "N")]
    pub max_seconds: Option<u64>,
    /// Split into X \ V(g) and X ∩ V(g) instead of using hulls.
    #[arg(long)]
    pub naive_split: bool,
    /// Worker threads; more than one runs branches concurrently and sorts
    /// the cells canonically.
    #[arg(long, value_name = "N")]
    pub threads: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellReport {
    pub equations: Vec<String>,
    pub inequation: String,
    pub groebner_basis: Vec<String>,
    pub codim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatsReport {
    pub cell_count: usize,
    pub groebner_calls: u64,
    pub syzygy_calls: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub modulus: u32,
    pub variables: Vec<String>,
    pub cells: Vec<CellReport>,
    pub stats: StatsReport,
}

fn strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

impl PartitionReport {
    pub fn new(
        system: &SystemFile,
        partition: &Partition,
        stats: Stats,
        wall: Option<Duration>,
    ) -> Self {
        let cells = partition
            .entries()
            .iter()
            .map(|e| CellReport {
                equations: strings(e.cell.equations()),
                inequation: e.cell.inequation().to_string(),
                groebner_basis: strings(e.cell.basis().generators()),
                codim: e.codim,
            })
            .collect::<Vec<_>>();
        PartitionReport {
            modulus: system.modulus(),
            variables: system.variables().to_vec(),
            stats: StatsReport {
                cell_count: cells.len(),
                groebner_calls: stats.groebner_calls,
                syzygy_calls: stats.syzygy_calls,
                wall_time_ms: wall.map(|d| d.as_millis() as u64),
            },
            cells,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_text(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(
            out,
            "{} cell(s) over GF({}) in {}",
            self.cells.len(),
            self.modulus,
            self.variables.join(", ")
        )?;
        for (k, c) in self.cells.iter().enumerate() {
            writeln!(out, "cell {}: codim {}", k + 1, c.codim)?;
            writeln!(out, "  equations:  {}", c.equations.join(", "))?;
            writeln!(out, "  inequation: {}", c.inequation)?;
            writeln!(out, "  basis:      {}", c.groebner_basis.join(", "))?;
        }
        Ok(())
    }
}

fn write_stats(
    out: &mut impl Write,
    stats: Stats,
    cells: Option<usize>,
    wall: Duration,
) -> std::io::Result<()> {
    if let Some(n) = cells {
        writeln!(out, "cells: {n}")?;
    }
    writeln!(out, "groebner calls: {}", stats.groebner_calls)?;
    writeln!(out, "syzygy calls: {}", stats.syzygy_calls)?;
    writeln!(out, "wall time: {} ms", wall.as_millis())
}

/// Decomposes `system` according to the options. With more than one
/// thread the cells are sorted canonically.
pub fn decompose_system(
    system: &SystemFile,
    opts: &Options,
) -> (Result<Partition, DecomposeError>, Stats) {
    let threads = opts.threads.unwrap_or(1).max(1);
    let mut d = Decomposer::new().with_parallel(threads > 1);
    if opts.naive_split {
        d = d.with_strategy(SplitStrategy::Naive);
    }
    if let Some(s) = opts.max_seconds {
        d = d.with_time_limit(Duration::from_secs(s));
    }
    let work = || {
        let mut p = d.decompose(&system.ring, &system.polynomials)?;
        if threads > 1 {
            p.sort_canonical();
        }
        Ok(p)
    };
    let result = if threads > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        }
    } else {
        work()
    };
    (result, d.stats())
}

/// Runs the tool and returns the process exit code.
pub fn run(opts: &Options, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let start = Instant::now();
    let text = match std::fs::read_to_string(&opts.file) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", opts.file.display());
            return EXIT_INPUT;
        }
    };
    let system = match parse_system(&text) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "{}:{e}", opts.file.display());
            return EXIT_INPUT;
        }
    };

    let (result, stats) = decompose_system(&system, opts);
    let partition = match result {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}; partial statistics:");
            let _ = write_stats(err, stats, None, start.elapsed());
            return EXIT_TIMEOUT;
        }
    };
    let wall = start.elapsed();
    let report = PartitionReport::new(&system, &partition, stats, opts.stats.then_some(wall));
    let _ = report.write_text(out);
    if opts.stats {
        let _ = write_stats(out, stats, Some(partition.len()), wall);
    }
    if let Some(path) = &opts.json {
        if let Err(e) = std::fs::write(path, report.to_json() + "\n") {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_INPUT;
        }
    }

    if opts.verify {
        let x = AffineCell::new(&system.ring, &system.polynomials);
        let v = verify_partition(&x, &partition);
        let _ = writeln!(out, "verification: {v}");
        if !v.passed() {
            return EXIT_VERIFY;
        }
    }
    EXIT_OK
}
