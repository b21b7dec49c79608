//! Microbenchmark harness for compose/apply on rotations and rigid
//! transforms as a function of batch size N.
//!
//! Three execution strategies run the same seeded inputs: a scalar loop
//! over individual elements, the structure-of-arrays batch kernel, and a
//! rayon-parallel batch kernel. Before any cell is timed its outputs are
//! checked bit-identical against the scalar loop — correctness before
//! speed. Timing uses the monotonic high-resolution clock; input
//! construction is excluded from the timed region, the median of the
//! repetitions is the headline statistic, and the minimum is kept for
//! noise diagnosis.

mod inputs;
mod strategies;

use std::fmt;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operation {
    RotationCompose,
    RotationApply,
    TransformCompose,
    TransformApply,
}

impl Operation {
    pub const ALL: [Operation; 4] = [
        Operation::RotationCompose,
        Operation::RotationApply,
        Operation::TransformCompose,
        Operation::TransformApply,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Operation::RotationCompose => "rotation-compose",
            Operation::RotationApply => "rotation-apply",
            Operation::TransformCompose => "transform-compose",
            Operation::TransformApply => "transform-apply",
        }
    }

    pub fn parse(s: &str) -> Option<Operation> {
        Operation::ALL.into_iter().find(|op| op.name() == s)
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    ScalarLoop,
    Batch,
    ParallelBatch,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::ScalarLoop, Strategy::Batch, Strategy::ParallelBatch];

    pub fn name(&self) -> &'static str {
        match self {
            Strategy::ScalarLoop => "scalar-loop",
            Strategy::Batch => "batch",
            Strategy::ParallelBatch => "parallel-batch",
        }
    }

    pub fn parse(s: &str) -> Option<Strategy> {
        Strategy::ALL.into_iter().find(|st| st.name() == s)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What to measure. The default grid is logarithmic from 1 to 10^7.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchSpec {
    pub operations: Vec<Operation>,
    pub strategies: Vec<Strategy>,
    pub n_grid: Vec<usize>,
    pub warmup: usize,
    pub repetitions: usize,
    pub seed: u64,
}

pub fn default_n_grid() -> Vec<usize> {
    (0..=7).map(|e| 10usize.pow(e)).collect()
}

impl Default for BenchSpec {
    fn default() -> Self {
        Self {
            operations: Operation::ALL.to_vec(),
            strategies: Strategy::ALL.to_vec(),
            n_grid: default_n_grid(),
            warmup: 3,
            repetitions: 5,
            seed: 0,
        }
    }
}

impl BenchSpec {
    pub fn validate(&self) -> Result<(), BenchError> {
        if self.operations.is_empty() || self.strategies.is_empty() || self.n_grid.is_empty() {
            return Err(BenchError::EmptySpec);
        }
        if self.n_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(BenchError::GridNotAscending);
        }
        if self.repetitions < 5 {
            return Err(BenchError::TooFewRepetitions(self.repetitions));
        }
        Ok(())
    }
}

/// One measured cell.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub operation: Operation,
    pub strategy: Strategy,
    pub n: usize,
    pub median_s: f64,
    pub min_s: f64,
    pub ops_per_s: f64,
    pub timestamp_unix_s: u64,
    pub host: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BenchError {
    #[error("spec must name at least one operation, strategy, and grid point")]
    EmptySpec,

    #[error("n-grid must be strictly ascending")]
    GridNotAscending,

    #[error("repetitions must be at least 5, got {0}")]
    TooFewRepetitions(usize),

    #[error("strategy outputs diverged for {operation} at N = {n}: {detail}")]
    EquivalenceFailed {
        operation: String,
        n: usize,
        detail: String,
    },

    #[error("no records to emit")]
    NoRecords,
}

/// Records plus diagnostics for any grid cells that were skipped.
#[derive(Debug, Clone)]
pub struct BenchRun {
    pub records: Vec<BenchRecord>,
    pub diagnostics: Vec<String>,
}

/// Rough per-element footprint of a cell across input layouts and the
/// largest output, used to skip grid points that cannot be allocated.
fn bytes_per_element(op: Operation) -> usize {
    match op {
        Operation::RotationCompose => 2 * 32 * 2 + 32 * 2,
        Operation::RotationApply => (32 + 24) * 2 + 24 * 2,
        Operation::TransformCompose => 2 * 56 * 2 + 56 * 2,
        Operation::TransformApply => (56 + 24) * 2 + 24 * 2,
    }
}

fn allocation_preflight(bytes: usize) -> bool {
    let mut probe: Vec<u8> = Vec::new();
    probe.try_reserve_exact(bytes).is_ok()
}

pub fn host_descriptor() -> String {
    let threads = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    format!(
        "{}-{}-{}core",
        std::env::consts::OS,
        std::env::consts::ARCH,
        threads
    )
}

fn median(samples: &mut [f64]) -> f64 {
    samples.sort_by(|a, b| a.partial_cmp(b).expect("timings are finite"));
    let n = samples.len();
    if n % 2 == 1 {
        samples[n / 2]
    } else {
        0.5 * (samples[n / 2 - 1] + samples[n / 2])
    }
}

/// Run the whole grid: generate seeded inputs per (operation, N), verify
/// every strategy's output bit-identical to the scalar loop, then time.
pub fn run_bench(spec: &BenchSpec) -> Result<BenchRun, BenchError> {
    spec.validate()?;
    let host = host_descriptor();
    let mut records = Vec::new();
    let mut diagnostics = Vec::new();

    for &op in &spec.operations {
        for &n in &spec.n_grid {
            let needed = bytes_per_element(op).saturating_mul(n);
            if !allocation_preflight(needed) {
                diagnostics.push(format!(
                    "skipped {op} at N = {n}: allocation of {needed} bytes failed"
                ));
                continue;
            }

            let prepared = strategies::prepare(op, n, spec.seed);

            let reference = prepared.run(Strategy::ScalarLoop);
            for &strategy in &spec.strategies {
                if strategy == Strategy::ScalarLoop {
                    continue;
                }
                strategies::equivalent(&prepared.run(strategy), &reference).map_err(|detail| {
                    BenchError::EquivalenceFailed {
                        operation: op.name().to_string(),
                        n,
                        detail,
                    }
                })?;
            }
            drop(reference);

            for &strategy in &spec.strategies {
                for _ in 0..spec.warmup {
                    std::hint::black_box(prepared.run(strategy));
                }
                let mut samples = Vec::with_capacity(spec.repetitions);
                for _ in 0..spec.repetitions {
                    let start = Instant::now();
                    let out = std::hint::black_box(prepared.run(strategy));
                    let elapsed = start.elapsed().as_secs_f64();
                    drop(out);
                    samples.push(elapsed);
                }
                let min_s = samples.iter().copied().fold(f64::INFINITY, f64::min);
                let median_s = median(&mut samples);
                records.push(BenchRecord {
                    operation: op,
                    strategy,
                    n,
                    median_s,
                    min_s,
                    ops_per_s: n as f64 / median_s,
                    timestamp_unix_s: SystemTime::now()
                        .duration_since(UNIX_EPOCH)
                        .unwrap_or_default()
                        .as_secs(),
                    host: host.clone(),
                });
            }
        }
    }
    Ok(BenchRun {
        records,
        diagnostics,
    })
}

/// CSV with header `operation,strategy,N,median_s,min_s,ops_per_s,host`,
/// newline-terminated rows, floats at full double precision.
pub fn emit_csv(records: &[BenchRecord]) -> Result<Vec<u8>, BenchError> {
    if records.is_empty() {
        return Err(BenchError::NoRecords);
    }
    let mut out = String::from("operation,strategy,N,median_s,min_s,ops_per_s,host\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{:.16e},{:.16e},{:.16e},{}\n",
            r.operation, r.strategy, r.n, r.median_s, r.min_s, r.ops_per_s, r.host
        ));
    }
    Ok(out.into_bytes())
}
