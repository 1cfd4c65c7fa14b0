//! Batch drivers behind the command-line tool: the threshold/density table
//! and grid experiments over generator classes with CSV output.

use std::fmt;
use std::io;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::bppc::{ffd_conflicts, lower_bound, solve_exact, BppcInstance};
use crate::density::{density_branches, threshold_from_density, Regime, ThresholdParam};
use crate::generators::{
    gen_bppc_instance, gen_threshold, GeneratorError, GeneratorKind, GeneratorSpec, WeightRange,
};

/// Target densities of the benchmark grid: the densities reached by the
/// threshold generator at `d = 0.1, ..., 0.9`.
pub const GRID_DENSITIES: [f64; 9] = [0.02, 0.08, 0.18, 0.32, 0.5, 0.68, 0.82, 0.92, 0.98];

/// Thresholds tabulated by [`density_table`]: 0, 0.1, ..., 0.9.
pub fn table_thresholds() -> Vec<f64> {
    (0..10).map(|i| i as f64 / 10.0).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityRow {
    pub d: f64,
    /// `2d^2` or `1 - 2(1-d)^2`.
    pub asymptotic: f64,
    /// Expected density at the table's `n`.
    pub finite: f64,
    /// Mean density of the generated graphs.
    pub measured: f64,
}

/// Threshold graphs for seeds `1..=seeds` at each of [`table_thresholds`].
pub fn density_table(n: usize, seeds: u64) -> Result<Vec<DensityRow>, GeneratorError> {
    table_thresholds()
        .into_iter()
        .map(|d| {
            let asymptotic = pick_branch(Regime::Asymptotic, d)?;
            let finite = pick_branch(Regime::Finite(n), d)?;
            let th = ThresholdParam::new(d)?;
            let total: f64 = (1..=seeds)
                .map(|seed| gen_threshold(n, th, seed).0.density().density)
                .sum();
            Ok(DensityRow {
                d,
                asymptotic,
                finite,
                measured: if seeds == 0 { 0.0 } else { total / seeds as f64 },
            })
        })
        .collect()
}

fn pick_branch(regime: Regime, d: f64) -> Result<f64, GeneratorError> {
    let (lo, hi) = density_branches(regime, ThresholdParam::new(d)?)?;
    Ok(if d <= 0.5 { lo } else { hi })
}

pub fn format_density_table(n: usize, seeds: u64, rows: &[DensityRow]) -> String {
    let mut s = format!(
        "n = {n}, {seeds} seed(s)\n{:>4}  {:>10}  {:>10}  {:>10}\n",
        "d", "2d^2 form", "finite n", "measured"
    );
    for r in rows {
        s += &format!(
            "{:>4.1}  {:>10.6}  {:>10.6}  {:>10.6}\n",
            r.d, r.asymptotic, r.finite, r.measured
        );
    }
    s
}

/// Columns `d,asymptotic,finite,measured`, LF line endings.
pub fn write_density_csv<W: io::Write>(out: W, rows: &[DensityRow]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// A grid of `(class, n, delta, seed)` cells.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub classes: Vec<String>,
    pub n: Vec<usize>,
    pub delta: Vec<f64>,
    /// Seeds `first_seed .. first_seed + seeds`.
    pub seeds: u64,
    pub first_seed: u64,
    pub capacity: u64,
    pub wmin: u64,
    pub wmax: u64,
    /// Seconds per instance.
    pub time_limit: f64,
    pub jobs: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        let w = WeightRange::default();
        Self {
            classes: Vec::new(),
            n: Vec::new(),
            delta: Vec::new(),
            seeds: 10,
            first_seed: 1,
            capacity: 150,
            wmin: w.lo,
            wmax: w.hi,
            time_limit: 600.0,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub class: GeneratorKind,
    pub n: usize,
    pub delta: f64,
    pub seed: u64,
}

impl ExperimentConfig {
    pub fn parsed_classes(&self) -> Result<Vec<GeneratorKind>, crate::generators::UnknownKind> {
        self.classes.iter().map(|c| c.parse()).collect()
    }

    /// Cells in output order: class, then n, then delta, then seed.
    pub fn cells(&self) -> Result<Vec<Cell>, crate::generators::UnknownKind> {
        let mut out = Vec::new();
        for class in self.parsed_classes()? {
            for &n in &self.n {
                for &delta in &self.delta {
                    for seed in self.first_seed..self.first_seed + self.seeds {
                        out.push(Cell { class, n, delta, seed });
                    }
                }
            }
        }
        Ok(out)
    }
}

/// One CSV line. Result columns are empty when `error` is set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub graph_class: String,
    pub n: usize,
    pub delta_target: f64,
    pub delta_measured: Option<f64>,
    pub seed: u64,
    pub lower_bound: Option<usize>,
    pub ffd_k: Option<usize>,
    pub exact_k: Option<usize>,
    pub optimal: Option<bool>,
    pub elapsed_ms: Option<f64>,
    pub node_count: Option<u64>,
    pub error: Option<String>,
}

pub const CSV_HEADER: [&str; 12] = [
    "graph_class",
    "n",
    "delta_target",
    "delta_measured",
    "seed",
    "lower_bound",
    "ffd_k",
    "exact_k",
    "optimal",
    "elapsed_ms",
    "node_count",
    "error",
];

/// Generator parameter for a class at target density `delta`: the threshold
/// `d` reaching `delta` in expectation for `T`, `delta` itself otherwise.
pub fn generator_param(class: GeneratorKind, n: usize, delta: f64) -> Result<f64, GeneratorError> {
    Ok(match class {
        GeneratorKind::Threshold => threshold_from_density(Regime::Finite(n), delta)?.value(),
        _ => delta,
    })
}

pub fn build_instance(
    cell: &Cell,
    weights: WeightRange,
    capacity: u64,
) -> Result<BppcInstance, GeneratorError> {
    let spec = GeneratorSpec {
        kind: cell.class,
        n: cell.n,
        param: generator_param(cell.class, cell.n, cell.delta)?,
        seed: cell.seed,
    };
    gen_bppc_instance(&spec, weights, capacity)
}

pub fn run_cell(cell: &Cell, weights: WeightRange, capacity: u64, limit: Duration) -> ExperimentRow {
    let mut row = ExperimentRow {
        graph_class: cell.class.code().to_string(),
        n: cell.n,
        delta_target: cell.delta,
        delta_measured: None,
        seed: cell.seed,
        lower_bound: None,
        ffd_k: None,
        exact_k: None,
        optimal: None,
        elapsed_ms: None,
        node_count: None,
        error: None,
    };
    let inst = match build_instance(cell, weights, capacity) {
        Ok(inst) => inst,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    let r = solve_exact(&inst, limit);
    row.delta_measured = Some(inst.graph().density().density);
    row.lower_bound = Some(lower_bound(&inst, None).expect("no clique hint given"));
    row.ffd_k = Some(ffd_conflicts(&inst).bin_count());
    row.exact_k = Some(r.k);
    row.optimal = Some(r.optimal);
    row.elapsed_ms = Some(r.elapsed.as_secs_f64() * 1e3);
    row.node_count = Some(r.node_count);
    row
}

#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Kind(#[from] crate::generators::UnknownKind),
    #[error("weight range [{0}, {1}] is empty")]
    WeightRange(u64, u64),
    #[error("time limit {0} is not a nonnegative number of seconds")]
    TimeLimit(f64),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Runs every cell of `config`, up to `config.jobs` at a time. Rows come back
/// in [`ExperimentConfig::cells`] order; a failing cell yields a row with
/// `error` set.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ExperimentRow>, ExperimentError> {
    use rayon::prelude::*;

    let cells = config.cells()?;
    if config.wmin > config.wmax {
        return Err(ExperimentError::WeightRange(config.wmin, config.wmax));
    }
    let limit = Duration::try_from_secs_f64(config.time_limit)
        .map_err(|_| ExperimentError::TimeLimit(config.time_limit))?;
    let weights = WeightRange {
        lo: config.wmin,
        hi: config.wmax,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()?;
    Ok(pool.install(|| {
        cells
            .par_iter()
            .map(|c| run_cell(c, weights, config.capacity, limit))
            .collect()
    }))
}

/// Comma separated, header first, LF line endings.
pub fn write_csv<W: io::Write>(out: W, rows: &[ExperimentRow]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: io::Read>(input: R) -> csv::Result<Vec<ExperimentRow>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryCell {
    pub class: String,
    pub solved: usize,
    pub total: usize,
    /// Mean over solved instances only.
    pub mean_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub n: usize,
    pub delta: f64,
    pub cells: Vec<SummaryCell>,
}

/// One row per `(n, delta)` and one column per class, in first-seen order.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub classes: Vec<String>,
    pub rows: Vec<SummaryRow>,
}

pub fn summarize(rows: &[ExperimentRow]) -> Summary {
    let mut classes: Vec<String> = Vec::new();
    let mut keys: Vec<(usize, f64)> = Vec::new();
    for r in rows {
        if !classes.contains(&r.graph_class) {
            classes.push(r.graph_class.clone());
        }
        if !keys.contains(&(r.n, r.delta_target)) {
            keys.push((r.n, r.delta_target));
        }
    }
    let rows = keys
        .iter()
        .map(|&(n, delta)| SummaryRow {
            n,
            delta,
            cells: classes
                .iter()
                .map(|class| {
                    let group: Vec<&ExperimentRow> = rows
                        .iter()
                        .filter(|r| r.n == n && r.delta_target == delta && &r.graph_class == class)
                        .collect();
                    let solved: Vec<f64> = group
                        .iter()
                        .filter(|r| r.optimal == Some(true))
                        .filter_map(|r| r.elapsed_ms)
                        .collect();
                    SummaryCell {
                        class: class.clone(),
                        solved: solved.len(),
                        total: group.len(),
                        mean_ms: (!solved.is_empty())
                            .then(|| solved.iter().sum::<f64>() / solved.len() as f64),
                    }
                })
                .collect(),
        })
        .collect();
    Summary { classes, rows }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>5} {:>5}", "n", "delta")?;
        for c in &self.classes {
            write!(f, " | {:>7} {:>12}", format!("{c} Opt"), format!("{c} ms"))?;
        }
        writeln!(f)?;
        for r in &self.rows {
            write!(f, "{:>5} {:>5}", r.n, r.delta)?;
            for c in &r.cells {
                let opt = format!("{}/{}", c.solved, c.total);
                match c.mean_ms {
                    Some(ms) => write!(f, " | {opt:>7} {ms:>12.3}")?,
                    None => write!(f, " | {opt:>7} {:>12}", "-")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
