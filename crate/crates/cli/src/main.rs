//! `tbppc`: generate, inspect and solve bin packing instances with conflicts.
//!
//! Exit status is 0 on success, 1 on usage or I/O errors and 2 when an
//! instance file does not parse.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use threshold_bppc::density::Regime;
use threshold_bppc::harness::{
    density_table, format_density_table, run_experiment, summarize, write_csv,
    write_density_csv, ExperimentConfig,
};
use threshold_bppc::{
    decompose_universal, ffd_conflicts, gen_bppc_instance, lower_bound, parse_instance,
    recognize_threshold, solve_exact, threshold_from_density, write_instance, BppcInstance,
    GeneratorKind, GeneratorSpec, WeightRange,
};

#[derive(Parser)]
#[command(name = "tbppc", version, about = "Bin packing with threshold conflict graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one instance file per seed.
    Generate(GenerateArgs),
    /// Report density and threshold structure of an instance's conflict graph.
    Analyze(AnalyzeArgs),
    /// Solve an instance exactly, within a time limit.
    Solve(SolveArgs),
    /// Threshold `d` against expected and measured edge density.
    DensityTable(DensityTableArgs),
    /// Solve a grid of generated instances and write one CSV row per instance.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct WeightArgs {
    /// Bin capacity.
    #[arg(long = "B", default_value_t = 150)]
    capacity: u64,
    /// Smallest item weight.
    #[arg(long, default_value_t = 20)]
    wmin: u64,
    /// Largest item weight.
    #[arg(long, default_value_t = 100)]
    wmax: u64,
}

#[derive(Args)]
struct GenerateArgs {
    /// Conflict graph class: T, I, A or SG.
    #[arg(long)]
    kind: GeneratorKind,
    #[arg(long)]
    n: usize,
    /// Generator threshold (T only).
    #[arg(long, conflicts_with = "delta")]
    d: Option<f64>,
    /// Target edge density.
    #[arg(long)]
    delta: Option<f64>,
    /// First seed.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of consecutive seeds.
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[command(flatten)]
    weights: WeightArgs,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    /// Also print an interval model of a threshold graph.
    #[arg(long)]
    intervals: bool,
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    /// Seconds.
    #[arg(long, default_value_t = 600.0)]
    time_limit: f64,
    /// Also print the bins.
    #[arg(long)]
    packing: bool,
}

#[derive(Args)]
struct DensityTableArgs {
    #[arg(long, default_value_t = 1000)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    /// Also write the table as CSV.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// TOML file with any of the fields below; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Classes, comma separated.
    #[arg(long, value_delimiter = ',')]
    kind: Option<Vec<String>>,
    /// Vertex counts, comma separated.
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    /// Target densities, comma separated.
    #[arg(long, value_delimiter = ',')]
    delta: Option<Vec<f64>>,
    /// First seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Seeds per cell.
    #[arg(long)]
    seeds: Option<u64>,
    /// Bin capacity.
    #[arg(long = "B")]
    capacity: Option<u64>,
    /// Smallest item weight.
    #[arg(long)]
    wmin: Option<u64>,
    /// Largest item weight.
    #[arg(long)]
    wmax: Option<u64>,
    /// Seconds per instance.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Instances solved concurrently.
    #[arg(long)]
    jobs: Option<usize>,
    /// CSV path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(anyhow::Error),
    Parse(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Analyze(a) => analyze(a),
        Command::Solve(a) => solve(a),
        Command::DensityTable(a) => table(a),
        Command::Experiment(a) => experiment(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn generate(a: GenerateArgs) -> Outcome {
    let (param, label) = match (a.kind, a.d, a.delta) {
        (GeneratorKind::Threshold, Some(d), None) => (d, format!("d{d}")),
        (GeneratorKind::Threshold, None, Some(delta)) => {
            let d = threshold_from_density(Regime::Finite(a.n), delta)?;
            (d.value(), format!("delta{delta}"))
        }
        (GeneratorKind::SorianoGendreau, None, None) => (0.0, String::from("sg")),
        (GeneratorKind::SorianoGendreau, _, _) => {
            return Err(anyhow!("SG takes neither --d nor --delta").into())
        }
        (_, Some(_), _) => return Err(anyhow!("--d applies to --kind T only").into()),
        (_, None, Some(delta)) => (delta, format!("delta{delta}")),
        (kind, None, None) => return Err(anyhow!("--kind {kind} needs --delta").into()),
    };
    let weights = WeightRange {
        lo: a.weights.wmin,
        hi: a.weights.wmax,
    };
    fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    let mut stdout = io::stdout().lock();
    for seed in a.seed..a.seed.saturating_add(a.seeds) {
        let spec = GeneratorSpec {
            kind: a.kind,
            n: a.n,
            param,
            seed,
        };
        let inst = gen_bppc_instance(&spec, weights, a.weights.capacity)?;
        let path = a.out.join(format!("{}_n{}_{label}_s{seed}.txt", a.kind, a.n));
        fs::write(&path, write_instance(&inst))
            .with_context(|| format!("writing {}", path.display()))?;
        let report = inst.graph().density();
        writeln!(
            stdout,
            "{}: n={} conflicts={} density={:.6}",
            path.display(),
            report.n,
            report.edge_count,
            report.density
        )
        .context("writing to standard output")?;
    }
    Ok(())
}

fn load(path: &Path) -> Result<BppcInstance, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Usage)?;
    parse_instance(&text).map_err(|e| Failure::Parse(anyhow!("{}: {e}", path.display())))
}

fn analyze(a: AnalyzeArgs) -> Outcome {
    let inst = load(&a.file)?;
    let g = inst.graph();
    let report = g.density();
    let mut out = String::new();
    out += &format!("n: {}\nconflicts: {}\n", report.n, report.edge_count);
    out += &format!("density: {:.6}\n", report.density);
    match recognize_threshold(g).into_certificate() {
        Some(cert) => {
            out += "threshold: yes\n";
            out += &format!("t: {}\n", cert.clique_size());
            out += &format!("independent set: {}\n", cert.max_independent_set().len());
            out += &format!("g: {}\n", cert.universal_count());
            if a.intervals {
                out += "intervals:\n";
                for (v, iv) in cert.derive_interval_model::<f64>().intervals().iter().enumerate() {
                    out += &format!("{} {} {}\n", v + 1, iv.left, iv.right);
                }
            }
        }
        None => {
            out += "threshold: no\n";
            if a.intervals {
                return Err(anyhow!("interval model is only derived for threshold graphs").into());
            }
        }
    }
    print!("{out}");
    Ok(())
}

fn time_limit(secs: f64) -> anyhow::Result<Duration> {
    Duration::try_from_secs_f64(secs)
        .map_err(|_| anyhow!("time limit {secs} is not a nonnegative number of seconds"))
}

fn solve(a: SolveArgs) -> Outcome {
    let limit = time_limit(a.time_limit)?;
    let inst = load(&a.file)?;
    let r = solve_exact(&inst, limit);
    let lb = lower_bound(&inst, None).expect("no clique hint given");
    let mut out = String::new();
    out += &format!("lower bound: {lb}\n");
    out += &format!("ffd k: {}\n", ffd_conflicts(&inst).bin_count());
    out += &format!("exact k: {}\n", r.k);
    out += &format!("optimal: {}\n", if r.optimal { "yes" } else { "no" });
    out += &format!("elapsed ms: {:.3}\n", r.elapsed.as_secs_f64() * 1e3);
    out += &format!("nodes: {}\n", r.node_count);

    // Universal vertices take singleton bins; solve the rest on its own.
    let dec = decompose_universal(&inst);
    let g = dec.singleton_bins.len();
    let rest = solve_exact(&dec.subinstance, limit);
    let verdict = match (r.optimal && rest.optimal, g + rest.k == r.k) {
        (true, true) => "agrees",
        (true, false) => "DISAGREES",
        (false, _) => "not proven",
    };
    out += &format!("g + k(Q): {g} + {} = {} ({verdict})\n", rest.k, g + rest.k);
    if a.packing {
        for (i, bin) in r.packing.bins().iter().enumerate() {
            let items: Vec<String> = bin.iter().map(|v| v.to_string()).collect();
            out += &format!("bin {}: {}\n", i + 1, items.join(" "));
        }
    }
    print!("{out}");
    Ok(())
}

fn table(a: DensityTableArgs) -> Outcome {
    if a.n < 2 || a.seeds == 0 {
        return Err(anyhow!("density-table needs --n >= 2 and --seeds >= 1").into());
    }
    let rows = density_table(a.n, a.seeds)?;
    print!("{}", format_density_table(a.n, a.seeds, &rows));
    if let Some(path) = a.out {
        let file = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
        write_density_csv(file, &rows).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn experiment(a: ExperimentArgs) -> Outcome {
    let mut cfg = match &a.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            toml::from_str::<ExperimentConfig>(&text)
                .map_err(|e| Failure::Parse(anyhow!("{}: {e}", path.display())))?
        }
        None => ExperimentConfig::default(),
    };
    if let Some(v) = a.kind {
        cfg.classes = v;
    }
    if let Some(v) = a.n {
        cfg.n = v;
    }
    if let Some(v) = a.delta {
        cfg.delta = v;
    }
    cfg.first_seed = a.seed.unwrap_or(cfg.first_seed);
    cfg.seeds = a.seeds.unwrap_or(cfg.seeds);
    cfg.capacity = a.capacity.unwrap_or(cfg.capacity);
    cfg.wmin = a.wmin.unwrap_or(cfg.wmin);
    cfg.wmax = a.wmax.unwrap_or(cfg.wmax);
    cfg.time_limit = a.time_limit.unwrap_or(cfg.time_limit);
    cfg.jobs = a.jobs.unwrap_or(cfg.jobs);

    let rows = run_experiment(&cfg)?;
    let summary = summarize(&rows);
    match a.out {
        Some(path) => {
            let file =
                fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            write_csv(file, &rows).with_context(|| format!("writing {}", path.display()))?;
            print!("{summary}");
        }
        None => {
            write_csv(io::stdout().lock(), &rows).context("writing to standard output")?;
            eprint!("{summary}");
        }
    }
    for r in rows.iter().filter(|r| r.error.is_some()) {
        eprintln!(
            "warning: {} n={} delta={} seed={}: {}",
            r.graph_class,
            r.n,
            r.delta_target,
            r.seed,
            r.error.as_deref().unwrap_or_default()
        );
    }
    Ok(())
}
