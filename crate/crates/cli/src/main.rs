//! `gdj`: generate promise functions, run the quantum and classical
//! deciders, and write reproducible JSON reports.

mod config;
mod error;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gdj_core::classical::{classical_decide_known_k, classical_decide_unknown_k, Verdict};
use gdj_core::{
    classify_function, find_mu, make_constant, make_evenly_distributed, Algorithm, EvenSpec, FunctionTable,
    Transform,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{read_table, AuxArg, ExperimentConfig, TableSource};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "gdj", version, about = "Generalized Deutsch-Jozsa simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a function table.
    Gen(GenArgs),
    /// Run one quantum algorithm on a table.
    Run(RunArgs),
    /// Recover the range spacing mu of an evenly distributed table.
    Period(PeriodArgs),
    /// Run a classical decider with exact query counting.
    Classical(ClassicalArgs),
    /// Run a JSON array of experiment configs in parallel.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("kind").required(true).args(["constant", "evenly", "random"]))]
struct GenArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    /// Constant function with this value.
    #[arg(long, value_name = "C")]
    constant: Option<usize>,
    /// Evenly distributed function; see --k and --t.
    #[arg(long, requires = "k")]
    evenly: bool,
    /// Uniformly random table.
    #[arg(long)]
    random: bool,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    t: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Gdj1,
    DjUninit,
    Gdj2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TransformArg {
    Walsh,
    Fourier,
    FourierForward,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Function table JSON file.
    #[arg(long)]
    table: PathBuf,
    #[arg(long, value_enum, default_value = "gdj1")]
    algorithm: AlgorithmArg,
    #[arg(long, default_value_t = 1)]
    xi: usize,
    #[arg(long, value_enum, default_value = "walsh")]
    transform: TransformArg,
    /// fourier-xi | product:a0,b0,... | vector-file:PATH
    #[arg(long)]
    aux: Option<AuxArg>,
    #[arg(long, default_value_t = 0)]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PeriodArgs {
    #[arg(long)]
    table: PathBuf,
    /// Accepted samples to collect.
    #[arg(long, short = 'r', default_value_t = gdj_core::algorithms::DEFAULT_PERIOD_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ClassicalArgs {
    #[arg(long)]
    table: PathBuf,
    /// Number of distinct values K, if known.
    #[arg(long)]
    known_k: Option<usize>,
    /// ascending | descending | comma-separated permutation of 0..N
    #[arg(long, default_value = "ascending")]
    order: String,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// JSON array of experiment configs.
    #[arg(long)]
    config: PathBuf,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Run(args) => cmd_run(args),
        Command::Period(args) => cmd_period(args),
        Command::Classical(args) => cmd_classical(args),
        Command::Sweep(args) => cmd_sweep(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Write `value` as pretty JSON to `output`, or to stdout when absent.
/// The human summary goes to stdout with a file, stderr without one.
fn emit<T: Serialize>(value: &T, output: Option<&Path>, summary: &str) -> Result<(), CliError> {
    let mut json = serde_json::to_string_pretty(value).expect("reports serialize");
    json.push('\n');
    match output {
        Some(path) => {
            std::fs::write(path, json).map_err(|source| CliError::Io {
                path: path.to_path_buf(),
                source,
            })?;
            println!("{summary}");
        }
        None => {
            std::io::stdout().write_all(json.as_bytes()).map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn describe(f: &FunctionTable) -> String {
    let c = classify_function(f);
    match c.params {
        Some(p) => format!("class: {} (K={}, mu={}, nu={}, t={})", c.class, p.k, p.mu, p.nu, p.t),
        None => format!("class: {}", c.class),
    }
}

fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    let f = if let Some(c) = args.constant {
        make_constant(args.n, args.m, c)?
    } else if args.evenly {
        let k = args.k.expect("clap enforces --k with --evenly");
        make_evenly_distributed(&EvenSpec::new(args.n, args.m, k, args.t)?, args.seed)?
    } else {
        FunctionTable::random(args.n, args.m, args.seed)?
    };
    emit(&f, args.output.as_deref(), &describe(&f))
}

fn cmd_run(args: RunArgs) -> Result<(), CliError> {
    let config = ExperimentConfig {
        table: TableSource::Path(args.table),
        algorithm: match args.algorithm {
            AlgorithmArg::Gdj1 => Algorithm::Gdj1,
            AlgorithmArg::DjUninit => Algorithm::DjUninit,
            AlgorithmArg::Gdj2 => Algorithm::Gdj2,
        },
        xi: args.xi,
        transform: match args.transform {
            TransformArg::Walsh => Transform::Walsh,
            TransformArg::Fourier => Transform::Fourier,
            TransformArg::FourierForward => Transform::FourierForward,
        },
        aux: args.aux,
        shots: args.shots,
        seed: args.seed,
    };
    let report = config.execute(None)?;
    let mut summary = format!("decision: {}, P0={:.12}", report.decision, report.p_zero);
    if let Some(note) = &report.decision_note {
        summary.push_str(&format!(" ({note})"));
    }
    emit(&report, args.output.as_deref(), &summary)
}

fn cmd_period(args: PeriodArgs) -> Result<(), CliError> {
    let f = read_table(&args.table)?;
    let report = find_mu::<f64>(&f, args.samples, args.seed)?;
    let summary = if report.inconclusive {
        format!("mu_hat: {} (inconclusive), K_hat: {}", report.mu_hat, report.k_hat)
    } else {
        format!("mu_hat: {}, K_hat: {}", report.mu_hat, report.k_hat)
    };
    emit(&report, args.output.as_deref(), &summary)
}

fn parse_order(spec: &str, size: usize) -> Result<Vec<usize>, CliError> {
    match spec {
        "ascending" => Ok((0..size).collect()),
        "descending" => Ok((0..size).rev().collect()),
        list => list
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| CliError::Precondition(format!("bad --order entry {t:?}: {e}")))
            })
            .collect(),
    }
}

fn cmd_classical(args: ClassicalArgs) -> Result<(), CliError> {
    let f = read_table(&args.table)?;
    let order = parse_order(&args.order, f.domain_size())?;
    let decision = match args.known_k {
        Some(k) => classical_decide_known_k(&f, k, Some(&order))?,
        None => classical_decide_unknown_k(&f, Some(&order))?,
    };
    let summary = format!(
        "verdict: {}, queries: {} (bound {})",
        serde_json::to_value(decision.verdict).expect("verdict serializes").as_str().unwrap_or("?"),
        decision.log.count(),
        decision.bound
    );
    emit(&decision, args.output.as_deref(), &summary)?;
    if decision.verdict == Verdict::PromiseViolated {
        return Err(CliError::PromiseViolation(format!(
            "values {:?} fit neither side of the promise",
            decision.log.values()
        )));
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.config).map_err(|source| CliError::Io {
        path: args.config.clone(),
        source,
    })?;
    let configs: Vec<ExperimentConfig> = serde_json::from_str(&text).map_err(|source| CliError::Format {
        path: args.config.clone(),
        source,
    })?;
    let base = args.config.parent().map(Path::to_path_buf);
    let results: Vec<_> = configs.par_iter().map(|c| c.execute(base.as_deref())).collect();
    let mut reports = Vec::with_capacity(results.len());
    for (i, r) in results.into_iter().enumerate() {
        reports.push(r.map_err(|e| match e {
            CliError::Precondition(msg) => CliError::Precondition(format!("config {i}: {msg}")),
            other => other,
        })?);
    }
    let summary = format!("{} runs", reports.len());
    emit(&reports, args.output.as_deref(), &summary)
}
