//! `thickcalc`: symmetric functions, thin diagram reduction and identity
//! verification from the command line.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use thickcalc::identities::{calibrate_orientation, lookup, registry, verify, GridConfig, VerificationReport, VerifyOptions};
use thickcalc::symfunc::{quantum_binomial, quantum_binomial_partition, schur_product};
use thickcalc::thick::{load_cache, save_cache, CacheStatus};
use thickcalc::{Partition, ThinElement};

const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "thickcalc", version, about = "Thick calculus for categorified quantum sl(n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion of a product of two Schur polynomials, e.g. `lr 2,1 / 1`.
    Lr {
        #[arg(required = true, num_args = 1..)]
        operands: Vec<String>,
        /// Print the table as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Quantum binomial [a+b choose a], computed two ways.
    Qbinom { a: u32, b: u32 },
    /// Canonical form of a thin element, e.g. `reduce "psi[1] x[1,0] e(1 1)"`.
    Reduce { element: String },
    /// Check identity grids and write a JSON report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Switch {
    On,
    Off,
}

#[derive(clap::Args, Serialize)]
struct VerifyArgs {
    #[arg(long, env = "THICKCALC_RANK", default_value_t = 4)]
    rank: u8,
    /// Identity to check; repeat for several. Defaults to all of them.
    #[arg(long = "identity", env = "THICKCALC_IDENTITY", value_delimiter = ',')]
    identities: Vec<String>,
    #[arg(long, env = "THICKCALC_MAX_STRANDS", default_value_t = 6)]
    max_strands: usize,
    #[arg(long, env = "THICKCALC_ORACLE", value_enum, default_value = "on")]
    oracle: Switch,
    /// Worker threads; 0 uses every core.
    #[arg(long, env = "THICKCALC_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Splitter cache file, read at start and rewritten at the end.
    #[arg(long, env = "THICKCALC_CACHE")]
    cache: Option<PathBuf>,
    #[arg(long, env = "THICKCALC_REPORT", default_value = "thickcalc-report.json")]
    report: PathBuf,
    #[arg(long, env = "THICKCALC_SEED", default_value_t = 0)]
    seed: u64,
    /// Corrupt every right-hand side; all tuples should then fail.
    #[arg(long, env = "THICKCALC_MUTATE")]
    mutate: bool,
    /// Grid bound override such as `strands=4` or `d=3`.
    #[arg(long = "grid", value_name = "KEY=MAX", value_parser = parse_override)]
    grid: Vec<(String, u32)>,
}

fn parse_override(s: &str) -> Result<(String, u32), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected KEY=MAX, got `{s}`"))?;
    let v = v.trim().parse().map_err(|_| format!("bound `{v}` is not a non-negative integer"))?;
    Ok((k.trim().to_string(), v))
}

#[derive(Serialize)]
struct RunReport<'a> {
    run: &'a VerifyArgs,
    reports: Vec<VerificationReport>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("THICKCALC_LOG", "warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Lr { operands, json } => lr(&operands.join(" "), json),
        Command::Qbinom { a, b } => Ok(qbinom(a, b)),
        Command::Reduce { element } => reduce(&element),
        Command::Verify(args) => run_verify(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn lr(operands: &str, json: bool) -> Result<u8, String> {
    let parts: Vec<&str> = operands.split('/').collect();
    if parts.len() != 2 {
        return Err(format!("expected `α / β`, got `{operands}`"));
    }
    let (a, b) = (parse_partition(parts[0])?, parse_partition(parts[1])?);
    let m = (a.len() + b.len()).max(1);
    let table = schur_product(&[a, b], m);
    if json {
        let out: BTreeMap<String, String> = table.iter().map(|(g, c)| (g.to_string(), c.to_string())).collect();
        println!("{}", serde_json::to_string_pretty(&out).expect("string map serializes"));
    } else {
        let rows: Vec<String> = table.iter().rev().map(|(g, c)| format!("{g}:{c}")).collect();
        println!("{}", rows.join(", "));
    }
    Ok(0)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty partition operand; write 0 for the empty partition".into());
    }
    s.parse().map_err(|e: thickcalc::Error| e.to_string())
}

fn qbinom(a: u32, b: u32) -> u8 {
    let sum = quantum_binomial_partition(a, b);
    let quotient = quantum_binomial(a + b, a).expect("a <= a+b");
    println!("factorial:  {quotient}");
    println!("partitions: {sum}");
    if quotient == sum {
        0
    } else {
        eprintln!("the two forms disagree");
        1
    }
}

fn reduce(text: &str) -> Result<u8, String> {
    let e: ThinElement = text.parse().map_err(|e: thickcalc::Error| e.to_string())?;
    println!("{e}");
    Ok(0)
}

fn run_verify(args: &VerifyArgs) -> Result<u8, String> {
    let specs = if args.identities.is_empty() {
        registry()
    } else {
        args.identities
            .iter()
            .map(|n| lookup(n).ok_or_else(|| format!("unknown identity `{n}`")))
            .collect::<Result<_, _>>()?
    };
    if args.rank < 2 {
        return Err("rank must be at least 2".into());
    }
    if args.max_strands < 2 {
        return Err("--max-strands must be at least 2".into());
    }
    if args.workers > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(args.workers).build_global().map_err(|e| e.to_string())?;
    }
    if let Some(path) = &args.cache {
        match load_cache(path) {
            CacheStatus::Loaded(n) => log::info!("loaded {n} cached generators"),
            CacheStatus::Missing => log::info!("no cache at {}", path.display()),
            CacheStatus::Corrupt(why) => log::info!("cache {} rejected: {why}", path.display()),
        }
    }

    let mut cfg = GridConfig::new(args.max_strands, args.rank);
    for (k, v) in &args.grid {
        cfg = cfg.with_override(k, *v);
    }
    let oracle = matches!(args.oracle, Switch::On);
    let orientation = if oracle { calibrate_orientation(args.rank) } else { Default::default() };
    let opts = VerifyOptions { oracle, orientation, mutate: args.mutate };

    let mut reports = Vec::new();
    for spec in &specs {
        let r = verify(spec, &cfg, &opts);
        println!(
            "{:<24} {:>5}/{:<5} {}",
            r.identity,
            r.summary.pass,
            r.summary.total,
            if r.passed() { "pass" } else { "FAIL" }
        );
        for t in r.failures().take(3) {
            log::warn!("{} {}: {}", r.identity, t.params, t.note.as_deref().or(t.diff.as_deref()).unwrap_or(""));
        }
        reports.push(r);
    }
    let all = reports.iter().all(|r| r.passed());

    if let Some(path) = &args.cache {
        if let Err(e) = save_cache(path) {
            log::warn!("could not write cache {}: {e}", path.display());
        }
    }
    let body = serde_json::to_string_pretty(&RunReport { run: args, reports }).map_err(|e| e.to_string())?;
    fs::write(&args.report, body + "\n").map_err(|e| format!("cannot write {}: {e}", args.report.display()))?;
    println!("{} (report: {})", if all { "all identities hold" } else { "verification failed" }, args.report.display());
    Ok(if all { 0 } else { 1 })
}
