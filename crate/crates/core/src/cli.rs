//! Command line front end: `compute` and `verify`.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::cache::{Cache, CACHE_DIR_ENV};
use crate::cd::cd_lattice;
use crate::error::{Error, Result};
use crate::report::{to_sorted_json, Report, VerifyReport};
use crate::spec::GroupSpec;
use crate::subgroup::Limits;
use crate::theorems::{run_check, run_on_corpus, verify_all, verify_group, CHECKS};

#[derive(Debug, Parser)]
#[command(name = "cdlat", version, about = "Chermak-Delgado lattices of small finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the lattice of a group, e.g. `cdlat compute "D8 wr C2"`.
    Compute {
        spec: String,
        #[command(flatten)]
        opts: Opts,
        /// Also run this check on the group and attach its verdict.
        #[arg(long)]
        check: Vec<String>,
    },
    /// Run a registered check (or `all`) on a group or on the built-in corpus.
    Verify {
        check: String,
        #[arg(default_value = "corpus")]
        spec: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// List registered checks.
    Checks,
}

#[derive(Debug, Args)]
pub struct Opts {
    /// Write the report as JSON (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write the lattice as Graphviz DOT (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
    /// Largest group order for which all subgroups are enumerated.
    #[arg(long, value_name = "N")]
    pub max_order: Option<usize>,
    /// Abort once this many subgroups have been found.
    #[arg(long, value_name = "N")]
    pub max_subgroups: Option<usize>,
    #[arg(long)]
    pub no_cache: bool,
    #[arg(long, value_name = "PATH", env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long, value_name = "N")]
    pub threads: Option<usize>,
    /// Print errors to stderr as JSON.
    #[arg(long)]
    pub error_json: bool,
}

impl Opts {
    pub fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(n) = self.max_order {
            l.enumeration_limit = n;
        }
        if let Some(n) = self.max_subgroups {
            l.subgroup_cap = n;
        }
        l
    }
}

/// Parses `args` and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let error_json = match &cli.command {
        Command::Compute { opts, .. } | Command::Verify { opts, .. } => opts.error_json,
        Command::Checks => false,
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            report_error(&e, error_json);
            e.exit_code()
        }
    }
}

fn report_error(e: &Error, as_json: bool) {
    if !as_json {
        eprintln!("error: {e}");
        return;
    }
    let mut v = json!({ "error": e.kind(), "message": e.to_string(), "exit_code": e.exit_code() });
    if let Error::Parse(p) = e {
        v["position"] = json!(p.position);
        v["expected"] = json!(p.expected);
    }
    eprintln!("{v}");
}

pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Checks => {
            for c in CHECKS {
                println!("{:<24} {}", c.id, c.claim);
            }
            Ok(0)
        }
        Command::Compute { spec, opts, check } => with_threads(opts.threads, || compute(&spec, &opts, &check)),
        Command::Verify { check, spec, opts } => with_threads(opts.threads, || verify(&check, &spec, &opts)),
    }
}

fn with_threads(threads: Option<usize>, f: impl FnOnce() -> Result<i32> + Send) -> Result<i32> {
    match threads {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
    }
}

/// Computes (or loads from cache) the report for one spec.
pub fn compute_report(spec: &GroupSpec, limits: &Limits, cache: Option<&Cache>) -> Result<Report> {
    let text = spec.to_string();
    if let Some(hit) = cache.map(|c| c.get(&text)).transpose()?.flatten() {
        return Ok(hit);
    }
    let g = spec.build(limits)?;
    let report = Report::from_result(&text, &cd_lattice(&g, limits)?);
    if let Some(c) = cache {
        c.put(&text, &report)?;
    }
    Ok(report)
}

fn compute(spec: &str, opts: &Opts, checks: &[String]) -> Result<i32> {
    let parsed = GroupSpec::parse(spec)?;
    let limits = opts.limits();
    let cache = (!opts.no_cache).then(|| Cache::locate(opts.cache_dir.as_deref()));
    let mut report = compute_report(&parsed, &limits, cache.as_ref())?;
    for id in checks {
        report.verdicts.push(run_check(id, &parsed, &limits)?);
    }
    let quiet = is_stdout(&opts.json) || is_stdout(&opts.dot);
    if let Some(p) = &opts.json {
        emit(p, &report.to_json()?)?;
    }
    if let Some(p) = &opts.dot {
        emit(p, &report.to_dot())?;
    }
    if !quiet {
        println!("{}: order {}, M* = {}, {} members", report.spec, report.order, report.max_measure, report.members.len());
        for (i, m) in report.members.iter().enumerate() {
            let defect = m.defect.map_or("-".to_string(), |d| d.to_string());
            println!(
                "  [{i}] order {:<6} normal {:<5} defect {:<2} CL {:<5} gens {:?}",
                m.order, m.is_normal, defect, m.is_centrally_large, m.generators
            );
        }
        for v in &report.verdicts {
            println!("  {} {:?}", v.check_id, v.outcome);
        }
    }
    Ok(if report.verdicts.iter().all(|v| v.outcome != crate::theorems::Outcome::Failed) { 0 } else { 1 })
}

fn verify(check: &str, spec: &str, opts: &Opts) -> Result<i32> {
    let limits = opts.limits();
    let verdicts = match (check, spec) {
        ("all", "corpus") => verify_all(&limits)?,
        ("all", s) => verify_group(&GroupSpec::parse(s)?, &limits)?,
        (id, "corpus") => run_on_corpus(id, &limits)?,
        (id, s) => vec![run_check(id, &GroupSpec::parse(s)?, &limits)?],
    };
    let report = VerifyReport::new(verdicts);
    if let Some(p) = &opts.json {
        emit(p, &report.to_json()?)?;
    }
    if !is_stdout(&opts.json) {
        for v in &report.verdicts {
            let outcome = format!("{:?}", v.outcome).to_uppercase();
            let extra = v
                .note
                .clone()
                .or_else(|| v.witness.as_ref().map(|w| w.description.clone()))
                .unwrap_or_default();
            println!("{outcome:<7} {:<24} {:<28} {extra}", v.check_id, v.group_spec);
        }
        let s = &report.summary;
        println!("{} passed, {} failed, {} skipped", s.passed, s.failed, s.skipped);
    }
    Ok(if report.all_ok() { 0 } else { 1 })
}

fn is_stdout(p: &Option<PathBuf>) -> bool {
    p.as_deref() == Some(Path::new("-"))
}

fn emit(path: &Path, text: &str) -> Result<()> {
    if path == Path::new("-") {
        print!("{text}");
        return Ok(());
    }
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Serializes an error the way `--error-json` prints it.
pub fn error_json(e: &Error) -> Result<String> {
    to_sorted_json(&json!({ "error": e.kind(), "message": e.to_string(), "exit_code": e.exit_code() }))
}
