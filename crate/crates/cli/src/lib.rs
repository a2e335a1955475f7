//! The `bsc` command line: instance files in, exact reports out.

pub mod instance;
pub mod plot;
pub mod report;
pub mod sweep;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use bsc_core::bsc::{jumps_from_weights, weights_from_jumps, Outcome};
use bsc_core::exactnum::{fmt_rat_list, parse_rat_list};
use bsc_core::{Error, Result};

use instance::{parse_instances, Instance};
use report::{affinoid_instance, check_instance, polygon_instance, satake_norm_instance, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bsc", version, about = "Exact admissibility and affinoid checks for filtered phi-modules and Satake data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every applicable check and print verdict reports.
    Check { files: Vec<PathBuf> },
    /// Print Newton and Hodge vertex tables, optionally with SVG plots.
    Polygon {
        files: Vec<PathBuf>,
        /// Directory receiving `<id>.svg` and `<id>.txt` per instance.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Valuation of the Satake norm of the instance's `term` lines.
    SatakeNorm { files: Vec<PathBuf> },
    /// Membership of `zeta-vals` in the (normalized) affinoid.
    Affinoid { files: Vec<PathBuf> },
    /// Convert highest weights to jumps or back.
    ConvertWeights {
        /// Nondecreasing highest weights, e.g. "0 1".
        #[arg(long, allow_hyphen_values = true, conflicts_with = "jumps", required_unless_present = "jumps")]
        weights: Option<String>,
        /// Strictly increasing jumps, e.g. "-2 0".
        #[arg(long, allow_hyphen_values = true)]
        jumps: Option<String>,
    },
    /// Check seeded random GL_n instances.
    Sweep {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, env = "BSC_SEED", default_value_t = 0)]
        seed: u64,
    },
}

fn exit_code(outcome: Outcome) -> i32 {
    match outcome {
        Outcome::Pass => EXIT_PASS,
        Outcome::Fail => EXIT_FAIL,
        Outcome::Undecided => EXIT_UNDECIDED,
    }
}

fn load(files: &[PathBuf]) -> std::result::Result<Vec<Instance>, String> {
    if files.is_empty() {
        return Err("no instance files given".into());
    }
    let mut all = Vec::new();
    for path in files {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        all.extend(parse_instances(&text).map_err(|e| format!("{}: {e}", path.display()))?);
    }
    all.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(all)
}

fn run_reports(
    files: &[PathBuf],
    f: fn(&Instance) -> Result<Report>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let instances = match load(files) {
        Ok(i) => i,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let results: Vec<Result<Report>> = instances.par_iter().map(f).collect();
    let mut outcome = Outcome::Pass;
    let mut code = None;
    for (inst, r) in instances.iter().zip(results) {
        match r {
            Ok(rep) => {
                outcome = outcome.combine(rep.outcome);
                let _ = writeln!(out, "{}", rep.text);
            }
            Err(e) => {
                let _ = writeln!(err, "error: instance `{}`: {e}", inst.id);
                code = Some(EXIT_INPUT);
            }
        }
    }
    code.unwrap_or_else(|| exit_code(outcome))
}

fn run_polygon(files: &[PathBuf], plot: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let instances = match load(files) {
        Ok(i) => i,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    if let Some(dir) = plot {
        if let Err(e) = fs::create_dir_all(dir) {
            let _ = writeln!(err, "error: {}: {e}", dir.display());
            return EXIT_INPUT;
        }
    }
    let mut all_dominate = true;
    for inst in &instances {
        let pair = match polygon_instance(inst) {
            Ok(p) => p,
            Err(e) => {
                let _ = writeln!(err, "error: instance `{}`: {e}", inst.id);
                return EXIT_INPUT;
            }
        };
        all_dominate &= pair.dominates;
        let table = pair.vertex_table();
        let _ = writeln!(out, "{table}");
        if let Some(dir) = plot {
            let written = fs::write(dir.join(format!("{}.svg", inst.id)), plot::render_svg(&pair))
                .and_then(|_| fs::write(dir.join(format!("{}.txt", inst.id)), &table));
            if let Err(e) = written {
                let _ = writeln!(err, "error: {}: {e}", dir.display());
                return EXIT_INPUT;
            }
        }
    }
    exit_code(Outcome::from_bool(all_dominate))
}

fn run_convert(weights: Option<&str>, jumps: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = (|| -> Result<String> {
        match (weights, jumps) {
            (Some(a), None) => Ok(format!("jumps: {}", fmt_rat_list(&jumps_from_weights(&parse_rat_list(a)?)?))),
            (None, Some(i)) => Ok(format!("weights: {}", fmt_rat_list(&weights_from_jumps(&parse_rat_list(i)?)?))),
            _ => Err(Error::parse("give exactly one of --weights and --jumps")),
        }
    })();
    match result {
        Ok(line) => {
            let _ = writeln!(out, "{line}");
            EXIT_PASS
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn run_sweep(rank: usize, count: usize, seed: u64, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if rank == 0 {
        let _ = writeln!(err, "error: --rank must be positive");
        return EXIT_INPUT;
    }
    let reports = match sweep::random_instances(rank, count, seed).and_then(|i| sweep::check_all(&i)) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let _ = writeln!(out, "sweep: rank={rank} count={count} seed={seed}\n");
    for r in &reports {
        let _ = writeln!(out, "{}", r.text);
    }
    let _ = write!(out, "{}", sweep::summary(&reports));
    // a sweep succeeds when every report was produced and no cross-check disagreed
    if reports.iter().any(|r| r.text.contains("DISAGREE")) {
        EXIT_FAIL
    } else {
        EXIT_PASS
    }
}

/// Runs a parsed command line, returning the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Check { files } => run_reports(&files, check_instance, out, err),
        Command::Polygon { files, plot } => run_polygon(&files, plot.as_deref(), out, err),
        Command::SatakeNorm { files } => run_reports(&files, satake_norm_instance, out, err),
        Command::Affinoid { files } => run_reports(&files, affinoid_instance, out, err),
        Command::ConvertWeights { weights, jumps } => run_convert(weights.as_deref(), jumps.as_deref(), out, err),
        Command::Sweep { rank, count, seed } => run_sweep(rank, count, seed, out, err),
    }
}
