//! `tropmat`: batch front end for the tropmat library.
//!
//! Every subcommand reads one JSON document (from a path, or standard input
//! for `-` or no path) and writes one JSON document to standard output.
//! Exit status 0 means ok/found/feasible/inside, 1 means
//! violated/infeasible/not-found/outside, and 2 means the input was rejected,
//! with a diagnostic on standard error.

mod commands;
mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::render::Output;

const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(name = "tropmat", version, about = "Matroidal colorful Carathéodory toolkit over exact rationals")]
struct Cli {
    /// Do not print the one-line summary on standard error.
    #[arg(long, global = true)]
    quiet: bool,
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// Instance file; `-` or no argument reads standard input.
    input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Pinned {
    #[command(flatten)]
    input: Input,
    /// Element (label or index) that the basis must contain.
    #[arg(long)]
    pin: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tropical hull membership of the target with a certificate.
    Membership(Input),
    /// Greedy colorful basis under the basis/cocircuit condition.
    ColorfulBasis {
        #[command(flatten)]
        args: Pinned,
        /// Include the exchange trace.
        #[arg(long)]
        trace: bool,
    },
    /// Checks the basis/cocircuit condition.
    VerifyCondition(Input),
    /// Colorful basis under the two-cocircuit condition (rank d + 1).
    TwoCocircuit {
        #[command(flatten)]
        input: Input,
        /// Only check the two-cocircuit condition.
        #[arg(long)]
        check: bool,
        /// Include the exchange trace.
        #[arg(long)]
        trace: bool,
    },
    /// Checks the Euclidean basis/cocircuit condition.
    KmVerify {
        #[command(flatten)]
        input: Input,
        /// Check the corank-2 condition instead.
        #[arg(long)]
        corank2: bool,
    },
    /// Finds a basis whose points contain the origin in their convex hull.
    KmBasis(Pinned),
    /// Solves a colorful tropical linear program.
    ClpSolve(Input),
    /// Encodes a 3-dimensional matching instance as a colorful program.
    #[command(name = "clp-from-3dm")]
    ClpFrom3dm(Input),
    /// Solves a {-inf, 0} system through dual-Horn satisfiability.
    HornSolve(Input),
    /// Builds a configuration whose support complex is the given complex.
    RealizeComplex(Input),
    /// Support complex of a configuration at its target.
    SupportComplex(Input),
    /// Rank, bases, loops and cocircuits of a matroid.
    MatroidInfo(Input),
    /// Blocker and matroid-basis tests for a clutter.
    ClutterCheck(Input),
    /// Emits a random or fixture instance.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    kind: GenKind,
    /// Seed for the random generators.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Part size of a 3-dimensional matching instance.
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Number of hyperedges of a 3-dimensional matching instance.
    #[arg(long, default_value_t = 6)]
    edges: usize,
    /// Rows of a colorful program.
    #[arg(long, default_value_t = 3)]
    rows: usize,
    /// Columns of a colorful program, or points of a configuration.
    #[arg(short, long, default_value_t = 6)]
    n: usize,
    /// Color classes of a colorful program.
    #[arg(short, long, default_value_t = 3)]
    r: usize,
    /// Dimension of a configuration.
    #[arg(short, long, default_value_t = 2)]
    d: usize,
    /// Finite entries are integers in [-range, range].
    #[arg(long, default_value_t = 3)]
    range: i64,
    /// Probability of a -inf entry.
    #[arg(long, default_value_t = 0.3)]
    neg_inf: f64,
    /// Matroid family of a random configuration instance.
    #[arg(long, value_enum, default_value_t = Family::Partition)]
    family: Family,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GenKind {
    #[value(name = "random-3dm")]
    Random3dm,
    RandomClp,
    RandomConfig,
    Fig1,
    Fig2,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Partition,
    Uniform,
    Graphic,
    Explicit,
    Truncation,
}

fn read_input(input: &Input) -> Result<Value> {
    let mut text = String::new();
    match &input.input {
        Some(path) if path.as_os_str() != "-" => {
            text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut text).context("cannot read standard input")?;
        }
    }
    let mut value = tropmat_core::formats::parse_json(&text)?;
    // Documents emitted by this tool carry a version tag; drop it so they
    // can be fed back in.
    if let Value::Object(map) = &mut value {
        match map.remove("schema_version") {
            Some(Value::String(v)) if v != SCHEMA_VERSION => anyhow::bail!("unsupported schema_version {v:?}"),
            _ => {}
        }
    }
    Ok(value)
}

fn name(command: &Command) -> &'static str {
    match command {
        Command::Membership(_) => "membership",
        Command::ColorfulBasis { .. } => "colorful-basis",
        Command::VerifyCondition(_) => "verify-condition",
        Command::TwoCocircuit { .. } => "two-cocircuit",
        Command::KmVerify { .. } => "km-verify",
        Command::KmBasis(_) => "km-basis",
        Command::ClpSolve(_) => "clp-solve",
        Command::ClpFrom3dm(_) => "clp-from-3dm",
        Command::HornSolve(_) => "horn-solve",
        Command::RealizeComplex(_) => "realize-complex",
        Command::SupportComplex(_) => "support-complex",
        Command::MatroidInfo(_) => "matroid-info",
        Command::ClutterCheck(_) => "clutter-check",
        Command::Gen(_) => "gen",
    }
}

fn execute(command: &Command) -> Result<Output> {
    use commands::*;
    match command {
        Command::Membership(input) => membership(&read_input(input)?),
        Command::ColorfulBasis { args, trace } => colorful(&read_input(&args.input)?, args.pin.as_deref(), *trace),
        Command::VerifyCondition(input) => verify_condition(&read_input(input)?),
        Command::TwoCocircuit { input, check, trace } => two_cocircuit(&read_input(input)?, *check, *trace),
        Command::KmVerify { input, corank2 } => km_verify(&read_input(input)?, *corank2),
        Command::KmBasis(args) => km_basis(&read_input(&args.input)?, args.pin.as_deref()),
        Command::ClpSolve(input) => clp_solve(&read_input(input)?),
        Command::ClpFrom3dm(input) => clp_from_3dm(&read_input(input)?),
        Command::HornSolve(input) => horn_solve(&read_input(input)?),
        Command::RealizeComplex(input) => realize(&read_input(input)?),
        Command::SupportComplex(input) => support(&read_input(input)?),
        Command::MatroidInfo(input) => matroid_info(&read_input(input)?),
        Command::ClutterCheck(input) => clutter_check(&read_input(input)?),
        Command::Gen(args) => generate(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Help and version requests are successful runs.
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let command = name(&cli.command);
    let start = Instant::now();
    match execute(&cli.command) {
        Ok(output) => {
            let elapsed = start.elapsed();
            let (document, code, summary) = output.finish(command, elapsed);
            let text =
                if cli.pretty { serde_json::to_string_pretty(&document) } else { serde_json::to_string(&document) }
                    .expect("JSON values serialize");
            println!("{text}");
            if !cli.quiet {
                eprintln!("tropmat {command}: {summary}");
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("tropmat {command}: error: {e:#}");
            ExitCode::from(2)
        }
    }
}
