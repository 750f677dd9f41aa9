//! `atomdecomp`: decompose graphs into atoms, verify results, benchmark.

mod bench;
mod document;
mod verify;

use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use atomdecomp::hull::convex_hull_traced;
use atomdecomp::{decompose_graph, mcs_ordering, Algorithm, DecomposeOptions, Graph, TieBreak};
use clap::{Args, Parser, Subcommand};

use crate::document::ResultDocument;

#[derive(Parser)]
#[command(
    name = "atomdecomp",
    version,
    about = "Atom decomposition of undirected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose an edge-list graph into atoms and clique minimal separators.
    Decompose(DecomposeArgs),
    /// Check a result document against its input graph.
    Verify(VerifyArgs),
    /// Time decomposition algorithms on one or more graphs.
    Bench(BenchArgs),
    /// Print the convex hull of a vertex set (debugging aid).
    Hull(HullArgs),
}

#[derive(Args)]
struct DecomposeArgs {
    /// Edge list: one `u v` pair per line, `#` starts a comment.
    input: PathBuf,
    #[arg(long, default_value = "rda")]
    algorithm: Algorithm,
    /// lowest-id, highest-id or random:<seed>
    #[arg(long, default_value = "lowest-id")]
    tie_break: TieBreak,
    /// Write the result document here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, overrides_with = "no_separators")]
    separators: bool,
    /// Skip computing clique minimal separators.
    #[arg(long)]
    no_separators: bool,
    /// Print the MCS ordering (labels by increasing number) to stderr.
    #[arg(long)]
    print_ordering: bool,
}

#[derive(Args)]
struct VerifyArgs {
    input: PathBuf,
    /// Result document produced by `decompose`.
    result: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Algorithms to time, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "rda,prda,baseline")]
    algorithm: Vec<Algorithm>,
    #[arg(long, default_value = "lowest-id")]
    tie_break: TieBreak,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    repeats: u64,
    /// Per graph and algorithm, covering all repeats.
    #[arg(long, default_value_t = 600.0)]
    timeout_seconds: f64,
    /// Also write the report as JSON here.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct HullArgs {
    input: PathBuf,
    /// Seed vertex labels.
    #[arg(required = true)]
    seeds: Vec<String>,
}

/// Failures that map to exit code 1; anything else exits with 2.
#[derive(Debug)]
struct CheckFailed;

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("check failed")
    }
}

impl std::error::Error for CheckFailed {}

pub(crate) fn load_graph(path: &Path) -> Result<Graph> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let (g, _) = Graph::load_edge_list(BufReader::new(file))
        .with_context(|| format!("cannot parse {}", path.display()))?;
    if g.is_empty() {
        bail!("{}: graph has no vertices", path.display());
    }
    Ok(g)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn cmd_decompose(args: DecomposeArgs) -> Result<()> {
    let g = load_graph(&args.input)?;
    if args.print_ordering {
        for comp in g.components() {
            let part = g.induced(&comp)?;
            let ord = mcs_ordering(&part.graph, args.tie_break)?;
            let labels: Vec<_> = ord
                .sequence()
                .iter()
                .map(|&v| part.graph.label(v).into_owned())
                .collect();
            eprintln!("ordering: {}", labels.join(" "));
        }
    }
    let opts = DecomposeOptions {
        separators: !args.no_separators,
        ..DecomposeOptions::default()
    };
    let d = decompose_graph(&g, args.algorithm, args.tie_break, &opts)?;
    let doc = ResultDocument::new(&g, &d);
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    write_output(args.output.as_deref(), &text)
}

fn cmd_verify(args: VerifyArgs) -> Result<()> {
    let g = load_graph(&args.input)?;
    let raw = fs::read_to_string(&args.result)
        .with_context(|| format!("cannot read {}", args.result.display()))?;
    let doc: ResultDocument = serde_json::from_str(&raw)
        .with_context(|| format!("cannot parse {}", args.result.display()))?;
    let checks = verify::verify(&g, &doc);
    let mut ok = true;
    for c in &checks {
        if c.passed() {
            match &c.note {
                Some(note) => println!("PASS {} ({note})", c.name),
                None => println!("PASS {}", c.name),
            }
        } else {
            ok = false;
            println!("FAIL {}", c.name);
            for p in &c.problems {
                println!("  {p}");
            }
        }
    }
    if ok {
        println!("verification passed");
        Ok(())
    } else {
        println!("verification failed");
        Err(CheckFailed.into())
    }
}

fn cmd_bench(args: BenchArgs) -> Result<()> {
    if !(args.timeout_seconds >= 0.0 && args.timeout_seconds.is_finite()) {
        bail!("--timeout-seconds must be a finite non-negative number");
    }
    let cfg = bench::BenchConfig {
        algorithms: args.algorithm.clone(),
        repeats: args.repeats as usize,
        timeout: Duration::from_secs_f64(args.timeout_seconds),
        tie_break: args.tie_break,
    };
    let report = bench::run(&args.inputs, &cfg)?;
    print!("{}", report.table(&cfg.algorithms));
    for r in report.rows.iter().filter(|r| r.status.starts_with("error")) {
        eprintln!("{} / {}: {}", r.graph, r.algorithm, r.status);
    }
    if let Some(path) = &args.output {
        let mut text = serde_json::to_string_pretty(&report)?;
        text.push('\n');
        write_output(Some(path), &text)?;
    }
    if report.failed() {
        return Err(CheckFailed.into());
    }
    Ok(())
}

fn cmd_hull(args: HullArgs) -> Result<()> {
    let g = load_graph(&args.input)?;
    let seeds = g.set_from_labels(&args.seeds)?;
    let (hull, steps) = convex_hull_traced(&g, &seeds)?;
    for s in &steps {
        println!("absorbed: {}", g.labels_of(s).join(" "));
    }
    println!("hull: {}", g.labels_of(&hull).join(" "));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Decompose(a) => cmd_decompose(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Hull(a) => cmd_hull(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<CheckFailed>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
