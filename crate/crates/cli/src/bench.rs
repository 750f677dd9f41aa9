//! Repeat-averaged timing of the decomposition algorithms.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::mpsc::{self, RecvTimeoutError};
use std::sync::Arc;
use std::thread;
use std::time::{Duration, Instant};

use anyhow::Result;
use atomdecomp::{decompose_graph, Algorithm, CancelToken, DecomposeOptions, Graph, TieBreak};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub graph: String,
    pub nodes: usize,
    pub edges: usize,
    pub algorithm: String,
    pub repeats: usize,
    /// `None` when the run was skipped.
    pub mean_seconds: Option<f64>,
    pub std_seconds: Option<f64>,
    pub atoms: Option<usize>,
    pub status: String,
}

#[derive(Debug, Serialize)]
pub struct BenchReport {
    pub environment: String,
    pub tie_break: String,
    pub timeout_seconds: f64,
    pub rows: Vec<BenchRow>,
}

pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub repeats: usize,
    pub timeout: Duration,
    pub tie_break: TieBreak,
}

enum RunOutcome {
    Done { times: Vec<f64>, atoms: usize },
    TimedOut,
    Failed(String),
}

/// Times `repeats` decompositions in a worker thread, cancelling it once
/// `timeout` has elapsed.
fn run_timed(g: &Arc<Graph>, alg: Algorithm, cfg: &BenchConfig) -> RunOutcome {
    let cancel = CancelToken::new();
    let opts = DecomposeOptions {
        separators: false,
        cancel: cancel.clone(),
        ..DecomposeOptions::default()
    };
    let (tx, rx) = mpsc::channel();
    let graph = Arc::clone(g);
    let (repeats, tie) = (cfg.repeats, cfg.tie_break);
    let worker = thread::spawn(move || {
        let mut times = Vec::with_capacity(repeats);
        let mut atoms = 0;
        for _ in 0..repeats {
            let start = Instant::now();
            match decompose_graph(&graph, alg, tie, &opts) {
                Ok(d) => atoms = d.atoms.len(),
                Err(e) => {
                    let _ = tx.send(Err(e));
                    return;
                }
            }
            times.push(start.elapsed().as_secs_f64());
        }
        let _ = tx.send(Ok((times, atoms)));
    });
    let outcome = match rx.recv_timeout(cfg.timeout) {
        Ok(Ok((times, atoms))) => RunOutcome::Done { times, atoms },
        Ok(Err(e)) => RunOutcome::Failed(e.to_string()),
        Err(RecvTimeoutError::Disconnected) => RunOutcome::Failed("worker panicked".into()),
        Err(RecvTimeoutError::Timeout) => {
            cancel.cancel();
            RunOutcome::TimedOut
        }
    };
    // a cancelled worker stops at its next check
    let _ = worker.join();
    outcome
}

fn mean_std(times: &[f64]) -> (f64, f64) {
    let n = times.len() as f64;
    let mean = times.iter().sum::<f64>() / n;
    let var = times.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

pub fn environment() -> String {
    let threads = thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    format!(
        "{} {} with {threads} hardware thread(s); prda uses {} rayon worker(s)",
        std::env::consts::OS,
        std::env::consts::ARCH,
        rayon_threads()
    )
}

fn rayon_threads() -> usize {
    std::env::var("RAYON_NUM_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| {
            thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Loads every input, then times each requested algorithm on it.
pub fn run(inputs: &[impl AsRef<Path>], cfg: &BenchConfig) -> Result<BenchReport> {
    let mut rows = Vec::new();
    for path in inputs {
        let path = path.as_ref();
        let g = crate::load_graph(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        let g = Arc::new(g);
        for &alg in &cfg.algorithms {
            let mut row = BenchRow {
                graph: name.clone(),
                nodes: g.n(),
                edges: g.m(),
                algorithm: alg.to_string(),
                repeats: cfg.repeats,
                mean_seconds: None,
                std_seconds: None,
                atoms: None,
                status: "ok".into(),
            };
            match run_timed(&g, alg, cfg) {
                RunOutcome::Done { times, atoms } => {
                    let (mean, std) = mean_std(&times);
                    row.mean_seconds = Some(mean);
                    row.std_seconds = Some(std);
                    row.atoms = Some(atoms);
                }
                RunOutcome::TimedOut => row.status = "timeout".into(),
                RunOutcome::Failed(msg) => row.status = format!("error: {msg}"),
            }
            rows.push(row);
        }
    }
    Ok(BenchReport {
        environment: environment(),
        tie_break: cfg.tie_break.to_string(),
        timeout_seconds: cfg.timeout.as_secs_f64(),
        rows,
    })
}

impl BenchReport {
    pub fn failed(&self) -> bool {
        self.rows.iter().any(|r| r.status.starts_with("error"))
    }

    /// Aligned table with one line per graph and one time column per
    /// algorithm; skipped runs show `---`.
    pub fn table(&self, algorithms: &[Algorithm]) -> String {
        let mut header = vec!["Graph".to_string(), "Nodes".into(), "Edges".into()];
        header.extend(algorithms.iter().map(|a| format!("{a} (s)")));
        let mut lines = vec![header];
        let mut i = 0;
        while i < self.rows.len() {
            let first = &self.rows[i];
            let mut line = vec![
                first.graph.clone(),
                first.nodes.to_string(),
                first.edges.to_string(),
            ];
            for _ in algorithms {
                let r = &self.rows[i];
                line.push(match (r.mean_seconds, r.std_seconds) {
                    (Some(m), Some(s)) => format!("{m:.6} ± {s:.6}"),
                    _ if r.status == "timeout" => "---".into(),
                    _ => "error".into(),
                });
                i += 1;
            }
            lines.push(line);
        }
        let cols = lines[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| {
                lines
                    .iter()
                    .map(|l| l[c].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for line in &lines {
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(c, (cell, &w))| {
                    let pad = w - cell.chars().count();
                    if c == 0 {
                        format!("{cell}{}", " ".repeat(pad))
                    } else {
                        format!("{}{cell}", " ".repeat(pad))
                    }
                })
                .collect();
            writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
        }
        let repeats = self.rows.first().map_or(0, |r| r.repeats);
        writeln!(
            out,
            "mean ± std over {repeats} repeat(s); --- = exceeded the {}s timeout",
            self.timeout_seconds
        )
        .unwrap();
        writeln!(out, "host: {}", self.environment).unwrap();
        out
    }
}
