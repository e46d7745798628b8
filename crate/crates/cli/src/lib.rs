//! File formats, generators, rendering and the command-line driver for
//! `chordcolor-core`.

pub mod bench;
pub mod format;
pub mod gen;
pub mod record;
pub mod svg;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Context;
use chordcolor_core::bookembed::{embed3_with, to_circle_instance, validate_pages};
use chordcolor_core::instance::validate_coloring;
use chordcolor_core::oracle::{oracle_solve_with, OracleConfig};
use chordcolor_core::{solve_with, SolveConfig, SolveResult};
use clap::{Parser, Subcommand, ValueEnum};

use crate::gen::Density;
use crate::record::SolveRecord;

#[derive(Debug, Clone, Parser)]
#[command(name = "chordcolor", version, about = "List 3-coloring of circle graphs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Instances with at most this many chords are solved by enumeration.
    #[arg(long, global = true, default_value_t = 8)]
    pub base_threshold: usize,
    /// Give up (exit code 3) after this many search nodes.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    /// One JSON object per line.
    Json,
    Svg,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Decide a chord instance and print a coloring if there is one.
    Solve { file: PathBuf },
    /// Find a 3-page book embedding of an ordered graph.
    Embed { file: PathBuf },
    /// Decide a chord instance with the plain backtracking solver.
    Oracle { file: PathBuf },
    /// Print a random chord instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "full")]
        density: Density,
    },
    /// Draw a chord instance as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Time the solver on random instances.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = vec![10, 20, 30])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "full")]
        density: Density,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0:#}")]
    Input(anyhow::Error),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

/// What a run printed and the process exit code: 0 for yes (or any
/// command without a verdict), 1 for no.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: u8,
}

impl Outcome {
    fn plain(output: String) -> Outcome {
        Outcome { output, exit_code: 0 }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(CliError::Input)
}

fn parsed<T>(path: &Path, r: Result<T, format::ParseError>) -> Result<T, CliError> {
    r.with_context(|| format!("in {}", path.display())).map_err(CliError::Input)
}

fn solve_config(cfg: &RunConfig) -> SolveConfig {
    SolveConfig { base_threshold: cfg.base_threshold, node_budget: cfg.budget }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match &cfg.command {
        Command::Solve { file } | Command::Oracle { file } => {
            let inst = parsed(file, format::parse_instance(&read(file)?))?;
            let oracle = matches!(cfg.command, Command::Oracle { .. });
            let start = Instant::now();
            let result = if oracle {
                oracle_solve_with(&inst, &OracleConfig { node_budget: cfg.budget })
                    .map_err(|e| CliError::Budget(e.to_string()))?
            } else {
                solve_with(&inst, &solve_config(cfg)).map_err(|e| match e {
                    chordcolor_core::SolveError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
                    _ => CliError::Input(anyhow::anyhow!(e)),
                })?
            };
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            if let Some(col) = &result.coloring {
                assert!(validate_coloring(&inst, col), "solver returned an invalid coloring");
            }
            let output = match cfg.format {
                OutputFormat::Text => verdict_text(&result),
                OutputFormat::Json => {
                    let name = if oracle { "oracle" } else { "solve" };
                    SolveRecord::new(name, inst.len(), &result, wall_ms).to_json_line() + "\n"
                }
                OutputFormat::Svg => svg::render_svg(&inst, result.coloring.as_ref()),
            };
            Ok(Outcome { output, exit_code: if result.is_yes() { 0 } else { 1 } })
        }
        Command::Embed { file } => {
            let g = parsed(file, format::parse_ordered_graph(&read(file)?))?;
            let pages = embed3_with(&g, &solve_config(cfg)).map_err(|e| CliError::Budget(e.to_string()))?;
            if let Some(p) = &pages {
                assert!(validate_pages(&g, p), "embedding has two interleaving edges on one page");
            }
            let output = match cfg.format {
                OutputFormat::Text => {
                    let mut out = String::from(if pages.is_some() { "yes\n" } else { "no\n" });
                    if let Some(p) = &pages {
                        for ((u, v), page) in g.edges().iter().zip(p.pages()) {
                            writeln!(out, "{u} {v} {page}").unwrap();
                        }
                    }
                    out
                }
                OutputFormat::Json => {
                    let rec = serde_json::json!({
                        "verdict": if pages.is_some() { "yes" } else { "no" },
                        "vertices": g.vertex_count(),
                        "edges": g.edges(),
                        "pages": pages.as_ref().map(|p| p.pages().to_vec()),
                    });
                    rec.to_string() + "\n"
                }
                OutputFormat::Svg => {
                    let (inst, _) = to_circle_instance(&g);
                    let col = pages.as_ref().map(|p| {
                        p.pages()
                            .iter()
                            .enumerate()
                            .map(|(k, &page)| (k as u32, chordcolor_core::Color::ALL[page as usize - 1]))
                            .collect()
                    });
                    svg::render_svg(&inst, col.as_ref())
                }
            };
            Ok(Outcome { output, exit_code: if pages.is_some() { 0 } else { 1 } })
        }
        Command::Gen { n, seed, density } => {
            if *n == 0 {
                return Err(CliError::Input(anyhow::anyhow!("--n must be at least 1")));
            }
            let inst = gen::gen_random(*n, *seed, *density);
            Ok(Outcome::plain(match cfg.format {
                OutputFormat::Svg => svg::render_svg(&inst, None),
                _ => format::serialize_instance(&inst),
            }))
        }
        Command::Render { file, coloring } => {
            let inst = parsed(file, format::parse_instance(&read(file)?))?;
            let col = match coloring {
                Some(path) => Some(parsed(path, format::parse_coloring(&read(path)?))?),
                None => None,
            };
            if let Some(col) = &col {
                if let Some(id) = inst.ids().find(|&id| !col.contains(id)) {
                    return Err(CliError::Input(anyhow::anyhow!("coloring leaves vertex {id} uncolored")));
                }
            }
            Ok(Outcome::plain(svg::render_svg(&inst, col.as_ref())))
        }
        Command::Bench { sizes, trials, seed, density } => {
            let records = bench::run_bench(sizes, *trials, *seed, *density, &solve_config(cfg))
                .map_err(|e| CliError::Budget(e.to_string()))?;
            let mut out = String::new();
            match cfg.format {
                OutputFormat::Json => {
                    for r in &records {
                        out.push_str(&r.to_json_line());
                        out.push('\n');
                    }
                }
                _ => {
                    writeln!(out, "{:>6} {:>8} {:>4} {:>12} {:>6} {:>12}", "n", "seed", "ans", "nodes", "depth", "ms").unwrap();
                    for r in &records {
                        writeln!(
                            out,
                            "{:>6} {:>8} {:>4} {:>12} {:>6} {:>12.2}",
                            r.n,
                            r.seed.unwrap_or(0),
                            r.verdict,
                            r.nodes,
                            r.max_depth,
                            r.wall_ms
                        )
                        .unwrap();
                    }
                    for &n in sizes {
                        let at: Vec<_> = records.iter().filter(|r| r.n == n).cloned().collect();
                        if let Some(m) = bench::median_ms(&at) {
                            writeln!(out, "n={n}: median {m:.2} ms over {} trials", at.len()).unwrap();
                        }
                    }
                }
            }
            Ok(Outcome::plain(out))
        }
    }
}

fn verdict_text(result: &SolveResult) -> String {
    let mut out = format!("{}\n", result.verdict);
    if let Some(col) = &result.coloring {
        out.push_str(&format::serialize_coloring(col));
    }
    out
}
