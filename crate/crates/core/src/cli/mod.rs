//! The `sunlet-cross` command line.

pub mod format;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::analysis::{check_f_hypothesis, check_lemma_m2, check_lemma_m3, LedgerTerm};
use crate::construction::{construct_ring_drawing, construct_sunlet_drawing, sunlet_geometry};
use crate::drawing::{export_svg, validate_good_drawing, SvgSource};
use crate::error::{Error, Result};
use crate::exact_solver::{crossing_number_exact, Budget, ExactStatus};
use crate::graph::{
    make_complete, make_complete_multipartite, make_cycle, make_path, make_star, make_sunlet, sunlet_star,
    sunlet_star_params, Graph,
};
use crate::heuristic_solver::{heuristic_minimize, sweep_cell, SweepCell, SweepOptions};
use format::*;

/// Default budget for `exact` and per sweep cell when no flag is given.
pub const BUDGET_ENV: &str = "CROSSINGS_BUDGET_SECONDS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "sunlet-cross", version, about = "Drawings and crossing numbers of S_n □ K_1,m")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    SunletStar,
    Sunlet,
    Star,
    Path,
    Cycle,
    Complete,
    Multipartite,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph file.
    Gen {
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Part sizes for `multipartite`, e.g. 1,3,3.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the explicit drawing with n·m(m−1)/2 crossings.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Only the ring part C_n □ K_1,m.
        #[arg(long)]
        ring: bool,
        #[arg(short, long)]
        output: PathBuf,
        /// Also write the geometric realization as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Validate a drawing file and print its crossing count.
    Verify { drawing: PathBuf },
    /// Exact crossing number of a small graph.
    Exact {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long)]
        budget_seconds: Option<f64>,
        #[arg(long)]
        budget_calls: Option<u64>,
        /// Write the witness drawing here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Heuristic crossing minimization.
    Heuristic {
        graph: PathBuf,
        /// Start from this drawing; the result is never worse.
        #[arg(long)]
        seed: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        passes: usize,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Compare best drawings with n·m(m−1)/2 over a grid; resumable.
    Sweep {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        m_max: usize,
        #[arg(long)]
        per_cell_seconds: Option<f64>,
        #[arg(long, default_value_t = 2)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        #[arg(short, long)]
        output: PathBuf,
        /// Where counterexample witnesses go; defaults to the report's directory.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Section ledgers of a drawing of S_n □ K_1,2 or S_n □ K_1,3.
    Analyze {
        drawing: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Schematic SVG of a drawing file.
    Svg {
        drawing: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

enum Outcome {
    Ok,
    Invalid,
    Budget,
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::Invalid) => EXIT_INVALID,
        Ok(Outcome::Budget) => EXIT_BUDGET,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Usage(_) | Error::InvalidParameter(_) | Error::Io(_) => EXIT_USAGE,
                _ => EXIT_INVALID,
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Writes via a temporary file and rename so readers never see a partial file.
fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let tmp = path.with_extension(format!("{}.tmp", path.extension().and_then(|e| e.to_str()).unwrap_or("out")));
    std::fs::write(&tmp, text).map_err(|e| Error::Io(format!("{}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(())
}

fn default_budget() -> Result<Option<f64>> {
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .map(Some)
            .map_err(|_| Error::Usage(format!("{BUDGET_ENV} must be a number of seconds, got {s:?}"))),
        Err(_) => Ok(None),
    }
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| Error::Usage(format!("--{flag} is required for this family")))
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Gen { family, n, m, parts, output } => {
            let g = match family {
                Family::SunletStar => sunlet_star(need(n, "n")?, need(m, "m")?)?,
                Family::Sunlet => make_sunlet(need(n, "n")?)?,
                Family::Star => make_star(need(m, "m")?)?,
                Family::Path => make_path(need(n, "n")?)?,
                Family::Cycle => make_cycle(need(n, "n")?)?,
                Family::Complete => make_complete(need(n, "n")?)?,
                Family::Multipartite => make_complete_multipartite(&parts)?,
            };
            write_atomic(&output, &write_graph(&g))?;
            println!("vertices: {}, edges: {}", g.vertex_count(), g.edge_count());
            Ok(Outcome::Ok)
        }
        Command::Construct { n, m, ring, output, svg } => {
            let d = if ring { construct_ring_drawing(n, m)? } else { construct_sunlet_drawing(n, m)? };
            write_atomic(&output, &write_drawing(&d))?;
            if let Some(path) = svg {
                let geo = if ring { crate::construction::ring_geometry(n, m)? } else { sunlet_geometry(n, m)? };
                export_svg(SvgSource::Geometric(&geo), &path)?;
            }
            println!("crossings: {}", d.crossings.len());
            Ok(Outcome::Ok)
        }
        Command::Verify { drawing } => {
            let d = match read_drawing(&read(&drawing)?) {
                Ok(d) => d,
                Err(e) => {
                    println!("invalid: {e}");
                    return Ok(Outcome::Invalid);
                }
            };
            let report = validate_good_drawing(&d);
            if report.is_valid() {
                println!("crossings: {}, valid", d.crossings.len());
                Ok(Outcome::Ok)
            } else {
                println!("crossings: {}, invalid", d.crossings.len());
                for v in &report.violations {
                    println!("  {v}");
                }
                Ok(Outcome::Invalid)
            }
        }
        Command::Exact { graph, max_k, budget_seconds, budget_calls, output } => {
            let g = read_graph_or_drawing(&read(&graph)?)?;
            let seconds = match budget_seconds {
                Some(s) => Some(s),
                None => default_budget()?,
            };
            let budget = Budget { seconds, planarity_calls: budget_calls };
            let r = crossing_number_exact(&g, max_k, budget)?;
            eprintln!("planarity calls: {}, elapsed: {:.3}s", r.stats.planarity_calls, r.stats.elapsed.as_secs_f64());
            match r.status {
                ExactStatus::Solved { value, witness } => {
                    println!("cr = {value}");
                    if let Some(path) = output {
                        write_atomic(&path, &write_drawing(&witness))?;
                    }
                    Ok(Outcome::Ok)
                }
                ExactStatus::Unresolved { budget_exhausted } => {
                    println!("cr >= {} (unresolved)", r.stats.certified_lower_bound);
                    Ok(if budget_exhausted { Outcome::Budget } else { Outcome::Ok })
                }
            }
        }
        Command::Heuristic { graph, seed, passes, rng_seed, output } => {
            let g = read_graph_or_drawing(&read(&graph)?)?;
            let seed = match seed {
                Some(p) => Some(read_drawing(&read(&p)?)?),
                None => None,
            };
            let d = heuristic_minimize(&g, seed.as_ref(), passes, rng_seed)?;
            write_atomic(&output, &write_drawing(&d))?;
            println!("crossings: {}", d.crossings.len());
            Ok(Outcome::Ok)
        }
        Command::Sweep { n_max, m_max, per_cell_seconds, restarts, rng_seed, output, witness_dir } => {
            let seconds = match per_cell_seconds {
                Some(s) => s,
                None => default_budget()?.unwrap_or(60.0),
            };
            let witness_dir =
                witness_dir.or_else(|| output.parent().map(Path::to_path_buf)).unwrap_or_else(|| PathBuf::from("."));
            let params = SweepParams { n_max, m_max, per_cell_seconds: seconds, restarts, rng_seed };
            let report = run_sweep(&params, &output, &witness_dir)?;
            let cells = report["cells"].as_array().map_or(0, Vec::len);
            let matched = report["cells"].as_array().map_or(0, |c| c.iter().filter(|c| c["match"] == true).count());
            let exhausted =
                report["cells"].as_array().map_or(0, |c| c.iter().filter(|c| c["budget_exhausted"] == true).count());
            println!("cells: {cells}, matching upper bound: {matched}, budget exhausted: {exhausted}");
            Ok(Outcome::Ok)
        }
        Command::Analyze { drawing, output } => {
            let d = read_drawing(&read(&drawing)?)?;
            let report = validate_good_drawing(&d);
            if !report.is_valid() {
                return Err(Error::Validation(report.violations[0].to_string()));
            }
            let v = analysis_report(&d)?;
            let text = to_text(&v);
            match output {
                Some(p) => write_atomic(&p, &text)?,
                None => print!("{text}"),
            }
            Ok(Outcome::Ok)
        }
        Command::Svg { drawing, output } => {
            let d = read_drawing(&read(&drawing)?)?;
            export_svg(SvgSource::Combinatorial(&d), &output)?;
            Ok(Outcome::Ok)
        }
    }
}

fn terms_value(terms: &[LedgerTerm]) -> Value {
    Value::Array(terms.iter().map(|t| json!({ "left": t.left, "right": t.right, "value": t.value })).collect())
}

/// Section ledgers of a validated drawing as JSON.
pub fn analysis_report(d: &crate::drawing::CombinatorialDrawing) -> Result<Value> {
    let (n, m) = sunlet_star_params(&d.base)
        .ok_or_else(|| Error::Usage("analysis needs a drawing of sunlet_star(n, m)".into()))?;
    let mut sections = Vec::new();
    match m {
        2 => {
            for i in 0..n {
                let l = check_lemma_m2(d, i)?;
                sections.push(json!({
                    "i": i,
                    "literal": terms_value(&l.literal),
                    "literal_sum": l.literal_sum,
                    "symmetric": terms_value(&l.symmetric),
                    "symmetric_sum": l.symmetric_sum,
                    "holds": l.holds(),
                }));
            }
        }
        3 => {
            for i in 0..n {
                let l = check_lemma_m3(d, i)?;
                sections.push(json!({
                    "i": i,
                    "eq4": terms_value(&l.eq4),
                    "eq4_sum": l.eq4_sum,
                    "eq5": terms_value(&l.eq5),
                    "eq5_sum": l.eq5_sum,
                    "crossings_on_f": l.crossings_on_f,
                    "crossings_within_f": l.crossings_within_f,
                    "holds": l.holds(),
                }));
            }
        }
        _ => return Err(Error::Usage(format!("ledgers exist for m = 2 and m = 3, not m = {m}"))),
    }
    let mut v = json!({
        "format": ANALYSIS_FORMAT,
        "n": n,
        "m": m,
        "crossings": d.crossings.len(),
        "sections": sections,
    });
    if m == 3 {
        let h = check_f_hypothesis(d)?;
        v["f_hypothesis"] = json!({
            "per_section": h.per_section.iter().map(|&(i, c)| json!([i, c])).collect::<Vec<_>>(),
            "applies": h.applies,
            "bound_holds": h.bound_holds,
        });
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepParams {
    pub n_max: usize,
    pub m_max: usize,
    pub per_cell_seconds: f64,
    pub restarts: usize,
    pub rng_seed: u64,
}

fn params_value(p: &SweepParams) -> Value {
    json!({
        "n_max": p.n_max,
        "m_max": p.m_max,
        "per_cell_seconds": p.per_cell_seconds,
        "restarts": p.restarts,
        "rng_seed": p.rng_seed,
    })
}

fn cell_value(c: &SweepCell, witness_path: Option<&Path>) -> Value {
    let mut v = json!({
        "n": c.n,
        "m": c.m,
        "best": c.best,
        "upper_bound": c.upper_bound,
        "construction": c.construction,
        "heuristic": c.heuristic,
        "match": c.matches,
        "budget_exhausted": c.budget_exhausted,
    });
    if let Some(p) = witness_path {
        v["witness_path"] = json!(p.display().to_string());
    }
    v
}

fn report_value(p: &SweepParams, cells: &[Value]) -> Value {
    let mut cells = cells.to_vec();
    cells.sort_by_key(|c| (c["n"].as_u64(), c["m"].as_u64()));
    json!({ "format": SWEEP_FORMAT, "params": params_value(p), "cells": cells })
}

/// Runs the sweep, keeping cells already present in an existing report with
/// the same parameters, and rewriting the report after every cell.
pub fn run_sweep(p: &SweepParams, output: &Path, witness_dir: &Path) -> Result<Value> {
    if p.n_max < 3 || p.m_max < 1 {
        return Err(Error::Usage(format!("sweep needs n_max >= 3 and m_max >= 1, got ({},{})", p.n_max, p.m_max)));
    }
    let mut done: Vec<Value> = Vec::new();
    if output.exists() {
        let old = parse_text(&read(output)?)?;
        if old.get("format").and_then(Value::as_str) != Some(SWEEP_FORMAT) {
            return Err(Error::Format(format!("{} is not a sweep report", output.display())));
        }
        if old["params"] != params_value(p) {
            return Err(Error::Usage(format!(
                "{} was produced with different parameters; remove it or pass the same ones",
                output.display()
            )));
        }
        done = old["cells"].as_array().cloned().unwrap_or_default();
    }
    let have = |n: usize, m: usize, done: &[Value]| {
        done.iter().any(|c| c["n"].as_u64() == Some(n as u64) && c["m"].as_u64() == Some(m as u64))
    };
    let todo: Vec<(usize, usize)> =
        (3..=p.n_max).flat_map(|n| (1..=p.m_max).map(move |m| (n, m))).filter(|&(n, m)| !have(n, m, &done)).collect();
    let opts = SweepOptions { per_cell: Duration::from_secs_f64(p.per_cell_seconds), restarts: p.restarts };
    let shared = Mutex::new(done);
    write_atomic(output, &to_text(&report_value(p, &shared.lock().unwrap())))?;
    todo.par_iter().try_for_each(|&(n, m)| -> Result<()> {
        let cell = sweep_cell(n, m, opts, p.rng_seed)?;
        let witness_path = match &cell.witness {
            Some(w) => {
                let path = witness_dir.join(format!("witness_n{n}_m{m}.json"));
                write_atomic(&path, &write_drawing(w))?;
                Some(path)
            }
            None => None,
        };
        let mut cells = shared.lock().unwrap();
        cells.push(cell_value(&cell, witness_path.as_deref()));
        write_atomic(output, &to_text(&report_value(p, &cells)))
    })?;
    let cells = shared.into_inner().unwrap();
    Ok(report_value(p, &cells))
}

/// Graph files are read by `exact` and `heuristic`; exposed for tests.
pub fn load_graph(path: &Path) -> Result<Graph> {
    read_graph_or_drawing(&read(path)?)
}
