//! The `igraphs` command line.
//!
//! Targets are family specs (`path:N`, `cycle:N`, `bracelet:K`, `lattice:K`)
//! or the path of a graph JSON file. Exit codes: 0 success, 1 verification
//! failure, 2 usage or input error, 3 inconclusive search.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    are_isomorphic, construct_hamilton_path_6k1, forced_subcycle_certificate, hamiltonian_cycle,
    hamiltonian_path, HamiltonReport, HamiltonStatus, Obstruction, DEFAULT_BUDGET,
};
use crate::domination::{
    enumerate_isets, gap_profile, oracle_count_isets, GapMode, ORACLE_MAX_ORDER,
};
use crate::error::{Error, Result};
use crate::families::{
    bracelet, count_cycle_isets, count_path_isets, cycle_iset_label, label_to_iset,
    predicted_cycle_igraph, predicted_path_igraph, worn_lattice,
};
use crate::graph::{cycle, path, Graph};
use crate::reconfig::{build_igraph, IGraph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Largest sweep bound accepted without `--allow-large`.
pub const SWEEP_GUARD: usize = 22;

#[derive(Debug, Parser)]
#[command(
    name = "igraphs",
    version,
    about = "i-graphs of paths, cycles and other small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the i-graph of a target as JSON.
    Build { target: String },
    /// Check closed-form counts and predicted i-graphs against exhaustive computation.
    Verify {
        #[arg(long, default_value_t = 21)]
        paths_max: usize,
        #[arg(long, default_value_t = 22)]
        cycles_max: usize,
        /// Permit sweep bounds above 22.
        #[arg(long)]
        allow_large: bool,
        /// Also write the report as JSON to this file.
        #[arg(long, value_name = "FILE")]
        json: Option<std::path::PathBuf>,
    },
    /// Decide Hamiltonicity of the i-graph of a target.
    Hamilton {
        target: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Analyse the target graph itself instead of its i-graph.
        #[arg(long)]
        direct: bool,
        /// Only decide whether a Hamiltonian path exists.
        #[arg(long)]
        path_only: bool,
    },
    /// Write the i-graph of a seed target, or a bracelet or lattice itself.
    Export {
        target: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long, value_enum, default_value_t = LabelMode::Isets)]
        labels: LabelMode,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LabelMode {
    /// Each vertex shows its i-set.
    Isets,
    /// Pair names: lattice positions for paths, doubly dominated vertices for cycles.
    Pairs,
    /// No labels.
    Indices,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Path,
    Cycle,
    Bracelet,
    Lattice,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Target {
    Family(Family, usize),
    File(String),
}

impl Target {
    fn parse(text: &str) -> Result<Target> {
        let Some((name, param)) = text.split_once(':') else {
            return Ok(Target::File(text.to_string()));
        };
        let family = match name {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "bracelet" => Family::Bracelet,
            "lattice" => Family::Lattice,
            _ => return Ok(Target::File(text.to_string())),
        };
        let n = param.parse().map_err(|_| {
            Error::InvalidParameter(format!("'{param}' is not a non-negative integer"))
        })?;
        Ok(Target::Family(family, n))
    }

    fn graph(&self) -> Result<Graph> {
        match *self {
            Target::Family(Family::Path, n) => path(n),
            Target::Family(Family::Cycle, n) => cycle(n),
            Target::Family(Family::Bracelet, k) => bracelet(k),
            Target::Family(Family::Lattice, k) => worn_lattice(k),
            Target::File(ref file) => {
                let text = std::fs::read_to_string(file)
                    .map_err(|e| Error::InvalidParameter(format!("cannot read {file}: {e}")))?;
                Graph::from_json(&text)
            }
        }
    }

    fn is_seed(&self) -> bool {
        !matches!(self, Target::Family(Family::Bracelet | Family::Lattice, _))
    }
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        Command::Build { target } => cmd_build(&target, out),
        Command::Verify {
            paths_max,
            cycles_max,
            allow_large,
            json,
        } => cmd_verify(paths_max, cycles_max, allow_large, json.as_deref(), out),
        Command::Hamilton {
            target,
            budget,
            direct,
            path_only,
        } => cmd_hamilton(&target, budget, direct, path_only, out, err),
        Command::Export {
            target,
            format,
            labels,
        } => cmd_export(&target, format, labels, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<i32> {
    writeln!(out, "{text}")
        .map_err(|e| Error::InvalidParameter(format!("cannot write output: {e}")))?;
    Ok(EXIT_OK)
}

fn cmd_build(target: &str, out: &mut dyn Write) -> Result<i32> {
    let g = Target::parse(target)?.graph()?;
    emit(out, &build_igraph(&g)?.to_json())
}

/// Pair labels for the i-sets of `P_{3k+1}` and `C_{3k+1}`.
fn pair_labels(ig: &IGraph, target: &Target) -> Result<Vec<String>> {
    let unsupported = || {
        Error::InvalidParameter(
            "pair labels exist for path:N and cycle:N with N = 1 (mod 3)".into(),
        )
    };
    match *target {
        Target::Family(Family::Path, n) if n % 3 == 1 => ig
            .isets
            .iter()
            .map(|&s| {
                let small = gap_profile(&ig.seed, s, GapMode::Linear)?.small_indices();
                Ok(format!("({},{})", small[0] + 1, small[1] + 1))
            })
            .collect(),
        Target::Family(Family::Cycle, n) if n % 3 == 1 => ig
            .isets
            .iter()
            .map(|&s| {
                let (j, l) = cycle_iset_label(n, s)?.pair();
                Ok(format!("{{{j},{l}}}"))
            })
            .collect(),
        _ => Err(unsupported()),
    }
}

fn cmd_export(target: &str, format: Format, labels: LabelMode, out: &mut dyn Write) -> Result<i32> {
    let parsed = Target::parse(target)?;
    let g = parsed.graph()?;
    if !parsed.is_seed() {
        let g = match labels {
            LabelMode::Indices => g.without_labels(),
            _ => g,
        };
        return emit(
            out,
            match format {
                Format::Dot => g.to_dot(),
                Format::Json => g.to_json(),
            }
            .trim_end(),
        );
    }
    let ig = build_igraph(&g)?;
    let ig = match labels {
        LabelMode::Isets => ig,
        LabelMode::Indices => ig.relabeled(None)?,
        LabelMode::Pairs => {
            let names = pair_labels(&ig, &parsed)?;
            ig.relabeled(Some(names))?
        }
    };
    emit(
        out,
        match format {
            Format::Dot => ig.graph.to_dot(),
            Format::Json => ig.to_json(),
        }
        .trim_end(),
    )
}

/// Classification of the i-graph of `C_n` by its closed form.
pub fn predicted_cycle_status(n: usize) -> Result<HamiltonStatus> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycles start at n = 3, got {n}"
        )));
    }
    Ok(match n % 6 {
        _ if n == 3 || n % 3 == 2 => HamiltonStatus::Hamiltonian,
        0 | 3 => HamiltonStatus::Neither,
        4 => HamiltonStatus::Neither,
        _ if n <= 13 => HamiltonStatus::Hamiltonian,
        _ => HamiltonStatus::TraceableOnly,
    })
}

/// For `C_{6k+1}`, `k >= 3`, the constructed Hamiltonian path of the
/// i-graph, translated to i-graph vertex indices.
fn constructed_path(ig: &IGraph, n: usize) -> Result<Vec<usize>> {
    let labels = construct_hamilton_path_6k1((n - 1) / 6)?;
    labels
        .into_iter()
        .map(|l| {
            let s = label_to_iset(n, l)?;
            ig.position(s)
                .ok_or_else(|| Error::Construction(format!("{l} names no i-set of C_{n}")))
        })
        .collect()
}

fn cmd_hamilton(
    target: &str,
    budget: u64,
    direct: bool,
    path_only: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let parsed = Target::parse(target)?;
    let seed = parsed.graph()?;
    let ig = if direct {
        None
    } else {
        Some(build_igraph(&seed)?)
    };
    let g = ig.as_ref().map_or(&seed, |ig| &ig.graph);

    let cycle_n = match (&parsed, &ig) {
        (Target::Family(Family::Cycle, n), Some(_)) => Some(*n),
        _ => None,
    };
    let report = match (cycle_n, &ig) {
        (Some(n), Some(ig)) if !path_only && n % 6 == 1 && n >= 19 => {
            match forced_subcycle_certificate(g) {
                Some(vertices) => HamiltonReport {
                    status: HamiltonStatus::TraceableOnly,
                    witness: Some(constructed_path(ig, n)?),
                    obstruction: Some(Obstruction::ForcedSubcycle { vertices }),
                    steps: 0,
                },
                None => hamiltonian_cycle(g, budget),
            }
        }
        _ if path_only => hamiltonian_path(g, budget),
        _ => hamiltonian_cycle(g, budget),
    };
    if !report.verify(g) {
        let _ = writeln!(err, "error: report failed its own witness check");
        return Ok(EXIT_FAILED);
    }
    emit(out, &report.to_json())?;

    if report.status == HamiltonStatus::Unknown {
        let _ = writeln!(err, "inconclusive: step budget of {budget} exhausted");
        return Ok(EXIT_INCONCLUSIVE);
    }
    if let (Some(n), false) = (cycle_n, path_only) {
        let predicted = predicted_cycle_status(n)?;
        let name = |s: HamiltonStatus| serde_json::to_string(&s).expect("statuses serialize");
        let _ = writeln!(
            err,
            "predicted for C_{n}: {}",
            name(predicted).trim_matches('"')
        );
        if predicted != report.status {
            let _ = writeln!(
                err,
                "disagreement: computed {}",
                name(report.status).trim_matches('"')
            );
            return Ok(EXIT_FAILED);
        }
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepFamily {
    Path,
    Cycle,
}

/// One verified `n` of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub family: SweepFamily,
    pub n: usize,
    pub closed_form: u128,
    pub enumerated: usize,
    pub oracle: usize,
    pub isomorphic: bool,
    #[serde(skip)]
    pub millis: u128,
}

impl VerifyRow {
    pub fn passed(&self) -> bool {
        self.isomorphic
            && self.closed_form == self.enumerated as u128
            && self.closed_form == self.oracle as u128
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
    pub summary: VerifySummary,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn table(&self) -> String {
        let mut s =
            String::from("family   n  closed  enumerated   oracle  isomorphic      ms  result\n");
        for r in &self.rows {
            let family = match r.family {
                SweepFamily::Path => "path",
                SweepFamily::Cycle => "cycle",
            };
            let _ = writeln!(
                s,
                "{family:<6} {:>3} {:>7} {:>11} {:>8} {:>11} {:>7}  {}",
                r.n,
                r.closed_form,
                r.enumerated,
                r.oracle,
                if r.isomorphic { "yes" } else { "no" },
                r.millis,
                if r.passed() { "pass" } else { "FAIL" },
            );
        }
        let _ = write!(
            s,
            "{} passed, {} failed",
            self.summary.passed, self.summary.failed
        );
        s
    }
}

fn verify_row(family: SweepFamily, n: usize) -> Result<VerifyRow> {
    let start = Instant::now();
    let (g, closed_form, predicted) = match family {
        SweepFamily::Path => (path(n)?, count_path_isets(n)?, predicted_path_igraph(n)?),
        SweepFamily::Cycle => (cycle(n)?, count_cycle_isets(n)?, predicted_cycle_igraph(n)?),
    };
    let enumerated = enumerate_isets(&g)?.len();
    let oracle = oracle_count_isets(&g)?;
    let built = build_igraph(&g)?;
    let isomorphic = are_isomorphic(&built.graph, &predicted)?.is_some();
    Ok(VerifyRow {
        family,
        n,
        closed_form,
        enumerated,
        oracle,
        isomorphic,
        millis: start.elapsed().as_millis(),
    })
}

/// Runs the sweep over `P_1 ..= P_paths_max` and `C_3 ..= C_cycles_max`.
/// A bound of 0 skips that family.
pub fn verify_sweep(paths_max: usize, cycles_max: usize) -> Result<VerifyReport> {
    if (1..3).contains(&cycles_max) {
        return Err(Error::InvalidParameter(format!(
            "cycles start at n = 3, got --cycles-max {cycles_max}"
        )));
    }
    let largest = paths_max.max(cycles_max);
    if largest > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge {
            order: largest,
            limit: ORACLE_MAX_ORDER,
        });
    }
    let jobs: Vec<(SweepFamily, usize)> = (1..=paths_max)
        .map(|n| (SweepFamily::Path, n))
        .chain((3..=cycles_max).map(|n| (SweepFamily::Cycle, n)))
        .collect();
    let rows = jobs
        .into_par_iter()
        .map(|(family, n)| verify_row(family, n))
        .collect::<Result<Vec<_>>>()?;
    let passed = rows.iter().filter(|r| r.passed()).count();
    let failed = rows.len() - passed;
    Ok(VerifyReport {
        rows,
        summary: VerifySummary { passed, failed },
    })
}

fn cmd_verify(
    paths_max: usize,
    cycles_max: usize,
    allow_large: bool,
    json: Option<&std::path::Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    if !allow_large && paths_max.max(cycles_max) > SWEEP_GUARD {
        return Err(Error::InvalidParameter(format!(
            "sweep bounds above {SWEEP_GUARD} need --allow-large"
        )));
    }
    let report = verify_sweep(paths_max, cycles_max)?;
    emit(out, &report.table())?;
    if let Some(file) = json {
        let text = serde_json::to_string_pretty(&report).expect("reports always serialize");
        std::fs::write(file, text + "\n").map_err(|e| {
            Error::InvalidParameter(format!("cannot write {}: {e}", file.display()))
        })?;
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}
