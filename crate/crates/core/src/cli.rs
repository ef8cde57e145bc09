//! `twdp` command line: `solve`, `verify` and `bench`.
//!
//! Exit codes: 0 when the treewidth is exact (or a verified order is
//! valid), 2 when only a lower bound was established, 1 on any error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::decomposition::tree_decomposition_from_order;
use crate::dp::{solve, DedupMode, SolveConfig, Status};
use crate::error::Result;
use crate::graph::Graph;
use crate::io::{parse_graph, parse_order, write_order, GraphFormat};
use crate::preprocess::SplitLevel;
use crate::report::{bench_table, RunReport};

pub const EXIT_EXACT: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_BOUND_ONLY: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "twdp",
    version,
    about = "Exact treewidth by layered elimination-order DP"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the treewidth of one instance.
    Solve {
        input: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
        /// Write the elimination order (1-indexed) to this file.
        #[arg(long)]
        order_out: Option<PathBuf>,
        /// Write the JSON run report to this file.
        #[arg(long)]
        stats_out: Option<PathBuf>,
    },
    /// Check an elimination order and its derived tree decomposition.
    Verify { graph: PathBuf, order: PathBuf },
    /// Solve every .gr/.col file of a directory and print a summary table.
    Bench {
        dir: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
        /// Write all JSON run reports (as an array) to this file.
        #[arg(long)]
        stats_out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Gr,
    Dimacs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DedupArg {
    Bloom,
    Exact,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SplitArg {
    Whole,
    Connected,
    Biconnected,
}

#[derive(Args, Debug, Clone)]
struct SolveOpts {
    /// Input format; inferred from the `p` line when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Prune states with the minor-min-width lower bound.
    #[arg(long)]
    mmw: bool,
    /// Duplicate detection for layer states.
    #[arg(long, value_enum, default_value = "bloom")]
    dedup: DedupArg,
    /// Bloom filter bits per expected state (default 24).
    #[arg(long)]
    bloom_bits: Option<usize>,
    /// Bloom filter probes per key (default 17).
    #[arg(long)]
    bloom_hashes: Option<usize>,
    /// States kept per layer; further states are dropped.
    #[arg(long, default_value_t = 10_000_000)]
    max_layer_states: usize,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    threads: Option<usize>,
    /// Do not add edges between pairs joined by more than k disjoint paths.
    #[arg(long)]
    no_improvement: bool,
    /// Do not hold a maximum clique back for the end of the order.
    #[arg(long)]
    no_clique: bool,
    /// First k to try, replacing the computed lower bound.
    #[arg(long)]
    start_k: Option<usize>,
    /// Solve the pieces of this split independently.
    #[arg(long, value_enum, default_value = "biconnected")]
    split: SplitArg,
}

impl SolveOpts {
    fn format(&self) -> Option<GraphFormat> {
        self.format.map(|f| match f {
            FormatArg::Gr => GraphFormat::PaceGr,
            FormatArg::Dimacs => GraphFormat::DimacsCol,
        })
    }

    fn config(&self, emit_order: bool, err: &mut dyn Write) -> SolveConfig {
        let defaults = SolveConfig::default();
        let dedup = match self.dedup {
            DedupArg::Exact => {
                if self.bloom_bits.is_some() || self.bloom_hashes.is_some() {
                    let _ = writeln!(
                        err,
                        "warning: --bloom-bits/--bloom-hashes ignored with --dedup exact"
                    );
                }
                DedupMode::ExactSet
            }
            DedupArg::Bloom => match defaults.dedup {
                DedupMode::Bloom {
                    bits_per_element,
                    num_hashes,
                } => DedupMode::Bloom {
                    bits_per_element: self.bloom_bits.unwrap_or(bits_per_element),
                    num_hashes: self.bloom_hashes.unwrap_or(num_hashes),
                },
                DedupMode::ExactSet => unreachable!(),
            },
        };
        SolveConfig {
            max_layer_states: self.max_layer_states,
            use_mmw: self.mmw,
            dedup,
            thread_count: self.threads.unwrap_or(defaults.thread_count),
            starting_k_override: self.start_k,
            emit_order,
            clique_suffix: !self.no_clique,
            improve_edges: !self.no_improvement,
            split: match self.split {
                SplitArg::Whole => SplitLevel::Whole,
                SplitArg::Connected => SplitLevel::Connected,
                SplitArg::Biconnected => SplitLevel::Biconnected,
            },
        }
    }
}

/// Runs the command line with `args` (including the program name) and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_ERROR;
            }
            let _ = write!(out, "{e}");
            return EXIT_EXACT;
        }
    };
    let result = match cli.command {
        Command::Solve {
            input,
            opts,
            order_out,
            stats_out,
        } => cmd_solve(
            &input,
            &opts,
            order_out.as_deref(),
            stats_out.as_deref(),
            out,
            err,
        ),
        Command::Verify { graph, order } => cmd_verify(&graph, &order, out),
        Command::Bench {
            dir,
            opts,
            stats_out,
        } => cmd_bench(&dir, &opts, stats_out.as_deref(), out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load(path: &Path, format: Option<GraphFormat>) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    parse_graph(&text, format)
}

fn exit_code(status: Status) -> i32 {
    match status {
        Status::Exact(_) => EXIT_EXACT,
        Status::LowerBoundOnly(_) | Status::Indeterminate => EXIT_BOUND_ONLY,
    }
}

fn solve_one(
    path: &Path,
    opts: &SolveOpts,
    emit_order: bool,
    err: &mut dyn Write,
) -> Result<(RunReport, Option<String>)> {
    let g = load(path, opts.format())?;
    let cfg = opts.config(emit_order, err);
    let started = Instant::now();
    let result = solve(&g, &cfg)?;
    let report = RunReport::new(
        &instance_name(path),
        &g,
        &result,
        &cfg,
        started.elapsed().as_secs_f64(),
    );
    Ok((report, result.order.as_ref().map(write_order)))
}

fn cmd_solve(
    input: &Path,
    opts: &SolveOpts,
    order_out: Option<&Path>,
    stats_out: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let (report, order) = solve_one(input, opts, order_out.is_some(), err)?;
    writeln!(
        out,
        "c instance {} n={} m={}",
        report.instance, report.n, report.m
    )?;
    for line in report.table().lines() {
        writeln!(out, "c {line}")?;
    }
    writeln!(
        out,
        "c expanded {} in {:.3}s",
        report.expanded, report.wall_secs
    )?;
    writeln!(out, "{}", report.headline())?;
    if let Some(path) = order_out {
        match order {
            Some(order) => fs::write(path, order)?,
            None => writeln!(err, "warning: no order written (treewidth is not exact)")?,
        }
    }
    if let Some(path) = stats_out {
        fs::write(path, report.to_json())?;
    }
    Ok(exit_code(report.status))
}

fn cmd_verify(graph: &Path, order: &Path, out: &mut dyn Write) -> Result<i32> {
    let g = load(graph, None)?;
    let order = parse_order(&fs::read_to_string(order)?, g.n())?;
    let width = g.order_width(&order)?;
    writeln!(out, "width = {width}")?;
    let td = tree_decomposition_from_order(&g, &order);
    match td.validate(&g) {
        Ok(w) if w == width => {
            writeln!(
                out,
                "tree decomposition: valid ({} bags, width {w})",
                td.bags.len()
            )?;
            Ok(EXIT_EXACT)
        }
        Ok(w) => {
            writeln!(
                out,
                "tree decomposition: width {w} differs from order width {width}"
            )?;
            Ok(EXIT_ERROR)
        }
        Err(msg) => {
            writeln!(out, "tree decomposition: invalid ({msg})")?;
            Ok(EXIT_ERROR)
        }
    }
}

fn cmd_bench(
    dir: &Path,
    opts: &SolveOpts,
    stats_out: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("gr" | "col")))
        .collect();
    files.sort();
    let mut reports = Vec::new();
    for path in &files {
        match solve_one(path, opts, false, err) {
            Ok((report, _)) => reports.push(report),
            Err(e) => writeln!(err, "{}: error: {e}", path.display())?,
        }
    }
    write!(out, "{}", bench_table(&reports))?;
    if let Some(path) = stats_out {
        let mut doc = serde_json::to_string_pretty(&reports).expect("reports serialize");
        doc.push('\n');
        fs::write(path, doc)?;
    }
    Ok(EXIT_EXACT)
}
