//! Run reports: a JSON document for machines and a table for people.
//!
//! The JSON document leaves out wall-clock times and the thread count, so
//! two runs with the same flags and exact deduplication write identical
//! bytes.

use std::fmt::Write as _;

use serde::Serialize;

use crate::dp::{SolveConfig, SolveResult, Status};
use crate::graph::Graph;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct KRow {
    pub component: usize,
    pub k: usize,
    pub decision: String,
    pub layers: usize,
    pub expanded: usize,
    pub emitted: usize,
    pub duplicates: usize,
    pub mmw_pruned: usize,
    pub dropped: usize,
    pub overflowed: bool,
    #[serde(skip)]
    pub wall_secs: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub status: Status,
    pub treewidth: Option<usize>,
    pub lower_bound: Option<usize>,
    pub expanded: usize,
    pub components: Vec<usize>,
    pub per_k: Vec<KRow>,
    pub config: SolveConfig,
    #[serde(skip)]
    pub wall_secs: f64,
}

impl RunReport {
    pub fn new(
        instance: &str,
        g: &Graph,
        result: &SolveResult,
        cfg: &SolveConfig,
        wall_secs: f64,
    ) -> Self {
        let mut per_k = Vec::new();
        for (ci, comp) in result.stats.components.iter().enumerate() {
            for ks in &comp.per_k {
                per_k.push(KRow {
                    component: ci,
                    k: ks.k,
                    decision: ks.decision.clone(),
                    layers: ks.layers.len(),
                    expanded: ks.totals.expanded,
                    emitted: ks.totals.emitted,
                    duplicates: ks.totals.duplicates,
                    mmw_pruned: ks.totals.mmw_pruned,
                    dropped: ks.totals.dropped,
                    overflowed: ks.overflowed,
                    wall_secs: ks.wall_secs,
                });
            }
        }
        let (treewidth, lower_bound) = match result.status {
            Status::Exact(t) => (Some(t), None),
            Status::LowerBoundOnly(lb) => (None, Some(lb)),
            Status::Indeterminate => (None, None),
        };
        RunReport {
            schema: SCHEMA_VERSION,
            instance: instance.to_string(),
            n: g.n(),
            m: g.edge_count(),
            status: result.status,
            treewidth,
            lower_bound,
            expanded: result.stats.total_expanded(),
            components: result.stats.components.iter().map(|c| c.n).collect(),
            per_k,
            config: cfg.clone(),
            wall_secs,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One-line result, as printed by `solve`.
    pub fn headline(&self) -> String {
        match self.status {
            Status::Exact(t) => format!("treewidth = {t}"),
            Status::LowerBoundOnly(lb) => format!("treewidth >= {lb} (capacity exceeded)"),
            Status::Indeterminate => "treewidth unknown (capacity exceeded)".to_string(),
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>4} {:>4} {:>13} {:>7} {:>12} {:>12} {:>12} {:>10} {:>9} {:>9}",
            "comp",
            "k",
            "decision",
            "layers",
            "expanded",
            "emitted",
            "duplicates",
            "mmw-pruned",
            "overflow",
            "secs"
        );
        for r in &self.per_k {
            let _ = writeln!(
                out,
                "{:>4} {:>4} {:>13} {:>7} {:>12} {:>12} {:>12} {:>10} {:>9} {:>9.3}",
                r.component,
                r.k,
                r.decision,
                r.layers,
                r.expanded,
                r.emitted,
                r.duplicates,
                r.mmw_pruned,
                if r.overflowed { "yes" } else { "no" },
                r.wall_secs
            );
        }
        out
    }
}

/// Aggregate table with one row per instance: name, |V|, tw, time, Exp.
/// A `*` marks instances where some layer overflowed.
pub fn bench_table(reports: &[RunReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<36} {:>4} {:>6} {:>10} {:>14}",
        "Name", "|V|", "tw", "Time (s)", "Exp"
    );
    for r in reports {
        let overflowed = r.per_k.iter().any(|k| k.overflowed);
        let name = if overflowed {
            format!("{}*", r.instance)
        } else {
            r.instance.clone()
        };
        let tw = match r.status {
            Status::Exact(t) => t.to_string(),
            Status::LowerBoundOnly(lb) => format!(">={lb}"),
            Status::Indeterminate => "?".into(),
        };
        let _ = writeln!(
            out,
            "{:<36} {:>4} {:>6} {:>10.3} {:>14}",
            name, r.n, tw, r.wall_secs, r.expanded
        );
    }
    out
}
