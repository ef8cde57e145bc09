//! Acceptance run: one line per criterion. Run with
//! `cargo test -p treewidth-dp --test acceptance -- --nocapture`.

mod common;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use common::{bloom_config, exact_config, load_instance, random_graph};
use treewidth_dp::bloom::{theoretical_fp_rate, BloomParams, ConcurrentBloom};
use treewidth_dp::cli;
use treewidth_dp::decomposition::tree_decomposition_from_order;
use treewidth_dp::oracle::{treewidth_by_permutations, OracleBudget};
use treewidth_dp::{solve, solve_observed, EliminationOrder, Graph, SolveConfig, Status};

const REGRESSION: [(&str, usize); 5] = [
    ("water.gr", 9),
    ("myciel4.col", 10),
    ("McGeeGraph.gr", 7),
    ("queen5_5.gr", 18),
    ("queen6_6.gr", 25),
];

struct Outcome {
    id: &'static str,
    title: &'static str,
    pass: bool,
    gating: bool,
    detail: String,
}

struct Report {
    outcomes: Vec<Outcome>,
}

impl Report {
    fn record(
        &mut self,
        id: &'static str,
        title: &'static str,
        gating: bool,
        pass: bool,
        detail: String,
    ) {
        let tag = match (pass, gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "FAIL (soft)",
        };
        println!("[{tag}] {id}. {title}: {detail}");
        self.outcomes.push(Outcome {
            id,
            title,
            pass,
            gating,
            detail,
        });
    }
}

fn random_corpus() -> Vec<(u64, Graph)> {
    (0..200u64)
        .map(|seed| {
            let n = 4 + (seed as usize % 7);
            let p = [0.2, 0.4, 0.6][(seed as usize / 7) % 3];
            (seed, random_graph(seed, n, p))
        })
        .collect()
}

fn oracle(g: &Graph) -> usize {
    treewidth_by_permutations(g, &OracleBudget::default()).unwrap()
}

fn from_zero(cfg: SolveConfig) -> SolveConfig {
    SolveConfig {
        starting_k_override: Some(0),
        ..cfg
    }
}

fn threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn witness_ok(g: &Graph, tw: usize, order: Option<&EliminationOrder>) -> Result<(), String> {
    let order = order.ok_or("no order")?;
    let width = g.order_width(order).map_err(|e| e.to_string())?;
    if width != tw {
        return Err(format!("order width {width}, treewidth {tw}"));
    }
    match tree_decomposition_from_order(g, order).validate(g) {
        Ok(w) if w == tw => Ok(()),
        Ok(w) => Err(format!("decomposition width {w}, treewidth {tw}")),
        Err(e) => Err(e),
    }
}

fn regression(report: &mut Report, witnesses: &mut Vec<String>) {
    let started = Instant::now();
    let mut parts = Vec::new();
    let mut pass = true;
    for (file, expected) in REGRESSION {
        let g = load_instance(file);
        let t = Instant::now();
        let result = solve(&g, &bloom_config(threads())).unwrap();
        let ok = result.status == Status::Exact(expected);
        pass &= ok;
        parts.push(format!(
            "{file}={:?} ({:.1}s){}",
            result.status,
            t.elapsed().as_secs_f64(),
            if ok { "" } else { " MISMATCH" }
        ));
        if let Status::Exact(tw) = result.status {
            if let Err(e) = witness_ok(&g, tw, result.order.as_ref()) {
                witnesses.push(format!("{file}: {e}"));
            }
        }
    }
    report.record(
        "1",
        "treewidth regression",
        true,
        pass,
        format!(
            "{} in {:.1}s",
            parts.join(", "),
            started.elapsed().as_secs_f64()
        ),
    );
}

fn expanded_proximity(report: &mut Report) {
    let targets = [("water.gr", 1_240usize), ("queen5_5.gr", 3_134)];
    let mut parts = Vec::new();
    let mut pass = true;
    for (file, reference) in targets {
        let g = load_instance(file);
        let result = solve(&g, &from_zero(exact_config(threads()))).unwrap();
        let got = result.stats.total_expanded();
        let ratio = got as f64 / reference as f64;
        let ok = (0.5..=2.0).contains(&ratio);
        pass &= ok;
        parts.push(format!("{file} {got} vs {reference} (x{ratio:.2})"));
    }
    let mut detail = parts.join(", ");
    if !pass {
        detail.push_str(
            "; the water reference count belongs to a 21-vertex variant of the network, \
             the bundled instance has 32 vertices (see README)",
        );
    }
    report.record("2", "expanded-state proximity", false, pass, detail);
}

fn oracle_equivalence(report: &mut Report, witnesses: &mut Vec<String>) {
    let started = Instant::now();
    let mut exact_bad = Vec::new();
    let mut bloom_bad = Vec::new();
    for (seed, g) in random_corpus() {
        let tw = oracle(&g);
        let exact = solve(&g, &exact_config(threads())).unwrap();
        if exact.status != Status::Exact(tw) {
            exact_bad.push(seed);
        } else if let Err(e) = witness_ok(&g, tw, exact.order.as_ref()) {
            witnesses.push(format!("random seed {seed}: {e}"));
        }
        let bloom = solve(&g, &bloom_config(threads())).unwrap();
        if bloom.status != Status::Exact(tw) {
            bloom_bad.push(seed);
        } else if let Err(e) = witness_ok(&g, tw, bloom.order.as_ref()) {
            witnesses.push(format!("random seed {seed} (bloom): {e}"));
        }
    }
    report.record(
        "3",
        "oracle equivalence",
        true,
        exact_bad.is_empty() && bloom_bad.is_empty(),
        format!(
            "200 graphs, exact mismatches {exact_bad:?}, bloom mismatches {bloom_bad:?}, {:.1}s",
            started.elapsed().as_secs_f64()
        ),
    );
}

fn mmw_effect(report: &mut Report) {
    let started = Instant::now();
    let with_mmw = |cfg: SolveConfig| SolveConfig {
        use_mmw: true,
        ..cfg
    };
    let mut changed = Vec::new();
    for (file, expected) in REGRESSION {
        let g = load_instance(file);
        let status = solve(&g, &with_mmw(bloom_config(threads())))
            .unwrap()
            .status;
        if status != Status::Exact(expected) {
            changed.push(format!("{file}: {status:?}"));
        }
    }
    for (seed, g) in random_corpus() {
        let status = solve(&g, &with_mmw(exact_config(threads())))
            .unwrap()
            .status;
        if status != Status::Exact(oracle(&g)) {
            changed.push(format!("seed {seed}: {status:?}"));
        }
    }
    let g = load_instance("myciel4.col");
    let plain = solve(&g, &from_zero(exact_config(threads()))).unwrap();
    let pruned = solve(&g, &with_mmw(from_zero(exact_config(threads())))).unwrap();
    let (a, b) = (plain.stats.total_expanded(), pruned.stats.total_expanded());
    let reduction = 1.0 - b as f64 / a as f64;
    report.record(
        "4",
        "MMW soundness and effect",
        true,
        changed.is_empty() && reduction >= 0.10 && plain.status == pruned.status,
        format!(
            "changed results {changed:?}; myciel4 expanded {a} -> {b} ({:.1}% fewer); {:.1}s",
            100.0 * reduction,
            started.elapsed().as_secs_f64()
        ),
    );
}

fn bloom_statistics(report: &mut Report) {
    let started = Instant::now();
    let params = BloomParams {
        bits_per_element: 24,
        num_hashes: 17,
        capacity: 100_000,
    };
    let filter = ConcurrentBloom::new(params);
    let key = |i: u64| i.wrapping_mul(0x9E37_79B9_7F4A_7C15).to_le_bytes();
    for i in 0..100_000u64 {
        filter.insert_and_check(&key(i));
    }
    let probes = 1_000_000u64;
    let hits = (100_000..100_000 + probes)
        .filter(|&i| filter.contains(&key(i)))
        .count();
    let measured = hits as f64 / probes as f64;
    let formula = theoretical_fp_rate(&params, 100_000);
    let ratio = measured / formula;
    let fp_ok = (0.3..=3.0).contains(&ratio);

    let mut once_ok = true;
    for round in 0..50u64 {
        let filter = ConcurrentBloom::new(BloomParams::new(1000));
        let fresh = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            for t in 0..8u64 {
                let (filter, fresh) = (&filter, &fresh);
                scope.spawn(move || {
                    for j in 0..1000u64 {
                        let i = (j * 7 + t * 131 + round) % 1000;
                        if filter.insert_and_check(&key(i)) {
                            fresh.fetch_add(1, Ordering::Relaxed);
                        }
                    }
                });
            }
        });
        once_ok &= fresh.load(Ordering::Relaxed) == 1000;
    }
    report.record(
        "5",
        "Bloom filter statistics",
        true,
        fp_ok && once_ok,
        format!(
            "false-positive rate {measured:.3e} vs formula {formula:.3e} (x{ratio:.2}); \
             exactly-once under 8 threads x 50 rounds: {}; {:.1}s",
            if once_ok { "held" } else { "violated" },
            started.elapsed().as_secs_f64()
        ),
    );
}

fn witness_validity(report: &mut Report, mut problems: Vec<String>) {
    let dir = tempfile::tempdir().unwrap();
    for (file, expected) in [("water.gr", 9), ("queen5_5.gr", 18), ("myciel4.col", 10)] {
        let graph = common::instances_dir().join(file);
        let order = dir.path().join(format!("{file}.order"));
        let (graph, order) = (graph.to_str().unwrap(), order.to_str().unwrap());
        let mut out = Vec::new();
        let code = cli::run(
            ["twdp", "solve", graph, "--order-out", order],
            &mut out,
            &mut Vec::new(),
        );
        if code != cli::EXIT_EXACT {
            problems.push(format!("{file}: solve exit {code}"));
            continue;
        }
        out.clear();
        let code = cli::run(["twdp", "verify", graph, order], &mut out, &mut Vec::new());
        let text = String::from_utf8(out).unwrap();
        if code != cli::EXIT_EXACT || !text.contains(&format!("width = {expected}\n")) {
            problems.push(format!("{file}: verify exit {code}: {}", text.trim()));
        }
    }
    report.record(
        "6",
        "witness validity",
        true,
        problems.is_empty(),
        if problems.is_empty() {
            "every exact result of criteria 1 and 3 has a valid order and decomposition; \
             CLI solve/verify round trip on 3 instances"
                .into()
        } else {
            problems.join("; ")
        },
    );
}

fn determinism(report: &mut Report) {
    let started = Instant::now();
    let mut differing = Vec::new();
    let mut layers_compared = 0;
    for file in ["water.gr", "myciel4.col", "queen5_5.gr"] {
        let g = load_instance(file);
        let record = |threads: usize| {
            let mut layers = Vec::new();
            solve_observed(&g, &exact_config(threads), &mut |ev| {
                layers.push((ev.component, ev.k, ev.layer, ev.list.sorted_sets()));
            })
            .unwrap();
            layers
        };
        let base = record(1);
        layers_compared += base.len();
        for threads in [2, 4] {
            if record(threads) != base {
                differing.push(format!("{file} at {threads} threads"));
            }
        }
    }
    report.record(
        "7",
        "determinism",
        true,
        differing.is_empty(),
        format!(
            "{layers_compared} layers compared as sorted sets at 1/2/4 threads, differing {differing:?}; {:.1}s",
            started.elapsed().as_secs_f64()
        ),
    );
}

#[test]
fn acceptance_criteria() {
    let mut report = Report {
        outcomes: Vec::new(),
    };
    let mut witnesses = Vec::new();
    regression(&mut report, &mut witnesses);
    expanded_proximity(&mut report);
    oracle_equivalence(&mut report, &mut witnesses);
    mmw_effect(&mut report);
    bloom_statistics(&mut report);
    witness_validity(&mut report, witnesses);
    determinism(&mut report);
    println!(
        "[EXCLUDED] 8. not reproducible on a workstation: accelerator speedups, \
         accelerator-vs-CPU timing tables, instances beyond 10^9 states"
    );

    let failed: Vec<String> = report
        .outcomes
        .iter()
        .filter(|o| o.gating && !o.pass)
        .map(|o| format!("{}. {}: {}", o.id, o.title, o.detail))
        .collect();
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
