//! Layered elimination-order dynamic program.
//!
//! Deciding `tw(G) <= k`: layer `i` holds every vertex set `S` of size `i`
//! that can be eliminated in some order without ever eliminating a vertex
//! whose degree exceeds `k`. Layer `i + 1` is built from layer `i` by trying
//! each vertex outside `S` (and outside the clique suffix). After `n - k - 1`
//! layers the remaining `k + 1` vertices can go in any order, so a nonempty
//! final layer means yes.
//!
//! The solver runs this decision procedure for increasing `k`, starting from
//! a lower bound. Each state also carries the last four vertices eliminated
//! on the way to it; elimination orders are rebuilt from that history by
//! re-running the procedure on ever smaller targets.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use dashmap::DashSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::bloom::{BloomParams, ConcurrentBloom};
use crate::decomposition::{tree_decomposition_from_order, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{EliminationOrder, Graph};
use crate::mmw::{mmw_exceeds, mmw_lower_bound};
use crate::preprocess::{
    improve_graph, max_clique, split_instance, DisjointPathsMatrix, SplitLevel,
};
use crate::vertex_set::VertexSet;

const EMPTY_SLOT: u32 = 0xFF;

/// An eliminated prefix plus the last four vertices eliminated to reach it,
/// packed one byte each with the most recent in the low byte. Unused slots
/// hold `0xFF`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchState {
    pub set: VertexSet,
    pub history: u32,
}

impl SearchState {
    pub const ROOT: SearchState = SearchState {
        set: VertexSet::EMPTY,
        history: u32::MAX,
    };

    #[inline]
    pub fn child(self, v: usize) -> SearchState {
        SearchState {
            set: self.set.with(v),
            history: (self.history << 8) | v as u32,
        }
    }

    /// Recorded history, most recent first.
    pub fn recent(self) -> impl Iterator<Item = usize> {
        (0..4)
            .map(move |i| (self.history >> (8 * i)) & 0xFF)
            .take_while(|&b| b != EMPTY_SLOT)
            .map(|b| b as usize)
    }
}

/// Output of one expansion round.
#[derive(Clone, Debug, Default)]
pub struct LayerList {
    pub states: Vec<SearchState>,
    pub capacity: usize,
    pub overflowed: bool,
}

impl LayerList {
    pub fn root(capacity: usize) -> Self {
        LayerList {
            states: vec![SearchState::ROOT],
            capacity,
            overflowed: false,
        }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Vertex sets in ascending order, for comparing layers across runs.
    pub fn sorted_sets(&self) -> Vec<u64> {
        let mut sets: Vec<u64> = self.states.iter().map(|s| s.set.bits()).collect();
        sets.sort_unstable();
        sets
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DedupMode {
    /// Bloom filter; its capacity is taken from `max_layer_states`.
    Bloom {
        bits_per_element: usize,
        num_hashes: usize,
    },
    ExactSet,
}

impl Default for DedupMode {
    fn default() -> Self {
        let p = BloomParams::default();
        DedupMode::Bloom {
            bits_per_element: p.bits_per_element,
            num_hashes: p.num_hashes,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveConfig {
    pub max_layer_states: usize,
    pub use_mmw: bool,
    pub dedup: DedupMode,
    #[serde(skip)]
    pub thread_count: usize,
    pub starting_k_override: Option<usize>,
    pub emit_order: bool,
    pub clique_suffix: bool,
    pub improve_edges: bool,
    pub split: SplitLevel,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            max_layer_states: 10_000_000,
            use_mmw: false,
            dedup: DedupMode::default(),
            thread_count: std::thread::available_parallelism().map_or(1, |n| n.get()),
            starting_k_override: None,
            emit_order: true,
            clique_suffix: true,
            improve_edges: true,
            split: SplitLevel::Biconnected,
        }
    }
}

impl SolveConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_layer_states == 0 {
            return Err(Error::Config("max_layer_states must be at least 1".into()));
        }
        if self.thread_count == 0 {
            return Err(Error::Config("thread_count must be at least 1".into()));
        }
        if let DedupMode::Bloom {
            bits_per_element,
            num_hashes,
        } = self.dedup
        {
            if bits_per_element == 0 || num_hashes == 0 {
                return Err(Error::Config(
                    "bloom bits and hashes must be at least 1".into(),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Feasible(SearchState),
    Infeasible,
    /// A layer emptied after states had been discarded for lack of room.
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Status {
    Exact(usize),
    LowerBoundOnly(usize),
    Indeterminate,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LayerStats {
    pub expanded: usize,
    pub emitted: usize,
    pub duplicates: usize,
    pub degree_rejected: usize,
    pub mmw_pruned: usize,
    pub dropped: usize,
}

impl LayerStats {
    fn absorb(&mut self, o: &LayerStats) {
        self.expanded += o.expanded;
        self.emitted += o.emitted;
        self.duplicates += o.duplicates;
        self.degree_rejected += o.degree_rejected;
        self.mmw_pruned += o.mmw_pruned;
        self.dropped += o.dropped;
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct KStats {
    pub k: usize,
    pub decision: String,
    pub overflowed: bool,
    pub totals: LayerStats,
    pub layers: Vec<LayerStats>,
    #[serde(skip)]
    pub wall_secs: f64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ComponentStats {
    pub vertices: Vec<usize>,
    pub n: usize,
    pub m: usize,
    pub clique_size: usize,
    pub start_k: usize,
    pub status: Option<Status>,
    pub per_k: Vec<KStats>,
    #[serde(skip)]
    pub wall_secs: f64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SolveStats {
    pub components: Vec<ComponentStats>,
}

impl SolveStats {
    /// Input states processed, over every component, `k` and layer.
    pub fn total_expanded(&self) -> usize {
        self.totals().expanded
    }

    pub fn totals(&self) -> LayerStats {
        let mut t = LayerStats::default();
        for c in &self.components {
            for k in &c.per_k {
                t.absorb(&k.totals);
            }
        }
        t
    }
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub status: Status,
    pub order: Option<EliminationOrder>,
    pub stats: SolveStats,
}

/// Passed to a layer observer after every expansion round of the search.
pub struct LayerEvent<'a> {
    pub component: usize,
    pub k: usize,
    pub layer: usize,
    pub list: &'a LayerList,
}

enum Dedup {
    Bloom(ConcurrentBloom),
    Exact(DashSet<u64>),
}

impl Dedup {
    fn new(mode: DedupMode, capacity: usize) -> Self {
        match mode {
            DedupMode::Bloom {
                bits_per_element,
                num_hashes,
            } => Dedup::Bloom(ConcurrentBloom::new(BloomParams {
                bits_per_element,
                num_hashes,
                capacity,
            })),
            DedupMode::ExactSet => Dedup::Exact(DashSet::new()),
        }
    }

    #[inline]
    fn insert(&self, set: VertexSet) -> bool {
        match self {
            Dedup::Bloom(f) => f.insert_and_check(&set.to_le_bytes()),
            Dedup::Exact(s) => s.insert(set.bits()),
        }
    }

    /// Read-only membership probe; never inserts.
    #[inline]
    fn seen(&self, set: VertexSet) -> bool {
        match self {
            Dedup::Bloom(f) => f.contains(&set.to_le_bytes()),
            Dedup::Exact(s) => s.contains(&set.bits()),
        }
    }

    fn reset(&mut self) {
        match self {
            Dedup::Bloom(f) => f.reset(),
            Dedup::Exact(s) => s.clear(),
        }
    }
}

/// Runs the layered search. Holds the worker pool and the deduplication
/// structure so they are reused across layers and values of `k`.
pub struct Engine {
    cfg: SolveConfig,
    pool: rayon::ThreadPool,
    dedup: Dedup,
}

impl Engine {
    pub fn new(cfg: &SolveConfig) -> Result<Self> {
        cfg.validate()?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.thread_count)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?;
        Ok(Engine {
            cfg: cfg.clone(),
            pool,
            dedup: Dedup::new(cfg.dedup, cfg.max_layer_states),
        })
    }

    pub fn config(&self) -> &SolveConfig {
        &self.cfg
    }

    /// One round: extends every input state by every admissible vertex not
    /// in `excluded`. Children go through the degree test, then the optional
    /// MMW bound, then deduplication. Children beyond the capacity are
    /// dropped and the output is marked overflowed.
    pub fn expand_layer(
        &mut self,
        g: &Graph,
        k: usize,
        excluded: VertexSet,
        input: &LayerList,
        stats: &mut LayerStats,
    ) -> LayerList {
        self.dedup.reset();
        let capacity = self.cfg.max_layer_states;
        let use_mmw = self.cfg.use_mmw;
        let dedup = &self.dedup;
        let reserved = AtomicUsize::new(0);
        let overflowed = AtomicBool::new(false);
        let all = g.vertices();

        let chunk = (input.len() / (self.cfg.thread_count * 8)).clamp(16, 4096);
        let parts: Vec<(Vec<SearchState>, LayerStats)> = self.pool.install(|| {
            input
                .states
                .par_chunks(chunk)
                .map(|states| {
                    let mut out = Vec::new();
                    let mut st = LayerStats::default();
                    for &state in states {
                        st.expanded += 1;
                        for v in all.difference(state.set).difference(excluded) {
                            if g.q_degree(state.set, v) > k {
                                st.degree_rejected += 1;
                                continue;
                            }
                            let child = state.child(v);
                            if use_mmw {
                                // Only states that passed the bound are ever
                                // inserted, so a set already present would pass
                                // it again; skip recomputing the bound for it.
                                if dedup.seen(child.set) {
                                    st.duplicates += 1;
                                    continue;
                                }
                                if mmw_exceeds(g, child.set, k) {
                                    st.mmw_pruned += 1;
                                    continue;
                                }
                            }
                            if !dedup.insert(child.set) {
                                st.duplicates += 1;
                                continue;
                            }
                            if reserved.fetch_add(1, Ordering::Relaxed) < capacity {
                                out.push(child);
                                st.emitted += 1;
                            } else {
                                overflowed.store(true, Ordering::Relaxed);
                                st.dropped += 1;
                            }
                        }
                    }
                    (out, st)
                })
                .collect()
        });

        let mut states = Vec::with_capacity(reserved.load(Ordering::Relaxed).min(capacity));
        for (part, st) in parts {
            states.extend(part);
            stats.absorb(&st);
        }
        LayerList {
            states,
            capacity,
            overflowed: overflowed.into_inner(),
        }
    }

    /// Runs `rounds` expansion rounds from the empty set, never adding
    /// vertices of `excluded`.
    fn run_layers(
        &mut self,
        g: &Graph,
        k: usize,
        excluded: VertexSet,
        rounds: usize,
        kstats: &mut KStats,
        observer: &mut dyn FnMut(usize, &LayerList),
    ) -> Decision {
        let mut layer = LayerList::root(self.cfg.max_layer_states);
        let mut overflow_seen = false;
        for i in 0..rounds {
            let mut st = LayerStats::default();
            layer = self.expand_layer(g, k, excluded, &layer, &mut st);
            kstats.totals.absorb(&st);
            kstats.layers.push(st);
            observer(i + 1, &layer);
            overflow_seen |= layer.overflowed;
            if layer.is_empty() {
                kstats.overflowed = overflow_seen;
                return if overflow_seen {
                    Decision::Indeterminate
                } else {
                    Decision::Infeasible
                };
            }
        }
        kstats.overflowed = overflow_seen;
        // The state with the smallest set keeps the witness independent of
        // scheduling (its history may still vary).
        let witness = *layer
            .states
            .iter()
            .min_by_key(|s| s.set.bits())
            .expect("nonempty layer");
        Decision::Feasible(witness)
    }

    /// Decides `tw(g) <= k`. `g` is expected to be the `k`-improved graph
    /// and `clique` a clique of it whose vertices are never eliminated.
    pub fn decide(
        &mut self,
        g: &Graph,
        k: usize,
        clique: VertexSet,
        kstats: &mut KStats,
    ) -> Decision {
        self.decide_observed(g, k, clique, kstats, &mut |_, _| {})
    }

    pub fn decide_observed(
        &mut self,
        g: &Graph,
        k: usize,
        clique: VertexSet,
        kstats: &mut KStats,
        observer: &mut dyn FnMut(usize, &LayerList),
    ) -> Decision {
        let rounds = g.n().saturating_sub(k + 1);
        self.run_layers(g, k, clique, rounds, kstats, observer)
    }

    /// Rebuilds a full elimination order of width at most `k` from a witness
    /// of a feasible `decide` call on the same graph.
    ///
    /// The witness history gives the last four vertices of the prefix; the
    /// search is re-run with everything outside the shortened prefix held
    /// back, which yields the next four, and so on.
    pub fn reconstruct_order(
        &mut self,
        g: &Graph,
        k: usize,
        witness: SearchState,
    ) -> Result<EliminationOrder> {
        let mut backwards = Vec::with_capacity(witness.set.len());
        let mut target = witness.set;
        let mut state = witness;
        let mut scratch = KStats::default();
        loop {
            for v in state.recent() {
                if !target.contains(v) {
                    return Err(Error::Invariant(format!(
                        "history vertex {v} is not in the witness set"
                    )));
                }
                backwards.push(v);
                target.remove(v);
            }
            if target.is_empty() {
                break;
            }
            let excluded = g.vertices().difference(target);
            match self.run_layers(g, k, excluded, target.len(), &mut scratch, &mut |_, _| {}) {
                Decision::Feasible(s) if s.set == target => state = s,
                other => {
                    return Err(Error::Invariant(format!(
                        "re-running the search for a prefix of {} vertices gave {other:?}",
                        target.len()
                    )))
                }
            }
        }
        backwards.reverse();
        backwards.extend(g.vertices().difference(witness.set));
        EliminationOrder::new(backwards, g.n())
    }
}

/// Decides `tw(g) <= k` with a fresh engine.
pub fn decide(g: &Graph, k: usize, clique: VertexSet, cfg: &SolveConfig) -> Result<Decision> {
    let mut engine = Engine::new(cfg)?;
    Ok(engine.decide(g, k, clique, &mut KStats::default()))
}

pub fn reconstruct_order(
    g: &Graph,
    k: usize,
    witness: SearchState,
    cfg: &SolveConfig,
) -> Result<EliminationOrder> {
    Engine::new(cfg)?.reconstruct_order(g, k, witness)
}

/// Exact treewidth (or a lower bound, if layers overflowed) of `g`.
pub fn solve(g: &Graph, cfg: &SolveConfig) -> Result<SolveResult> {
    solve_observed(g, cfg, &mut |_| {})
}

/// [`solve`], reporting every layer to `observer` as it is produced.
pub fn solve_observed(
    g: &Graph,
    cfg: &SolveConfig,
    observer: &mut dyn FnMut(LayerEvent<'_>),
) -> Result<SolveResult> {
    let mut engine = Engine::new(cfg)?;
    let plan = split_instance(g, cfg.split);

    let mut stats = SolveStats::default();
    let mut exact = true;
    let mut value = 0;
    let mut decomposition = TreeDecomposition::default();
    let mut have_all_orders = cfg.emit_order;

    for (ci, comp) in plan.components.iter().enumerate() {
        let started = Instant::now();
        let (status, order, mut cstats) = solve_component(&mut engine, &comp.graph, ci, observer)?;
        cstats.vertices = comp.vertices.clone();
        cstats.wall_secs = started.elapsed().as_secs_f64();
        cstats.status = Some(status);
        stats.components.push(cstats);
        match status {
            Status::Exact(t) => value = value.max(t),
            Status::LowerBoundOnly(lb) => {
                exact = false;
                value = value.max(lb);
            }
            Status::Indeterminate => exact = false,
        }
        match order {
            Some(order) if have_all_orders => {
                let local = tree_decomposition_from_order(&comp.graph, &order);
                attach(&mut decomposition, &local, &comp.vertices);
            }
            _ => have_all_orders = false,
        }
    }

    let status = if exact {
        Status::Exact(value)
    } else {
        Status::LowerBoundOnly(value)
    };
    let order = (exact && have_all_orders).then(|| decomposition.elimination_order(g.n()));
    if let Some(order) = &order {
        let width = g.order_width(order)?;
        if width != value {
            return Err(Error::Invariant(format!(
                "assembled order has width {width}, expected {value}"
            )));
        }
    }
    Ok(SolveResult {
        status,
        order,
        stats,
    })
}

/// Glues the decomposition of one piece (in local vertex numbering) onto the
/// decomposition assembled so far. The piece shares at most one vertex with
/// what is already there; its bags hang from a bag holding that vertex.
fn attach(global: &mut TreeDecomposition, local: &TreeDecomposition, map: &[usize]) {
    let offset = global.bags.len();
    let placed: VertexSet = global
        .bags
        .iter()
        .fold(VertexSet::EMPTY, |a, b| a.union(*b));
    let bags: Vec<VertexSet> = local
        .bags
        .iter()
        .map(|b| b.iter().map(|v| map[v]).collect())
        .collect();
    let link = bags
        .iter()
        .position(|b| !b.intersection(placed).is_empty())
        .map(|i| {
            let shared = bags[i].intersection(placed).first().unwrap();
            let anchor = global.bags.iter().position(|b| b.contains(shared)).unwrap();
            (offset + i, anchor)
        });
    global
        .edges
        .extend(local.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
    global.bags.extend(bags);
    if offset > 0 {
        global.edges.push(link.unwrap_or((offset, 0)));
    }
}

fn solve_component(
    engine: &mut Engine,
    g: &Graph,
    index: usize,
    observer: &mut dyn FnMut(LayerEvent<'_>),
) -> Result<(Status, Option<EliminationOrder>, ComponentStats)> {
    let cfg = engine.config().clone();
    let n = g.n();
    let mut cstats = ComponentStats {
        n,
        m: g.edge_count(),
        ..Default::default()
    };
    if n <= 1 {
        let order = cfg.emit_order.then(|| EliminationOrder::identity(n));
        return Ok((Status::Exact(0), order, cstats));
    }

    let clique = if cfg.clique_suffix {
        max_clique(g)
    } else {
        VertexSet::EMPTY
    };
    cstats.clique_size = clique.len();
    let paths = cfg.improve_edges.then(|| DisjointPathsMatrix::compute(g));
    let start_k = match cfg.starting_k_override {
        Some(k) => k,
        None => {
            clique
                .len()
                .saturating_sub(1)
                .max(mmw_lower_bound(g, VertexSet::EMPTY, usize::MAX))
        }
    };
    cstats.start_k = start_k;

    for k in start_k..n {
        let started = Instant::now();
        let improved = match &paths {
            Some(p) => improve_graph(g, k, p),
            None => g.clone(),
        };
        let mut kstats = KStats {
            k,
            ..Default::default()
        };
        let decision =
            engine.decide_observed(&improved, k, clique, &mut kstats, &mut |layer, list| {
                observer(LayerEvent {
                    component: index,
                    k,
                    layer,
                    list,
                })
            });
        kstats.wall_secs = started.elapsed().as_secs_f64();
        kstats.decision = match decision {
            Decision::Feasible(_) => "feasible",
            Decision::Infeasible => "infeasible",
            Decision::Indeterminate => "indeterminate",
        }
        .into();
        cstats.per_k.push(kstats);
        match decision {
            Decision::Feasible(witness) => {
                let order = if cfg.emit_order {
                    Some(reconstruct_with_fallback(engine, &improved, k, witness)?)
                } else {
                    None
                };
                return Ok((Status::Exact(k), order, cstats));
            }
            Decision::Infeasible => continue,
            Decision::Indeterminate => return Ok((Status::LowerBoundOnly(k), None, cstats)),
        }
    }
    unreachable!("k = n - 1 needs no rounds and is always feasible")
}

// A Bloom false positive can hide the only route to a prefix during
// reconstruction; exact deduplication cannot.
fn reconstruct_with_fallback(
    engine: &mut Engine,
    g: &Graph,
    k: usize,
    witness: SearchState,
) -> Result<EliminationOrder> {
    match engine.reconstruct_order(g, k, witness) {
        Ok(order) => Ok(order),
        Err(Error::Invariant(_)) if matches!(engine.cfg.dedup, DedupMode::Bloom { .. }) => {
            let mut cfg = engine.cfg.clone();
            cfg.dedup = DedupMode::ExactSet;
            Engine::new(&cfg)?.reconstruct_order(g, k, witness)
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_graphs::*;

    fn exact_cfg() -> SolveConfig {
        SolveConfig {
            dedup: DedupMode::ExactSet,
            thread_count: 1,
            max_layer_states: 10_000,
            ..Default::default()
        }
    }

    #[test]
    fn history_packing() {
        let mut s = SearchState::ROOT;
        assert_eq!(s.recent().count(), 0);
        for v in [3, 1, 4, 1 + 4, 9] {
            s = s.child(v);
        }
        assert_eq!(s.recent().collect::<Vec<_>>(), vec![9, 5, 4, 1]);
        assert_eq!(s.set.len(), 5);
        let t = SearchState::ROOT.child(7).child(2);
        assert_eq!(t.recent().collect::<Vec<_>>(), vec![2, 7]);
    }

    #[test]
    fn clique_needs_no_rounds() {
        let g = complete(5);
        let d = decide(&g, 4, g.vertices(), &exact_cfg()).unwrap();
        assert_eq!(d, Decision::Feasible(SearchState::ROOT));
    }

    #[test]
    fn k4_below_width_is_infeasible() {
        let g = complete(4);
        assert_eq!(
            decide(&g, 2, VertexSet::EMPTY, &exact_cfg()).unwrap(),
            Decision::Infeasible
        );
    }

    #[test]
    fn first_layer_examples() {
        let cfg = exact_cfg();
        let mut engine = Engine::new(&cfg).unwrap();
        let mut st = LayerStats::default();
        let root = LayerList::root(cfg.max_layer_states);
        let out = engine.expand_layer(&complete(3), 2, VertexSet::EMPTY, &root, &mut st);
        assert_eq!(out.len(), 3);
        let out = engine.expand_layer(&star(3), 1, VertexSet::EMPTY, &root, &mut st);
        assert_eq!(out.len(), 3);
        assert!(out.states.iter().all(|s| !s.set.contains(0)));
    }

    #[test]
    fn overflow_marks_layer() {
        let cfg = SolveConfig {
            max_layer_states: 2,
            ..exact_cfg()
        };
        let mut engine = Engine::new(&cfg).unwrap();
        let mut st = LayerStats::default();
        let out = engine.expand_layer(
            &complete(4),
            3,
            VertexSet::EMPTY,
            &LayerList::root(2),
            &mut st,
        );
        assert_eq!(out.len(), 2);
        assert!(out.overflowed);
        assert_eq!(st.dropped, 2);
    }

    #[test]
    fn edgeless_and_tiny_graphs() {
        for n in [0, 1, 5] {
            let r = solve(&Graph::empty(n).unwrap(), &exact_cfg()).unwrap();
            assert_eq!(r.status, Status::Exact(0));
            assert_eq!(r.order.unwrap().len(), n);
        }
    }

    #[test]
    fn reconstructs_small_orders() {
        let cfg = exact_cfg();
        for (g, tw) in [
            (complete(4), 3),
            (path(5), 1),
            (grid(3, 3), 3),
            (cycle(7), 2),
        ] {
            let r = solve(&g, &cfg).unwrap();
            assert_eq!(r.status, Status::Exact(tw));
            assert_eq!(g.order_width(r.order.as_ref().unwrap()).unwrap(), tw);
        }
    }

    #[test]
    fn config_errors() {
        let bad = SolveConfig {
            max_layer_states: 0,
            ..exact_cfg()
        };
        assert!(matches!(solve(&path(3), &bad), Err(Error::Config(_))));
        let bad = SolveConfig {
            thread_count: 0,
            ..exact_cfg()
        };
        assert!(Engine::new(&bad).is_err());
    }
}
