//! Slow, independent reference implementations.
//!
//! Nothing here shares code paths with the solver beyond [`Graph`] itself;
//! the subset DP in particular runs with none of the solver's shortcuts
//! (clique suffix, edge improvement, early termination, lower bounds).

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mmw::MmwStep;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    pub max_vertices_permutation: usize,
    pub max_vertices_subset_dp: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices_permutation: 10,
            max_vertices_subset_dp: 20,
        }
    }
}

/// Treewidth as the minimum width over all `n!` elimination orders.
pub fn treewidth_by_permutations(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    let n = g.n();
    if n > budget.max_vertices_permutation {
        return Err(Error::BudgetExceeded {
            n,
            budget: budget.max_vertices_permutation,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut best = n - 1;
    permute(g, VertexSet::EMPTY, 0, &mut best);
    Ok(best)
}

// Enumerates orders by prefix; a prefix already as wide as the best order
// found cannot improve on it.
fn permute(g: &Graph, prefix: VertexSet, width: usize, best: &mut usize) {
    if prefix.len() == g.n() {
        *best = (*best).min(width);
        return;
    }
    for v in g.vertices().difference(prefix) {
        let w = width.max(g.q_set(prefix, v).len());
        if w < *best {
            permute(g, prefix.with(v), w, best);
        }
    }
}

/// Treewidth by the plain layered subset DP: for `k = 0, 1, ...` grow the
/// family of sets that can be eliminated with degrees at most `k`, one vertex
/// at a time, until the whole vertex set is reached.
pub fn treewidth_by_subset_dp(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    let n = g.n();
    if n > budget.max_vertices_subset_dp {
        return Err(Error::BudgetExceeded {
            n,
            budget: budget.max_vertices_subset_dp,
        });
    }
    for k in 0..n.max(1) {
        let mut layer: HashSet<VertexSet> = HashSet::from([VertexSet::EMPTY]);
        for _ in 0..n {
            let mut next = HashSet::new();
            for &s in &layer {
                for v in g.vertices().difference(s) {
                    if g.q_set(s, v).len() <= k {
                        next.insert(s.with(v));
                    }
                }
            }
            layer = next;
            if layer.is_empty() {
                break;
            }
        }
        if !layer.is_empty() {
            return Ok(k);
        }
    }
    unreachable!("every graph has an order of width n-1")
}

/// Minor-min-width on an explicitly materialised copy of the graph left after
/// eliminating `eliminated`. Returns the bound (or `cap + 1` once it exceeds
/// `cap`) and the per-step trace.
pub fn explicit_mmw(g: &Graph, eliminated: VertexSet, cap: usize) -> (usize, Vec<MmwStep>) {
    let h = g.eliminate_all(eliminated);
    let mut adj: Vec<VertexSet> = h.rows().to_vec();
    let mut alive = g.vertices().difference(eliminated);
    let mut trace = Vec::new();
    let mut bound = 0;

    while alive.len() >= 2 {
        let deg = |x: usize, adj: &Vec<VertexSet>| adj[x].len();
        let mut sorted: Vec<usize> = alive.iter().collect();
        sorted.sort_by_key(|&x| (deg(x, &adj), x));
        let v = sorted[0];
        let min_degree = deg(v, &adj);
        bound = bound.max(deg(sorted[1], &adj));
        if bound > cap {
            return (cap + 1, trace);
        }
        if min_degree == 0 {
            alive.remove(v);
            trace.push(MmwStep {
                vertex: v,
                neighbor: None,
                common: 0,
                min_degree,
            });
            continue;
        }
        let u = adj[v].iter().min_by_key(|&x| (deg(x, &adj), x)).unwrap();
        let common = adj[v].intersection(adj[u]).len();
        let merged = adj[v].union(adj[u]).without(u).without(v);
        for w in adj[u] {
            adj[w].remove(u);
            if w != v {
                adj[w].insert(v);
            }
        }
        adj[v] = merged;
        adj[u] = VertexSet::EMPTY;
        alive.remove(u);
        trace.push(MmwStep {
            vertex: v,
            neighbor: Some(u),
            common,
            min_degree,
        });
    }
    (bound, trace)
}
