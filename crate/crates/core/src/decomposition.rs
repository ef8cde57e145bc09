//! Tree decompositions derived from elimination orders, and back.

use crate::graph::{EliminationOrder, Graph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one (0 for an empty decomposition).
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// Checks that the edges form a tree over the bags, that every vertex
    /// and every edge of `g` is covered, and that the bags holding any one
    /// vertex are connected. Returns the width.
    pub fn validate(&self, g: &Graph) -> Result<usize, String> {
        let nb = self.bags.len();
        if g.n() == 0 {
            return Ok(self.width());
        }
        if nb == 0 {
            return Err("no bags".into());
        }
        if self.edges.len() != nb - 1 {
            return Err(format!("{} bags but {} tree edges", nb, self.edges.len()));
        }
        let adj = self.adjacency();
        if reachable(&adj, 0, |_| true).iter().filter(|&&r| r).count() != nb {
            return Err("tree edges do not connect all bags".into());
        }
        for v in 0..g.n() {
            let holding: Vec<usize> = (0..nb).filter(|&b| self.bags[b].contains(v)).collect();
            let Some(&start) = holding.first() else {
                return Err(format!("vertex {} is in no bag", v + 1));
            };
            let seen = reachable(&adj, start, |b| self.bags[b].contains(v));
            if holding.iter().any(|&b| !seen[b]) {
                return Err(format!(
                    "bags containing vertex {} are not connected",
                    v + 1
                ));
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return Err(format!("edge {}-{} is not covered", u + 1, v + 1));
            }
        }
        Ok(self.width())
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// An elimination order whose width is at most the decomposition width:
    /// walk the tree bottom-up and, at each bag, eliminate the vertices that
    /// do not occur in its parent.
    pub fn elimination_order(&self, n: usize) -> EliminationOrder {
        let mut order = Vec::with_capacity(n);
        let mut placed = VertexSet::EMPTY;
        if !self.bags.is_empty() {
            let adj = self.adjacency();
            let mut parent = vec![usize::MAX; self.bags.len()];
            let mut preorder = Vec::with_capacity(self.bags.len());
            let mut stack = vec![0usize];
            parent[0] = 0;
            while let Some(b) = stack.pop() {
                preorder.push(b);
                for &c in &adj[b] {
                    if parent[c] == usize::MAX {
                        parent[c] = b;
                        stack.push(c);
                    }
                }
            }
            for &b in preorder.iter().rev() {
                let up = if b == 0 {
                    VertexSet::EMPTY
                } else {
                    self.bags[parent[b]]
                };
                for v in self.bags[b].difference(up).difference(placed) {
                    order.push(v);
                    placed.insert(v);
                }
            }
        }
        for v in VertexSet::full(n).difference(placed) {
            order.push(v);
        }
        EliminationOrder::new(order, n).expect("every vertex placed once")
    }
}

fn reachable(adj: &[Vec<usize>], start: usize, allowed: impl Fn(usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(b) = stack.pop() {
        for &c in &adj[b] {
            if !seen[c] && allowed(c) {
                seen[c] = true;
                stack.push(c);
            }
        }
    }
    seen
}

/// Bag of `v` is `{v} ∪ Q(prefix, v)`; it hangs below the bag of the
/// earliest-eliminated vertex of `Q(prefix, v)`. Bags of vertices with an
/// empty `Q` are chained to the last bag so the result is a single tree.
pub fn tree_decomposition_from_order(g: &Graph, order: &EliminationOrder) -> TreeDecomposition {
    let n = g.n();
    let order = order.as_slice();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut prefix = VertexSet::EMPTY;
    for (i, &v) in order.iter().enumerate() {
        let q = g.q_set(prefix, v);
        bags.push(q.with(v));
        match q.iter().map(|w| position[w]).min() {
            Some(p) => edges.push((i, p)),
            None if i + 1 < n => edges.push((i, n - 1)),
            None => {}
        }
        prefix.insert(v);
    }
    TreeDecomposition { bags, edges }
}
