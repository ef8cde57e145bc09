//! Minor-min-width lower bound on the graph left after eliminating a set,
//! computed without materialising that graph.
//!
//! The persistent state is a per-vertex degree and a disjoint-set parent
//! (one byte each). Adjacency in the contracted graph is recovered by searching
//! the original graph: from the members of a class, walk through eliminated
//! vertices and same-class members, and collect the classes of every other
//! remaining vertex reached.
//!
//! Each step picks the alive class of minimum degree (ties to the smallest
//! index), contracts it with its minimum-degree neighbour, and subtracts one
//! from every common neighbour. The bound is the largest second-smallest
//! degree seen before any contraction. A class with degree 0 is dropped.

use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// One contraction (or deletion, when `neighbor` is `None`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MmwStep {
    pub vertex: usize,
    pub neighbor: Option<usize>,
    pub common: usize,
    pub min_degree: usize,
}

/// Contraction state over the implicit eliminated graph.
#[derive(Clone)]
pub struct MinorView {
    parent: [u8; MAX_VERTICES],
    degree: [u8; MAX_VERTICES],
    eliminated: VertexSet,
    alive: VertexSet,
}

impl MinorView {
    /// View of `G` with `eliminated` removed and nothing contracted yet.
    pub fn new(g: &Graph, eliminated: VertexSet) -> Self {
        let mut view = MinorView {
            parent: [0; MAX_VERTICES],
            degree: [0; MAX_VERTICES],
            eliminated,
            alive: g.vertices().difference(eliminated),
        };
        for v in 0..g.n() {
            view.parent[v] = v as u8;
        }
        // Group the eliminated vertices into connected pieces once; each
        // piece joins all of its remaining neighbours into a clique.
        let mut pieces = [(VertexSet::EMPTY, VertexSet::EMPTY); MAX_VERTICES];
        let mut count = 0;
        let mut rest = eliminated;
        while let Some(start) = rest.first() {
            let mut piece = VertexSet::singleton(start);
            let mut frontier = piece;
            while let Some(x) = frontier.first() {
                frontier.remove(x);
                let fresh = g.neighbors(x).intersection(eliminated).difference(piece);
                piece = piece.union(fresh);
                frontier = frontier.union(fresh);
            }
            let mut boundary = VertexSet::EMPTY;
            for x in piece {
                boundary = boundary.union(g.neighbors(x));
            }
            pieces[count] = (piece, boundary.difference(eliminated));
            count += 1;
            rest = rest.difference(piece);
        }
        for v in view.alive {
            let nv = g.neighbors(v);
            let mut q = nv.difference(eliminated);
            for &(piece, boundary) in &pieces[..count] {
                if !nv.intersection(piece).is_empty() {
                    q = q.union(boundary);
                }
            }
            view.degree[v] = q.without(v).len() as u8;
        }
        view
    }

    pub fn alive(&self) -> VertexSet {
        self.alive
    }

    pub fn degree(&self, root: usize) -> usize {
        self.degree[root] as usize
    }

    pub fn find(&self, mut v: usize) -> usize {
        while self.parent[v] as usize != v {
            v = self.parent[v] as usize;
        }
        v
    }

    fn members(&self, g: &Graph, root: usize) -> VertexSet {
        g.vertices()
            .difference(self.eliminated)
            .iter()
            .filter(|&w| self.find(w) == root)
            .collect()
    }

    /// Alive roots adjacent to the class of `root` in the contracted graph.
    pub fn class_neighbors(&self, g: &Graph, root: usize) -> VertexSet {
        let members = self.members(g, root);
        let mut visited = members;
        let mut stack = [0u8; MAX_VERTICES];
        let mut top = 0;
        for m in members {
            stack[top] = m as u8;
            top += 1;
        }
        let mut found = VertexSet::EMPTY;
        while top > 0 {
            top -= 1;
            let x = stack[top] as usize;
            let fresh = g.neighbors(x).difference(visited);
            visited = visited.union(fresh);
            for w in fresh {
                if self.eliminated.contains(w) {
                    stack[top] = w as u8;
                    top += 1;
                } else {
                    let r = self.find(w);
                    if self.alive.contains(r) {
                        found.insert(r);
                    }
                }
            }
        }
        found
    }

    /// Smallest and second-smallest alive degree, with the vertex attaining
    /// the minimum (ties to the smallest index).
    fn two_smallest(&self) -> (usize, usize, usize) {
        let mut best = (usize::MAX, usize::MAX);
        let mut second = usize::MAX;
        for v in self.alive {
            let d = self.degree[v] as usize;
            if (d, v) < best {
                second = best.0;
                best = (d, v);
            } else if d < second {
                second = d;
            }
        }
        (best.1, best.0, second)
    }

    /// Performs one step on a view with at least two alive roots: contract
    /// the minimum-degree root with its minimum-degree neighbour, or drop it
    /// if it has none. Returns the step and the minimum alive degree after it.
    pub fn contract_step(&mut self, g: &Graph) -> (MmwStep, usize) {
        debug_assert!(self.alive.len() >= 2);
        let (v, min_degree, _) = self.two_smallest();
        let step = self.contract_min(g, v, min_degree);
        let after = self
            .alive
            .iter()
            .map(|x| self.degree[x] as usize)
            .min()
            .unwrap_or(0);
        (step, after)
    }

    fn contract_min(&mut self, g: &Graph, v: usize, min_degree: usize) -> MmwStep {
        if min_degree == 0 {
            self.alive.remove(v);
            return MmwStep {
                vertex: v,
                neighbor: None,
                common: 0,
                min_degree,
            };
        }
        let nv = self.class_neighbors(g, v);
        let u = nv
            .iter()
            .min_by_key(|&x| (self.degree[x], x))
            .expect("positive degree implies a neighbour");
        let nu = self.class_neighbors(g, u);
        let common = nv.intersection(nu);
        let c = common.len();
        self.parent[u] = v as u8;
        self.alive.remove(u);
        self.degree[v] = (self.degree[v] as usize + self.degree[u] as usize - c - 2) as u8;
        for w in common {
            self.degree[w] -= 1;
        }
        MmwStep {
            vertex: v,
            neighbor: Some(u),
            common: c,
            min_degree,
        }
    }

    /// Runs contractions to completion. Stops early and returns `cap + 1`
    /// once the bound exceeds `cap`.
    pub fn run(mut self, g: &Graph, cap: usize, mut trace: Option<&mut Vec<MmwStep>>) -> usize {
        let mut bound = 0;
        while self.alive.len() >= 2 {
            let (v, min_degree, second) = self.two_smallest();
            bound = bound.max(second);
            if bound > cap {
                return cap.saturating_add(1);
            }
            let step = self.contract_min(g, v, min_degree);
            if let Some(t) = trace.as_deref_mut() {
                t.push(step);
            }
        }
        bound
    }

    /// Whether the bound exceeds `k`. Stops as soon as at most `k + 1`
    /// classes remain, since no later degree can then exceed `k`.
    pub fn exceeds(mut self, g: &Graph, k: usize) -> bool {
        while self.alive.len() > k + 1 {
            let (v, min_degree, second) = self.two_smallest();
            if second > k {
                return true;
            }
            self.contract_min(g, v, min_degree);
        }
        false
    }
}

/// Whether the minor-min-width after eliminating `eliminated` exceeds `k`.
/// Agrees with `mmw_lower_bound(g, eliminated, k) > k`.
pub fn mmw_exceeds(g: &Graph, eliminated: VertexSet, k: usize) -> bool {
    MinorView::new(g, eliminated).exceeds(g, k)
}

/// Minor-min-width of the graph left after eliminating `eliminated`, or
/// `cap + 1` as soon as the bound is known to exceed `cap`.
pub fn mmw_lower_bound(g: &Graph, eliminated: VertexSet, cap: usize) -> usize {
    MinorView::new(g, eliminated).run(g, cap, None)
}

/// [`mmw_lower_bound`] together with its contraction trace.
pub fn mmw_with_trace(g: &Graph, eliminated: VertexSet, cap: usize) -> (usize, Vec<MmwStep>) {
    let mut trace = Vec::new();
    let bound = MinorView::new(g, eliminated).run(g, cap, Some(&mut trace));
    (bound, trace)
}
