//! Instance splitting and the per-graph precomputations the DP consumes.

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitLevel {
    Whole,
    Connected,
    Biconnected,
}

/// A piece of the input together with the original index of each of its
/// vertices.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

/// Pieces whose treewidths combine by `max` into the treewidth of the input.
///
/// Pieces are listed so that each one shares at most one vertex with the
/// union of the pieces before it (the articulation vertex it hangs from).
#[derive(Clone, Debug)]
pub struct DecompositionPlan {
    pub components: Vec<Component>,
    pub split_kind: SplitLevel,
}

pub fn split_instance(g: &Graph, level: SplitLevel) -> DecompositionPlan {
    let components = match level {
        SplitLevel::Whole => {
            if g.n() == 0 {
                Vec::new()
            } else {
                vec![Component {
                    graph: g.clone(),
                    vertices: (0..g.n()).collect(),
                }]
            }
        }
        SplitLevel::Connected => connected_components(g)
            .into_iter()
            .map(|vs| component(g, vs))
            .collect(),
        SplitLevel::Biconnected => connected_components(g)
            .into_iter()
            .flat_map(|vs| blocks(g, vs))
            .map(|vs| component(g, vs))
            .collect(),
    };
    DecompositionPlan {
        components,
        split_kind: level,
    }
}

fn component(g: &Graph, vertices: Vec<usize>) -> Component {
    Component {
        graph: g.induced(&vertices),
        vertices,
    }
}

fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen.contains(s) {
            continue;
        }
        let mut comp = VertexSet::singleton(s);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(g.neighbors(v));
            }
            frontier = next.difference(comp);
            comp = comp.union(frontier);
        }
        seen = seen.union(comp);
        out.push(comp.iter().collect());
    }
    out
}

/// Biconnected components of the connected piece `vertices`, ordered by a
/// breadth-first walk of the block-cut tree.
fn blocks(g: &Graph, vertices: Vec<usize>) -> Vec<Vec<usize>> {
    if vertices.len() == 1 {
        return vec![vertices];
    }
    let mut t = Tarjan {
        g,
        disc: vec![usize::MAX; g.n()],
        low: vec![0; g.n()],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
    };
    t.visit(vertices[0], usize::MAX);
    let found: Vec<VertexSet> = t.blocks;

    let mut placed = VertexSet::EMPTY;
    let mut done = vec![false; found.len()];
    let mut ordered = Vec::with_capacity(found.len());
    let mut queue = std::collections::VecDeque::from([0usize]);
    done[0] = true;
    while let Some(b) = queue.pop_front() {
        placed = placed.union(found[b]);
        ordered.push(found[b].iter().collect());
        for (i, blk) in found.iter().enumerate() {
            if !done[i] && !blk.intersection(found[b]).is_empty() {
                done[i] = true;
                queue.push_back(i);
            }
        }
    }
    debug_assert!(done.iter().all(|&d| d));
    ordered
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for &w in self.g.neighbor_list(u) {
            if self.disc[w] == usize::MAX {
                self.edge_stack.push((u, w));
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.edge_stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// A maximum clique; among maximum cliques, the one whose sorted vertex
/// list is lexicographically smallest.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut search = CliqueSearch {
        g,
        best: VertexSet::EMPTY,
    };
    search.expand(VertexSet::EMPTY, g.vertices());
    search.best
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
}

impl CliqueSearch<'_> {
    // Depth-first in ascending vertex order visits cliques in lexicographic
    // order, and only strictly larger cliques replace the incumbent.
    fn expand(&mut self, clique: VertexSet, candidates: VertexSet) {
        if clique.len() > self.best.len() {
            self.best = clique;
        }
        if clique.len() + greedy_colour_bound(self.g, candidates) <= self.best.len() {
            return;
        }
        let mut rest = candidates;
        for v in candidates {
            if clique.len() + rest.len() <= self.best.len() {
                return;
            }
            rest.remove(v);
            self.expand(clique.with(v), rest.intersection(self.g.neighbors(v)));
        }
    }
}

/// Number of colours a greedy colouring of `set` uses; bounds the size of
/// any clique inside `set`.
fn greedy_colour_bound(g: &Graph, set: VertexSet) -> usize {
    let mut uncoloured = set;
    let mut colours = 0;
    while !uncoloured.is_empty() {
        colours += 1;
        let mut available = uncoloured;
        while let Some(v) = available.first() {
            uncoloured.remove(v);
            available = available.without(v).difference(g.neighbors(v));
        }
    }
    colours
}

/// Maximum number of internally vertex-disjoint `u`–`v` paths. Adjacent
/// pairs get the sentinel `n`.
pub fn vertex_disjoint_paths(g: &Graph, u: usize, v: usize) -> usize {
    assert_ne!(u, v);
    let n = g.n();
    if g.has_edge(u, v) {
        return n;
    }
    // Split network: vertex x becomes x_in = 2x -> x_out = 2x + 1 with unit
    // capacity. The source is u_out and the sink is v_in.
    let nodes = 2 * n;
    let mut cap = vec![0i32; nodes * nodes];
    for x in 0..n {
        cap[(2 * x) * nodes + 2 * x + 1] = 1;
        for &y in g.neighbor_list(x) {
            cap[(2 * x + 1) * nodes + 2 * y] = 1;
        }
    }
    let (source, sink) = (2 * u + 1, 2 * v);
    let mut flow = 0;
    let mut prev = vec![usize::MAX; nodes];
    loop {
        prev.fill(usize::MAX);
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for b in 0..nodes {
                if prev[b] == usize::MAX && cap[a * nodes + b] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            cap[a * nodes + b] -= 1;
            cap[b * nodes + a] += 1;
            b = a;
        }
        flow += 1;
    }
}

/// Pairwise vertex-disjoint path counts, computed once per graph.
#[derive(Clone, Debug)]
pub struct DisjointPathsMatrix {
    n: usize,
    counts: Vec<u8>,
}

impl DisjointPathsMatrix {
    pub fn compute(g: &Graph) -> Self {
        let n = g.n();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let values: Vec<usize> = pairs
            .par_iter()
            .map(|&(u, v)| vertex_disjoint_paths(g, u, v))
            .collect();
        let mut counts = vec![0u8; n * n];
        for (&(u, v), &c) in pairs.iter().zip(&values) {
            counts[u * n + v] = c as u8;
            counts[v * n + u] = c as u8;
        }
        DisjointPathsMatrix { n, counts }
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.counts[u * self.n + v] as usize
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// `g` plus an edge between every pair joined by at least `k + 1`
/// vertex-disjoint paths.
pub fn improve_graph(g: &Graph, k: usize, paths: &DisjointPathsMatrix) -> Graph {
    debug_assert_eq!(g.n(), paths.n());
    let n = g.n();
    let extra = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v) && paths.get(u, v) > k);
    g.with_added_edges(extra.collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_graphs::*;

    fn two_triangles_sharing(share: bool) -> Graph {
        if share {
            Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
        } else {
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
        }
    }

    #[test]
    fn connected_split() {
        let plan = split_instance(&two_triangles_sharing(false), SplitLevel::Connected);
        assert_eq!(plan.components.len(), 2);
        for c in &plan.components {
            assert_eq!(c.graph.n(), 3);
            assert!(c.graph.is_clique(c.graph.vertices()));
        }
    }

    #[test]
    fn biconnected_split() {
        let g = two_triangles_sharing(true);
        assert_eq!(
            split_instance(&g, SplitLevel::Connected).components.len(),
            1
        );
        let plan = split_instance(&g, SplitLevel::Biconnected);
        assert_eq!(plan.components.len(), 2);
        for c in &plan.components {
            assert_eq!(c.graph.n(), 3);
            assert!(c.vertices.contains(&2));
        }
    }

    #[test]
    fn split_keeps_isolated_vertices_and_bridges() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let plan = split_instance(&g, SplitLevel::Biconnected);
        let mut sizes: Vec<usize> = plan.components.iter().map(|c| c.graph.n()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 2]);
        assert!(
            split_instance(&Graph::empty(0).unwrap(), SplitLevel::Biconnected)
                .components
                .is_empty()
        );
    }

    #[test]
    fn clique_examples() {
        assert_eq!(max_clique(&complete(5)), VertexSet::full(5));
        assert_eq!(max_clique(&cycle(5)), [0, 1].into_iter().collect());
        assert_eq!(
            max_clique(&Graph::empty(3).unwrap()),
            VertexSet::singleton(0)
        );
        assert_eq!(max_clique(&Graph::empty(0).unwrap()), VertexSet::EMPTY);
    }

    #[test]
    fn disjoint_path_examples() {
        assert_eq!(vertex_disjoint_paths(&cycle(4), 0, 2), 2);
        assert_eq!(vertex_disjoint_paths(&complete_bipartite(3, 3), 0, 1), 3);
        assert_eq!(vertex_disjoint_paths(&complete_bipartite(3, 3), 0, 3), 6);
        assert_eq!(vertex_disjoint_paths(&Graph::empty(3).unwrap(), 0, 2), 0);
    }

    #[test]
    fn improvement_examples() {
        let c4 = cycle(4);
        let m = DisjointPathsMatrix::compute(&c4);
        let improved = improve_graph(&c4, 1, &m);
        assert!(improved.is_clique(improved.vertices()));
        assert_eq!(improve_graph(&c4, 3, &m), c4);
        assert_eq!(improve_graph(&improved, 1, &m), improved);
    }
}
