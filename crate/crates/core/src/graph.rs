//! Simple undirected graphs and the elimination primitives built on them.
//!
//! Eliminating a vertex removes it and turns its neighbourhood into a clique.
//! The graph left after eliminating a set `S` does not depend on the order in
//! which `S` was eliminated, and the neighbourhood of a remaining vertex `v`
//! in it is the set of vertices outside `S` reachable from `v` through paths
//! whose interior lies in `S` ([`Graph::q_set`]).

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Immutable simple graph on vertices `0..n`.
///
/// Adjacency is kept twice: as one bit row per vertex and as a sorted
/// neighbour list. Both views always agree.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    lists: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            rows: vec![VertexSet::EMPTY; n],
            lists: vec![Vec::new(); n],
            edge_count: 0,
        })
    }

    /// Builds a graph from 0-based edges. Self-loops are dropped and parallel
    /// edges merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = Self::empty(n)?.rows;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u != v {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
        Ok(Self::from_rows(rows))
    }

    /// Builds a graph from symmetric, irreflexive bit rows.
    pub fn from_rows(rows: Vec<VertexSet>) -> Self {
        let n = rows.len();
        assert!(n <= MAX_VERTICES);
        debug_assert!((0..n).all(|v| !rows[v].contains(v)));
        debug_assert!((0..n).all(|v| rows[v].iter().all(|u| u < n && rows[u].contains(v))));
        let lists: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().collect()).collect();
        let edge_count = rows.iter().map(|r| r.len()).sum::<usize>() / 2;
        Graph {
            n,
            rows,
            lists,
            edge_count,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn neighbor_list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.lists[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.rows[v]))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut rows = vec![VertexSet::EMPTY; vertices.len()];
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if self.has_edge(a, b) {
                    rows[i].insert(j);
                }
            }
        }
        Graph::from_rows(rows)
    }

    /// `Q(S, v)`: vertices outside `S ∪ {v}` reachable from `v` by a path
    /// whose internal vertices all lie in `S`. Its size is the degree of `v`
    /// once `S` has been eliminated.
    pub fn q_set(&self, eliminated: VertexSet, v: usize) -> VertexSet {
        debug_assert!(
            !eliminated.contains(v),
            "q_set start vertex {v} is eliminated"
        );
        let mut visited = VertexSet::singleton(v);
        let mut reached = VertexSet::EMPTY;
        let mut stack = [0u8; MAX_VERTICES];
        let mut top = 0;
        stack[top] = v as u8;
        top += 1;
        while top > 0 {
            top -= 1;
            let u = stack[top] as usize;
            let fresh = self.rows[u].difference(visited);
            visited = visited.union(fresh);
            for w in fresh {
                if eliminated.contains(w) {
                    stack[top] = w as u8;
                    top += 1;
                } else {
                    reached.insert(w);
                }
            }
        }
        reached
    }

    /// `|Q(S, v)|`.
    #[inline]
    pub fn q_degree(&self, eliminated: VertexSet, v: usize) -> usize {
        self.q_set(eliminated, v).len()
    }

    /// The graph obtained by eliminating every vertex of `set`, one at a
    /// time in ascending index order. Vertex indices are kept; eliminated
    /// vertices end up with empty rows.
    pub fn eliminate_all(&self, set: VertexSet) -> Graph {
        self.eliminate_sequence(set.iter())
    }

    /// Eliminates the given vertices one by one, in the given order.
    pub fn eliminate_sequence<I: IntoIterator<Item = usize>>(&self, seq: I) -> Graph {
        let mut rows = self.rows.clone();
        for v in seq {
            let nb = rows[v];
            for a in nb {
                rows[a] = rows[a].union(nb).without(a).without(v);
            }
            rows[v] = VertexSet::EMPTY;
        }
        Graph::from_rows(rows)
    }

    /// Width of an elimination order: the largest `|Q(prefix, v)|` met.
    pub fn order_width(&self, order: &EliminationOrder) -> Result<usize> {
        if order.len() != self.n {
            return Err(Error::InvalidOrder(format!(
                "order has {} vertices, graph has {}",
                order.len(),
                self.n
            )));
        }
        let mut prefix = VertexSet::EMPTY;
        let mut width = 0;
        for &v in order.as_slice() {
            width = width.max(self.q_degree(prefix, v));
            prefix.insert(v);
        }
        Ok(width)
    }

    /// Graph with every edge of `self` plus the given extra edges.
    pub fn with_added_edges<I>(&self, extra: I) -> Graph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = self.rows.clone();
        for (u, v) in extra {
            if u != v {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
        Graph::from_rows(rows)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A permutation of the vertices of a graph, first-eliminated first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder(Vec<usize>);

impl EliminationOrder {
    /// Validates that `order` is a permutation of `0..n`.
    pub fn new(order: Vec<usize>, n: usize) -> Result<Self> {
        if order.len() != n {
            return Err(Error::InvalidOrder(format!(
                "expected {n} vertices, got {}",
                order.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n {
                return Err(Error::InvalidOrder(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrder(format!("vertex {v} appears twice")));
            }
        }
        Ok(EliminationOrder(order))
    }

    /// Identity order `0, 1, ..., n-1`.
    pub fn identity(n: usize) -> Self {
        EliminationOrder((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}
