//! Simple labeled graphs on `[n]` stored as neighborhood masks.

mod chordal;
mod graph6;
mod text;

use std::fmt;

use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub use self::chordal::{is_perfect_elimination_order, maximum_cardinality_search};
pub use self::graph6::{decode_graph6, encode_graph6};
pub use self::text::{parse_edge_list, to_edge_list};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("ambient ring too small: n = {0}, at least 4 variables are required")]
    AmbientTooSmall(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
}

impl GraphError {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        GraphError::Parse {
            offset,
            message: message.into(),
        }
    }
}

/// Input formats understood by [`parse_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::Graph6 => decode_graph6(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

/// An undirected simple graph on `[n]`.
///
/// Isolated vertices and `n < 4` are allowed here; the standing assumptions of
/// the ideal constructions are checked by [`validate_standing_assumptions`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from 0-based edges. Loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u + 1));
            }
            assert!(u < n && v < n, "edge ({u},{v}) outside [0,{n})");
            if g.has_edge(u, v) {
                let (a, b) = (u.min(v), u.max(v));
                return Err(GraphError::DuplicateEdge(a + 1, b + 1));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Same as [`Graph::from_edges`] with 1-based labels. Panics on invalid input;
    /// meant for fixtures.
    pub fn from_labeled_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let zero: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        Graph::from_edges(n, &zero).expect("invalid fixture graph")
    }

    /// Decodes an edge bitmask over the pairs `(i,j)`, `i<j`, in the order produced by [`Graph::pairs`].
    /// Only graphs with at most 64 vertex pairs (`n <= 11`) fit in a mask.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        assert!(n * n.saturating_sub(1) / 2 <= 64, "too many pairs for an edge mask");
        let mut g = Graph::empty(n).expect("n within range");
        for (k, (i, j)) in Graph::pairs(n).enumerate() {
            if (mask >> k) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// All vertex pairs `(i,j)` with `i<j`, lexicographically.
    pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("n within range");
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.remove(v);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).expect("cycle")
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] = self.adj[u].insert(v);
        self.adj[v] = self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(i,j)` with `i<j`, 0-based, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        Graph::pairs(self.n)
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect()
    }

    /// Edges as two-element vertex sets, in the same order as [`Graph::edges`].
    pub fn edge_sets(&self) -> Vec<VertexSet> {
        self.edges()
            .into_iter()
            .map(|(i, j)| VertexSet::from_indices([i, j]))
            .collect()
    }

    /// Pairs `{i,j}`, `i<j`, that are not edges.
    pub fn nonedge_sets(&self) -> Vec<VertexSet> {
        Graph::pairs(self.n)
            .filter(|&(i, j)| !self.has_edge(i, j))
            .map(|(i, j)| VertexSet::from_indices([i, j]))
            .collect()
    }

    /// Encodes the edge set as a bitmask, inverse of [`Graph::from_edge_mask`].
    pub fn edge_mask(&self) -> u64 {
        assert!(self.n * self.n.saturating_sub(1) / 2 <= 64, "too many pairs for an edge mask");
        Graph::pairs(self.n)
            .enumerate()
            .filter(|&(_, (i, j))| self.has_edge(i, j))
            .fold(0u64, |acc, (k, _)| acc | (1u64 << k))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| self.adj[v].complement(self.n).intersection(all).remove(v))
                .collect(),
        }
    }

    pub fn induced_subgraph_is_clique(&self, t: VertexSet) -> bool {
        t.iter().all(|v| t.remove(v).is_subset(self.adj[v]))
    }

    pub fn induced_subgraph_is_independent(&self, t: VertexSet) -> bool {
        t.iter().all(|v| !self.adj[v].meets(t))
    }

    /// Maximal connected vertex sets ordered by their smallest element.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let comp = self.component_of(start);
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    fn component_of(&self, start: usize) -> VertexSet {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.difference(comp);
            comp = comp.union(next);
        }
        comp
    }

    /// All 3-cliques, lexicographically.
    pub fn triangles(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for i in 0..self.n {
            let later = |v: usize| {
                self.adj[v]
                    .difference(VertexSet::full(v + 1))
            };
            for j in later(i).iter() {
                for k in later(j).intersection(self.adj[i]).iter() {
                    out.push(VertexSet::from_indices([i, j, k]));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertices()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .iter()
            .all(|&(i, j)| !self.adj[i].meets(self.adj[j]))
    }

    /// Every vertex has degree exactly one (a perfect matching on `[n]`).
    pub fn is_disjoint_union_of_edges(&self) -> bool {
        self.n > 0 && self.adj.iter().all(|a| a.len() == 1)
    }

    pub fn is_chordal(&self) -> bool {
        let order = maximum_cardinality_search(self);
        // The reverse of an MCS visit order is a perfect elimination order iff G is chordal.
        let elimination: Vec<usize> = order.into_iter().rev().collect();
        is_perfect_elimination_order(self, &elimination)
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }

    /// Line graph adjacency on the edges of `self` in [`Graph::edges`] order.
    pub fn line_graph_adjacency(&self) -> Vec<Vec<bool>> {
        let edges = self.edge_sets();
        edges
            .iter()
            .map(|&e| edges.iter().map(|&f| e != f && e.meets(f)).collect())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges [", self.n)?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", i + 1, j + 1)?;
        }
        f.write_str("])")
    }
}

/// Standing hypotheses on `G`: `n >= 4` and no isolated vertex.
pub fn validate_standing_assumptions(g: &Graph) -> Result<(), GraphError> {
    if g.n() < 4 {
        return Err(GraphError::AmbientTooSmall(g.n()));
    }
    match (0..g.n()).find(|&v| g.degree(v) == 0) {
        Some(v) => Err(GraphError::IsolatedVertex(v + 1)),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| VertexSet::from_labels(s.iter().copied())).collect()
    }

    fn two_k2() -> Graph {
        Graph::from_labeled_edges(4, &[(1, 2), (3, 4)])
    }

    fn paw() -> Graph {
        Graph::from_labeled_edges(4, &[(1, 2), (1, 3), (2, 3), (3, 4)])
    }

    #[test]
    fn standing_assumptions() {
        assert_eq!(validate_standing_assumptions(&Graph::complete(4)), Ok(()));
        assert_eq!(
            validate_standing_assumptions(&Graph::complete(3)),
            Err(GraphError::AmbientTooSmall(3))
        );
        let g = Graph::from_labeled_edges(4, &[(1, 2), (2, 3)]);
        assert_eq!(validate_standing_assumptions(&g), Err(GraphError::IsolatedVertex(4)));
    }

    #[test]
    fn components() {
        assert_eq!(two_k2().connected_components(), sets(&[&[1, 2], &[3, 4]]));
        assert_eq!(Graph::path(4).connected_components(), sets(&[&[1, 2, 3, 4]]));
        let g = Graph::from_labeled_edges(5, &[(1, 2), (2, 3), (4, 5)]);
        assert_eq!(g.connected_components(), sets(&[&[1, 2, 3], &[4, 5]]));
    }

    #[test]
    fn chordality_examples() {
        assert!(!Graph::cycle(4).is_chordal());
        assert!(Graph::path(6).is_chordal());
        assert!(Graph::complete(4).is_chordal());
        assert!(!Graph::cycle(5).is_chordal());
    }

    #[test]
    fn triangle_listing() {
        assert_eq!(
            Graph::complete(4).triangles(),
            sets(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
        );
        assert!(Graph::cycle(4).triangles().is_empty());
        assert_eq!(paw().triangles(), sets(&[&[1, 2, 3]]));
    }

    #[test]
    fn complements() {
        assert_eq!(Graph::complete(4).complement().edge_count(), 0);
        assert_eq!(
            two_k2().complement(),
            Graph::from_labeled_edges(4, &[(1, 3), (1, 4), (2, 3), (2, 4)])
        );
        assert_eq!(Graph::path(4).complement().complement(), Graph::path(4));
    }

    #[test]
    fn predicates() {
        assert!(two_k2().is_disjoint_union_of_edges());
        assert!(two_k2().is_forest() && !two_k2().is_tree());
        assert!(Graph::path(4).is_tree());
        assert!(!paw().is_triangle_free());
        assert!(Graph::cycle(4).is_triangle_free());
        assert!(Graph::complete(5).is_complete());
        assert!(!Graph::cycle(5).is_forest());
    }

    #[test]
    fn loops_and_duplicates_rejected() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(2)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 2))
        );
        assert_eq!(Graph::empty(63), Err(GraphError::TooManyVertices(63)));
    }

    fn brute_triangles(g: &Graph) -> usize {
        g.vertices()
            .subsets()
            .filter(|t| t.len() == 3 && g.induced_subgraph_is_clique(*t))
            .count()
    }

    proptest! {
        #[test]
        fn graph_invariants(n in 1usize..=8, mask in any::<u64>()) {
            let pairs = n * (n - 1) / 2;
            let mask = if pairs == 64 { mask } else { mask & ((1u64 << pairs) - 1) };
            let g = Graph::from_edge_mask(n, mask);
            prop_assert_eq!(g.edge_mask(), mask);
            prop_assert_eq!(g.complement().complement(), g.clone());
            prop_assert_eq!(g.triangles().len(), brute_triangles(&g));
            prop_assert_eq!(g.is_forest(), g.edge_count() == n - g.connected_components().len());
            let parts = g.connected_components();
            let union = parts.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
            prop_assert_eq!(union, g.vertices());
            prop_assert_eq!(g.complement().edge_count() + g.edge_count(), pairs);
        }
    }
}
