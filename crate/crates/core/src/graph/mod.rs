//! Simple undirected graphs on vertices `0..n`.
//!
//! A [`Graph`] is immutable once built. Operations that remove vertices
//! re-index the survivors to `0..n'` preserving their relative order and hand
//! back the old-to-new [`VertexMap`] alongside the new graph.

mod canon;
mod graph6;
mod paths;
mod structure;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, CanonicalForm};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use paths::{find_internal_paths, find_pendant_paths, PathKind, PathLocation};
pub use structure::{
    double_star_like_centers, in_class_g, is_cycle, is_double_star_like, is_reduced, is_star_like,
    pendant_profile, star_like_center, PendantProfile,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        n: usize,
    },
    #[error("edge {index} is a self-loop on vertex {u}")]
    SelfLoop { index: usize, u: usize },
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(usize),
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed edge list: {0}")]
    EdgeListSyntax(String),
}

/// Old-to-new vertex index map produced by operations that derive a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap(Vec<Option<usize>>);

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap((0..n).map(Some).collect())
    }

    /// The new index of an old vertex, or `None` if it was deleted.
    pub fn get(&self, old: usize) -> Option<usize> {
        self.0.get(old).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A graph derived from another one, with the vertex correspondence.
///
/// Vertices of `graph` that are not in the image of `map` are freshly added.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derived {
    pub graph: Graph,
    pub map: VertexMap,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    // Sorted, duplicate-free neighbour lists; equality is edge-set equality.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from vertex pairs, dropping duplicate pairs.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut sets = vec![BTreeSet::new(); n];
        for (index, &(u, v)) in pairs.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { index, u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, u });
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Self::from_sets(sets))
    }

    fn from_sets(sets: Vec<BTreeSet<usize>>) -> Self {
        Graph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edge_list(n, &edges).expect("path edges are valid")
    }

    /// The cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &edges).expect("cycle edges are valid")
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edge_list(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_edge_list(n, &edges).expect("complete graph edges are valid")
    }

    /// A centre (vertex 0) with one pendant path per entry of `legs`, each of
    /// the given number of vertices.
    pub fn spider(legs: &[usize]) -> Self {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::from_edge_list(next, &edges).expect("spider edges are valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Non-adjacent vertex pairs `(u, v)` with `u < v`, lexicographic.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn to_sets(&self) -> Vec<BTreeSet<usize>> {
        self.adj
            .iter()
            .map(|nbrs| nbrs.iter().copied().collect())
            .collect()
    }

    fn check_vertex(&self, u: usize) -> Result<(), GraphError> {
        if u < self.order() {
            Ok(())
        } else {
            Err(GraphError::NoSuchVertex(u))
        }
    }

    /// Adds `k` isolated vertices (numbered after the existing ones) and the
    /// given edges, which may mention the new vertices.
    pub fn extended(&self, k: usize, extra: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = self.edges();
        edges.extend_from_slice(extra);
        Self::from_edge_list(self.order() + k, &edges)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.extended(0, &[(u, v)])
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(u, v));
        }
        let mut sets = self.to_sets();
        sets[u].remove(&v);
        sets[v].remove(&u);
        Ok(Self::from_sets(sets))
    }

    /// `G - S`: deletes the given vertices and their incident edges.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<Derived, GraphError> {
        let n = self.order();
        let mut gone = vec![false; n];
        for &u in removed {
            self.check_vertex(u)?;
            gone[u] = true;
        }
        let mut map = vec![None; n];
        let mut next = 0;
        for u in 0..n {
            if !gone[u] {
                map[u] = Some(next);
                next += 1;
            }
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter_map(|(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let graph = Self::from_edge_list(next, &edges).expect("re-indexed edges are valid");
        Ok(Derived {
            graph,
            map: VertexMap(map),
        })
    }

    /// The subgraph induced by `keep`, re-indexed in increasing vertex order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Derived, GraphError> {
        let mut kept = vec![false; self.order()];
        for &u in keep {
            self.check_vertex(u)?;
            kept[u] = true;
        }
        let removed: Vec<_> = (0..self.order()).filter(|&u| !kept[u]).collect();
        self.remove_vertices(&removed)
    }

    /// Relabels vertex `v` to `perm[v]`; `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_edge_list(self.order(), &edges).expect("relabelled edges are valid")
    }

    /// Places `other` after `self`, shifting its vertices by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.order();
        let extra: Vec<_> = other
            .edges()
            .into_iter()
            .map(|(u, v)| (u + shift, v + shift))
            .collect();
        self.extended(other.order(), &extra)
            .expect("union edges are valid")
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components as standalone graphs, in the order of [`Graph::components`].
    pub fn component_graphs(&self) -> Vec<Graph> {
        self.components()
            .iter()
            .map(|c| {
                self.induced_subgraph(c)
                    .expect("component vertices exist")
                    .graph
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.order()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.size() == self.order()
    }

    /// Whether the graph is 2-colourable.
    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut side = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("queued vertices are coloured");
                for &v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// BFS distances from `s`; unreachable vertices are `None`.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut best = 0;
        for s in 0..self.order() {
            for d in self.distances_from(s).into_iter().flatten() {
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// The line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.order()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut pairs = Vec::new();
        for at in &incident {
            for (a, &i) in at.iter().enumerate() {
                for &j in &at[a + 1..] {
                    pairs.push((i, j));
                }
            }
        }
        Graph::from_edge_list(edges.len(), &pairs).expect("line graph edges are valid")
    }

    /// Parses the edge-list text format: a header line `n m`, then `m` lines
    /// `u v` with 0-based vertices.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let syntax = |msg: String| GraphError::EdgeListSyntax(msg);
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| syntax("missing header".into()))?;
        let nums = parse_pair(header).ok_or_else(|| syntax(format!("bad header {header:?}")))?;
        let (n, m) = nums;
        let mut pairs = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            let pair = parse_pair(line).ok_or_else(|| syntax(format!("bad edge line {line:?}")))?;
            pairs.push(pair);
        }
        if pairs.len() != m {
            return Err(syntax(format!("expected {m} edges, found {}", pairs.len())));
        }
        if let Some(extra) = lines.next() {
            return Err(syntax(format!("trailing line {extra:?}")));
        }
        Graph::from_edge_list(n, &pairs)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.order(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}
