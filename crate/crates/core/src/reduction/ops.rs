//! Graph transformations with a known effect on `m_{L(G)}(1)`.
//!
//! Apart from [`reduced_graph`], which shifts the multiplicity by `p - q`,
//! each transformation preserves it (for [`contract_line_p4`] the preserved
//! quantity is `m_{A(G)}(-1)`) whenever its preconditions hold.

use thiserror::Error;

use crate::graph::{
    find_pendant_paths, pendant_profile, Derived, Graph, GraphError, PathKind, PathLocation,
    VertexMap,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(usize),
    #[error("vertex {0} is not a pendant vertex")]
    NotPendant(usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {vertex} has degree {degree}, at least 3 is required")]
    DegreeTooSmall { vertex: usize, degree: usize },
    #[error("w must be a neighbour of v other than the pendant u")]
    SplitTargetIsPendant,
    #[error("input is not a tree")]
    NotATree,
    #[error("path {0:?} is not a pendant P_3")]
    NotPendantP3(Vec<usize>),
    #[error("path {0:?} is not an internal P_{1}")]
    NotInternalPath(Vec<usize>, usize),
    #[error("the ends of {0:?} are adjacent, so the path closes a 4-cycle")]
    ClosedP4(Vec<usize>),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn check_vertex(g: &Graph, u: usize) -> Result<(), ReductionError> {
    if u < g.order() {
        Ok(())
    } else {
        Err(ReductionError::NoSuchVertex(u))
    }
}

fn check_pendant_edge(g: &Graph, u: usize, v: usize) -> Result<(), ReductionError> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if g.degree(u) != 1 {
        return Err(ReductionError::NotPendant(u));
    }
    if !g.has_edge(u, v) {
        return Err(ReductionError::NotAdjacent(u, v));
    }
    Ok(())
}

/// Result of deleting surplus pendant vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGraph {
    pub graph: Graph,
    pub map: VertexMap,
    /// `p(G) - q(G)`, the amount by which the multiplicity drops.
    pub offset: usize,
}

/// Deletes pendant vertices until every quasi-pendant vertex keeps exactly
/// one; the lowest-indexed pendant of each quasi-pendant vertex is kept.
pub fn reduced_graph(g: &Graph) -> ReducedGraph {
    let prof = pendant_profile(g);
    let mut removed = Vec::new();
    for &v in &prof.quasi_pendants {
        let owned = prof.pendants_of(v);
        // In P_2 each end owns the other; keep the edge intact.
        if owned.len() > 1 {
            removed.extend_from_slice(&owned[1..]);
        }
    }
    let Derived { graph, map } = g.remove_vertices(&removed).expect("pendant vertices exist");
    ReducedGraph {
        graph,
        map,
        offset: prof.p - prof.q,
    }
}

/// The reduction operation at pendant `u` with neighbour `v`: delete `u` and
/// `v`, and attach a fresh `P_2` (by one end) to every other former
/// neighbour of `v`. New vertices come after the survivors, two per
/// neighbour, in increasing order of that neighbour; the vertex joined to the
/// neighbour is the second of each pair.
pub fn reduction_operation(g: &Graph, u: usize, v: usize) -> Result<Derived, ReductionError> {
    check_pendant_edge(g, u, v)?;
    let others: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w != u).collect();
    let Derived { graph, map } = g.remove_vertices(&[u, v])?;
    let base = graph.order();
    let mut extra = Vec::new();
    for (i, &w) in others.iter().enumerate() {
        let (x, y) = (base + 2 * i, base + 2 * i + 1);
        extra.push((x, y));
        extra.push((y, map.get(w).expect("neighbours of v survive")));
    }
    let graph = graph.extended(2 * others.len(), &extra)?;
    Ok(Derived { graph, map })
}

/// Outcome of iterating the reduction operation to its fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinalReduction {
    pub graph: Graph,
    /// `(u, v)` of each application, in the labelling current at that step.
    pub applications: Vec<(usize, usize)>,
}

/// The lowest-indexed quasi-pendant vertex of degree at least 3, with its
/// lowest-indexed pendant neighbour.
pub fn next_reduction_site(g: &Graph) -> Option<(usize, usize)> {
    let prof = pendant_profile(g);
    prof.quasi_pendants
        .iter()
        .copied()
        .find(|&v| g.degree(v) >= 3)
        .map(|v| (prof.pendants_of(v)[0], v))
}

/// Applies the reduction operation at degree-3+ quasi-pendant vertices until
/// none is left. Each application removes one such vertex and creates none,
/// so at most `q(G)` applications happen.
pub fn final_reduction_graph(g: &Graph) -> FinalReduction {
    let mut graph = g.clone();
    let mut applications = Vec::new();
    while let Some((u, v)) = next_reduction_site(&graph) {
        graph = reduction_operation(&graph, u, v)
            .expect("site is a pendant edge")
            .graph;
        applications.push((u, v));
    }
    FinalReduction {
        graph,
        applications,
    }
}

/// Removes a pendant `P_3` from a tree.
pub fn delete_pendant_p3(t: &Graph, path: &PathLocation) -> Result<Derived, ReductionError> {
    if !t.is_tree() {
        return Err(ReductionError::NotATree);
    }
    if path.len() != 3 || path.kind != PathKind::PendantPath {
        return Err(ReductionError::NotPendantP3(path.vertices.clone()));
    }
    if path.vertices.iter().any(|&u| u >= t.order()) || !path.is_pendant_in(t) {
        return Err(ReductionError::NotPendantP3(path.vertices.clone()));
    }
    Ok(t.remove_vertices(&path.vertices)?)
}

/// For pendant `u ~ v` with `d_v >= 3` and `w ~ v`: removes the edge `vw`
/// and hangs a new `P_2` `x ~ y` off `w` via `wy`. `x` and `y` are vertices
/// `n` and `n + 1`.
pub fn edge_split(g: &Graph, u: usize, v: usize, w: usize) -> Result<Graph, ReductionError> {
    check_pendant_edge(g, u, v)?;
    check_vertex(g, w)?;
    if g.degree(v) < 3 {
        return Err(ReductionError::DegreeTooSmall {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if w == u {
        return Err(ReductionError::SplitTargetIsPendant);
    }
    if !g.has_edge(v, w) {
        return Err(ReductionError::NotAdjacent(v, w));
    }
    let n = g.order();
    Ok(g.without_edge(v, w)?
        .extended(2, &[(n, n + 1), (w, n + 1)])?)
}

fn require_internal(g: &Graph, path: &PathLocation, k: usize) -> Result<(), ReductionError> {
    if path.len() != k || path.vertices.iter().any(|&u| u >= g.order()) || !path.is_internal_in(g) {
        return Err(ReductionError::NotInternalPath(path.vertices.clone(), k));
    }
    Ok(())
}

/// Contracts an internal `P_4` to one vertex adjacent to everything the two
/// ends were adjacent to outside the path. The new vertex is the last one.
///
/// Paths whose ends are adjacent are rejected: contracting the 4-cycle they
/// span can change `m_{A(G)}(-1)` (a 4-cycle with a pendant vertex goes from
/// 0 to 1).
pub fn contract_line_p4(g: &Graph, path: &PathLocation) -> Result<Derived, ReductionError> {
    require_internal(g, path, 4)?;
    let ends = [path.vertices[0], path.vertices[3]];
    if g.has_edge(ends[0], ends[1]) {
        return Err(ReductionError::ClosedP4(path.vertices.clone()));
    }
    let Derived { graph, map } = g.remove_vertices(&path.vertices)?;
    let merged = graph.order();
    let mut outside: Vec<usize> = ends
        .iter()
        .flat_map(|&e| g.neighbors(e).iter().filter_map(|&w| map.get(w)))
        .collect();
    outside.sort_unstable();
    outside.dedup();
    let extra: Vec<_> = outside.into_iter().map(|w| (w, merged)).collect();
    let graph = graph.extended(1, &extra)?;
    Ok(Derived { graph, map })
}

/// In a tree, replaces an internal `P_5` `u1..u5` by the edge `u1 u5`.
/// Ends that are leaves are accepted.
pub fn contract_tree_p5(t: &Graph, path: &PathLocation) -> Result<Derived, ReductionError> {
    if !t.is_tree() {
        return Err(ReductionError::NotATree);
    }
    require_internal(t, path, 5)?;
    let v = &path.vertices;
    let Derived { graph, map } = t.remove_vertices(&v[1..4])?;
    let (a, b) = (
        map.get(v[0]).expect("end survives"),
        map.get(v[4]).expect("end survives"),
    );
    let graph = graph.with_edge(a, b)?;
    Ok(Derived { graph, map })
}

/// Every `(u, v, w)` that satisfies the preconditions of [`edge_split`].
pub fn edge_split_sites(g: &Graph) -> Vec<(usize, usize, usize)> {
    let prof = pendant_profile(g);
    let mut out = Vec::new();
    for (&u, &v) in &prof.pendant_owner {
        if g.degree(v) < 3 {
            continue;
        }
        for &w in g.neighbors(v) {
            if w != u {
                out.push((u, v, w));
            }
        }
    }
    out
}

/// The first pendant `P_3` in vertex-list order.
pub fn first_pendant_p3(g: &Graph) -> Option<PathLocation> {
    find_pendant_paths(g, 3).into_iter().next()
}
