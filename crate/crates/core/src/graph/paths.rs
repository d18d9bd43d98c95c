//! Pendant paths and internal paths.

use serde::{Deserialize, Serialize};

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathKind {
    PendantPath,
    InternalPath,
}

/// An occurrence of a path in a graph.
///
/// For a pendant path the vertices run from the attachment end to the leaf:
/// `vertices[k-1]` has degree 1, every other vertex has degree 2, and
/// `vertices[0]` has one neighbour outside the path (the vertex of the rest
/// of the graph it is joined to). For an internal path every interior vertex
/// has degree 2 and the two ends have no common neighbour.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathLocation {
    pub vertices: Vec<usize>,
    pub kind: PathKind,
}

impl PathLocation {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// For a pendant path, the vertex of the rest of the graph it hangs off.
    pub fn attachment(&self, g: &Graph) -> Option<usize> {
        if self.kind != PathKind::PendantPath {
            return None;
        }
        let first = *self.vertices.first()?;
        let next = self.vertices.get(1).copied();
        g.neighbors(first)
            .iter()
            .copied()
            .find(|&w| Some(w) != next)
    }

    /// An internal path whose ends include a leaf. Such paths are accepted as
    /// internal whenever the no-common-neighbour condition holds.
    pub fn has_leaf_endpoint(&self, g: &Graph) -> bool {
        self.kind == PathKind::InternalPath
            && [self.vertices.first(), self.vertices.last()]
                .into_iter()
                .flatten()
                .any(|&u| g.degree(u) == 1)
    }

    pub fn is_pendant_in(&self, g: &Graph) -> bool {
        self.kind == PathKind::PendantPath
            && !self.vertices.is_empty()
            && find_pendant_paths(g, self.len()).contains(self)
    }

    pub fn is_internal_in(&self, g: &Graph) -> bool {
        self.kind == PathKind::InternalPath && self.len() >= 3 && is_internal(g, &self.vertices)
    }
}

/// Every pendant `P_k`, one per leaf that ends one, sorted by vertex list.
///
/// A pendant path on `k` vertices ends in a leaf, has all other vertices of
/// degree 2, and is joined to the rest of the graph by a single edge. A
/// longer pendant path contains pendant paths of every smaller order.
pub fn find_pendant_paths(g: &Graph, k: usize) -> Vec<PathLocation> {
    if k == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for leaf in 0..g.order() {
        if g.degree(leaf) != 1 {
            continue;
        }
        if let Some(vertices) = walk_from_leaf(g, leaf, k) {
            out.push(PathLocation {
                vertices,
                kind: PathKind::PendantPath,
            });
        }
    }
    out.sort();
    out
}

fn walk_from_leaf(g: &Graph, leaf: usize, k: usize) -> Option<Vec<usize>> {
    let mut path = vec![leaf];
    let mut prev = None;
    let mut cur = leaf;
    // `cur` must have a neighbour beyond the path for the walk to continue.
    while path.len() < k {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| Some(w) != prev)?;
        if g.degree(next) != 2 {
            return None;
        }
        prev = Some(cur);
        cur = next;
        path.push(cur);
    }
    // The first vertex must still be joined to something outside the path.
    g.neighbors(cur)
        .iter()
        .copied()
        .find(|&w| Some(w) != prev)?;
    path.reverse();
    Some(path)
}

fn is_internal(g: &Graph, vertices: &[usize]) -> bool {
    let k = vertices.len();
    if k < 2 {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &u in vertices {
        if u >= g.order() || seen[u] {
            return false;
        }
        seen[u] = true;
    }
    if vertices.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return false;
    }
    if vertices[1..k - 1].iter().any(|&u| g.degree(u) != 2) {
        return false;
    }
    let (a, b) = (vertices[0], vertices[k - 1]);
    !g.neighbors(a).iter().any(|&w| g.has_edge(b, w))
}

/// Every internal `P_k` (`k >= 3`): consecutive vertices adjacent, interior
/// vertices of degree 2, ends without a common neighbour. Each path is
/// reported once, in the orientation with the smaller vertex list, and the
/// list is sorted.
///
/// For `k = 3` the middle vertex is itself a common neighbour of the ends, so
/// no internal `P_3` exists.
pub fn find_internal_paths(g: &Graph, k: usize) -> Vec<PathLocation> {
    if k < 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for start in 0..g.order() {
        for &second in g.neighbors(start) {
            if g.degree(second) != 2 {
                continue;
            }
            let mut path = vec![start, second];
            while path.len() < k {
                let cur = path[path.len() - 1];
                let prev = path[path.len() - 2];
                if path.len() > 2 && g.degree(cur) != 2 {
                    break;
                }
                match g.neighbors(cur).iter().copied().find(|&w| w != prev) {
                    Some(next) => path.push(next),
                    None => break,
                }
            }
            if path.len() != k || !is_internal(g, &path) {
                continue;
            }
            let mut rev = path.clone();
            rev.reverse();
            if path <= rev {
                out.push(PathLocation {
                    vertices: path,
                    kind: PathKind::InternalPath,
                });
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pendant(v: &[usize]) -> PathLocation {
        PathLocation {
            vertices: v.to_vec(),
            kind: PathKind::PendantPath,
        }
    }

    fn internal(v: &[usize]) -> PathLocation {
        PathLocation {
            vertices: v.to_vec(),
            kind: PathKind::InternalPath,
        }
    }

    #[test]
    fn pendant_p3_from_both_ends_of_p6() {
        let p6 = Graph::path(6);
        assert_eq!(
            find_pendant_paths(&p6, 3),
            vec![pendant(&[2, 1, 0]), pendant(&[3, 4, 5])]
        );
        assert_eq!(pendant(&[2, 1, 0]).attachment(&p6), Some(3));
    }

    #[test]
    fn no_pendant_paths_where_none_exist() {
        assert!(find_pendant_paths(&Graph::star(3), 3).is_empty());
        assert_eq!(find_pendant_paths(&Graph::star(3), 1).len(), 3);
        assert!(find_pendant_paths(&Graph::cycle(6), 2).is_empty());
        // P_3 on its own is not hanging off anything.
        assert!(find_pendant_paths(&Graph::path(3), 3).is_empty());
        assert_eq!(find_pendant_paths(&Graph::path(4), 3).len(), 2);
    }

    #[test]
    fn attachment_must_have_degree_two() {
        // Spider with legs 2, 2, 1: the legs end at a degree-3 centre.
        let t = Graph::spider(&[2, 2, 1]);
        assert!(find_pendant_paths(&t, 3).is_empty());
        assert_eq!(find_pendant_paths(&t, 2).len(), 2);
    }

    #[test]
    fn internal_paths_between_cycle_hubs() {
        let g = Graph::cycle(9)
            .extended(3, &[(0, 9), (3, 10), (6, 11)])
            .unwrap();
        let found = find_internal_paths(&g, 4);
        assert!(found.contains(&internal(&[0, 1, 2, 3])));
        assert!(found.contains(&internal(&[3, 4, 5, 6])));
        assert!(found.contains(&internal(&[0, 8, 7, 6])));
        assert_eq!(found.len(), 3);
    }

    #[test]
    fn internal_path_exclusions() {
        assert!(find_internal_paths(&Graph::cycle(4), 3).is_empty());
        assert!(find_internal_paths(&Graph::path(6), 3).is_empty());
        let p6 = Graph::path(6);
        let found = find_internal_paths(&p6, 4);
        assert!(found.contains(&internal(&[1, 2, 3, 4])));
        assert!(found.iter().all(|p| p.is_internal_in(&p6)));
        // Leaf ends are allowed.
        assert!(found.contains(&internal(&[0, 1, 2, 3])));
        assert!(internal(&[0, 1, 2, 3]).has_leaf_endpoint(&p6));
        // In C_5 the ends of any P_4 share the fifth vertex.
        assert!(find_internal_paths(&Graph::cycle(5), 4).is_empty());
    }
}
