use std::collections::BTreeMap;

use serde::Serialize;

use super::{find_pendant_paths, Graph};

/// Pendant vertices (degree 1) and quasi-pendant vertices (adjacent to a
/// pendant vertex). In `P_2` both vertices are in both lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PendantProfile {
    pub pendants: Vec<usize>,
    pub quasi_pendants: Vec<usize>,
    pub pendant_owner: BTreeMap<usize, usize>,
    pub p: usize,
    pub q: usize,
}

impl PendantProfile {
    pub fn excess(&self) -> usize {
        self.p - self.q
    }

    /// Pendants hanging off `v`, in increasing order.
    pub fn pendants_of(&self, v: usize) -> Vec<usize> {
        self.pendant_owner
            .iter()
            .filter(|&(_, &owner)| owner == v)
            .map(|(&u, _)| u)
            .collect()
    }
}

pub fn pendant_profile(g: &Graph) -> PendantProfile {
    let mut pendant_owner = BTreeMap::new();
    for u in 0..g.order() {
        if g.degree(u) == 1 {
            pendant_owner.insert(u, g.neighbors(u)[0]);
        }
    }
    let pendants: Vec<usize> = pendant_owner.keys().copied().collect();
    let mut quasi_pendants: Vec<usize> = pendant_owner.values().copied().collect();
    quasi_pendants.sort_unstable();
    quasi_pendants.dedup();
    PendantProfile {
        p: pendants.len(),
        q: quasi_pendants.len(),
        pendants,
        quasi_pendants,
        pendant_owner,
    }
}

pub fn is_reduced(g: &Graph) -> bool {
    let prof = pendant_profile(g);
    prof.p == prof.q
}

/// Membership in the class of reduced graphs without a pendant `P_3`.
pub fn in_class_g(g: &Graph) -> bool {
    is_reduced(g) && find_pendant_paths(g, 3).is_empty()
}

pub fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && (0..g.order()).all(|u| g.degree(u) == 2)
}

// Every component of `g - center` is a `P_2`, with one end adjacent to
// `center` and the other a leaf of `g`; `ignore` is a neighbour of `center`
// excluded from the check (used for the joining edge of double stars).
fn legs_are_p2(g: &Graph, center: usize, ignore: Option<usize>) -> Option<usize> {
    let mut legs = 0;
    for &a in g.neighbors(center) {
        if Some(a) == ignore {
            continue;
        }
        if g.degree(a) != 2 {
            return None;
        }
        let b = g.neighbors(a).iter().copied().find(|&w| w != center)?;
        if g.degree(b) != 1 {
            return None;
        }
        legs += 1;
    }
    Some(legs)
}

/// The centre of a star-like tree: a tree on at least 5 vertices in which
/// removing the centre leaves only copies of `P_2`.
pub fn star_like_center(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 5 || n.is_multiple_of(2) || !g.is_tree() {
        return None;
    }
    let s = (n - 1) / 2;
    (0..n).find(|&c| g.degree(c) == s && legs_are_p2(g, c, None) == Some(s))
}

pub fn is_star_like(g: &Graph) -> bool {
    star_like_center(g).is_some()
}

/// The two centres of a double-star-like tree: two star-like trees whose
/// centres are joined by an edge.
pub fn double_star_like_centers(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    if n < 10 || !g.is_tree() {
        return None;
    }
    for (c1, c2) in g.edges() {
        let s = legs_are_p2(g, c1, Some(c2));
        let t = legs_are_p2(g, c2, Some(c1));
        if let (Some(s), Some(t)) = (s, t) {
            if s >= 2 && t >= 2 && 2 * (s + t) + 2 == n {
                return Some((c1, c2));
            }
        }
    }
    None
}

pub fn is_double_star_like(g: &Graph) -> bool {
    double_star_like_centers(g).is_some()
}
