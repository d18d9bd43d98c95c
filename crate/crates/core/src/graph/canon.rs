//! Canonical labelling by colour refinement and individualisation.
//!
//! The search tree is the usual one: refine the colouring to a stable
//! partition, then branch on every vertex of the first non-singleton cell.
//! Each discrete leaf defines a relabelling; the canonical form is the
//! smallest relabelled adjacency string over all leaves. Two exact prunings
//! keep symmetric inputs cheap:
//!
//! * twins (same neighbourhood apart from each other) in the target cell are
//!   swapped by an automorphism fixing the branch prefix, so only one of them
//!   is explored;
//! * relabellings of two leaves that give the same string differ by an
//!   automorphism; automorphisms fixing the current prefix pointwise merge
//!   children into orbits, and only one child per orbit is explored.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{to_graph6, Graph};

/// graph6 string of the canonical relabelling; equal iff isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    // `rep` must already be in canonical labelling.
    pub(crate) fn from_canonical(rep: &Graph) -> Self {
        CanonicalForm(to_graph6(rep))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

const MAX_STORED_AUTOMORPHISMS: usize = 256;

struct Search<'g> {
    g: &'g Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

// Upper-triangle bits of `g` relabelled by `lab`, in graph6 bit order.
fn certificate(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; bits.div_ceil(64)];
    for (u, v) in g.edges() {
        let (a, b) = (lab[u].min(lab[v]), lab[u].max(lab[v]));
        let k = b * (b - 1) / 2 + a;
        words[k / 64] |= 1u64 << (63 - k % 64);
    }
    words
}

/// Refines `colors` until stable: each vertex is recoloured by its old colour
/// and the sorted multiset of neighbour colours. Colours come out as
/// `0..cells`, ordered consistently with the input colours.
fn refine(g: &Graph, colors: &mut Vec<usize>) {
    let n = g.order();
    let mut cells = count_cells(colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0; n];
        let mut color = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                color += 1;
            }
            next[sigs[i].2] = color;
        }
        let new_cells = if n == 0 { 0 } else { color + 1 };
        *colors = next;
        if new_cells == cells {
            return;
        }
        cells = new_cells;
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

fn are_twins(g: &Graph, a: usize, b: usize) -> bool {
    let na = g.neighbors(a).iter().filter(|&&x| x != b);
    let nb = g.neighbors(b).iter().filter(|&&x| x != a);
    na.eq(nb)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    fn run(&mut self, colors: Vec<usize>, prefix: &mut Vec<usize>) {
        let n = self.g.order();
        let mut size = vec![0usize; n.max(1)];
        for &c in &colors {
            size[c] += 1;
        }
        let target = (0..n).find(|&c| size[c] > 1);
        let Some(target) = target else {
            self.leaf(colors);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if explored.iter().any(|&c| are_twins(self.g, c, v)) {
                continue;
            }
            if self.same_orbit_as_explored(prefix, &explored, v) {
                continue;
            }
            let mut child: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| if w == v { 2 * c } else { 2 * c + 1 })
                .collect();
            refine(self.g, &mut child);
            prefix.push(v);
            self.run(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn same_orbit_as_explored(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        if explored.is_empty() {
            return false;
        }
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut any = false;
        for auto in &self.automorphisms {
            if prefix.iter().any(|&p| auto[p] != p) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, auto[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&c| find(&mut parent, c) == rv)
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let cert = certificate(self.g, &lab);
        match &self.best {
            None => self.best = Some((cert, lab)),
            Some((best_cert, best_lab)) => {
                if cert < *best_cert {
                    self.best = Some((cert, lab));
                } else if cert == *best_cert && self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS
                {
                    let n = lab.len();
                    let mut inv = vec![0; n];
                    for (v, &pos) in best_lab.iter().enumerate() {
                        inv[pos] = v;
                    }
                    let auto: Vec<usize> = (0..n).map(|v| inv[lab[v]]).collect();
                    self.automorphisms.push(auto);
                }
            }
        }
    }
}

/// A relabelling `lab` (vertex `v` becomes `lab[v]`) such that
/// `g.relabel(&lab)` is the same graph for every graph isomorphic to `g`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut colors = vec![0; n];
    refine(g, &mut colors);
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.run(colors, &mut Vec::new());
    search.best.expect("the search tree has a leaf").1
}

/// The canonical representative of `g`'s isomorphism class and its form.
pub fn canonical_graph(g: &Graph) -> (Graph, CanonicalForm) {
    let lab = canonical_labeling(g);
    let rep = g.relabel(&lab);
    let form = CanonicalForm(to_graph6(&rep));
    (rep, form)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_graph(g).1
}
