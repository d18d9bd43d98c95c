//! Graphs attaining the upper bounds on `m_{L(G)}(1)` for reduced trees and
//! reduced unicyclic graphs without a pendant `P_3`.
//!
//! # Trees
//!
//! Order `n = 6 + 4k`. The base tree on `0..6` is a hub `0` carrying the
//! leaf `1` and the two legs `0-2-3` and `0-4-5`. Gadget `i` (for
//! `i = 0..k`) occupies `b = 6 + 4i` to `b + 3`, named `B = b`, `C = b + 1`,
//! `A = b + 2`, `E = b + 3`, with edges `e-B`, `B-C`, `B-A`, `A-E`, where
//! `e` is the open end: vertex `5` for the first gadget and the previous
//! gadget's `E` afterwards. The result is a chain of `k + 1` hubs, each with
//! one leaf, consecutive hubs joined through two degree-2 vertices, and a
//! pendant `P_2` on both end hubs.
//!
//! # Unicyclic graphs
//!
//! Order `n = 4k`. The cycle `0..3k` in order, plus a leaf `3k + i` on cycle
//! vertex `3i` for `i = 0..k`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{EnumerateError, GraphClass};
use crate::graph::{in_class_g, Graph};
use crate::linalg::laplacian_multiplicity_one;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Tree,
    Unicyclic,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("no extremal {family:?} of order {n}: {reason}")]
    BadOrder {
        family: Family,
        n: usize,
        reason: &'static str,
    },
    #[error("constructed graph has multiplicity {actual}, expected {expected}")]
    VerificationFailed { expected: usize, actual: usize },
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalSpec {
    pub family: Family,
    pub n: usize,
    /// Number of gadgets for trees, number of pendant vertices for
    /// unicyclic graphs; also the multiplicity attained.
    pub k: usize,
}

impl ExtremalSpec {
    pub fn new(family: Family, n: usize) -> Result<Self, ExtremalError> {
        let bad = |reason| Err(ExtremalError::BadOrder { family, n, reason });
        match family {
            Family::Tree if n < 6 => bad("order must be at least 6"),
            Family::Tree if n % 4 != 2 => bad("order must be 2 mod 4"),
            Family::Tree => Ok(ExtremalSpec {
                family,
                n,
                k: (n - 6) / 4,
            }),
            Family::Unicyclic if n < 12 => bad("order must be at least 12"),
            Family::Unicyclic if !n.is_multiple_of(4) => bad("order must be 0 mod 4"),
            Family::Unicyclic => Ok(ExtremalSpec {
                family,
                n,
                k: n / 4,
            }),
        }
    }

    /// Vertices `[B, C, A, E]` of each tree gadget, in attachment order.
    pub fn gadgets(&self) -> Vec<[usize; 4]> {
        match self.family {
            Family::Tree => (0..self.k)
                .map(|i| {
                    let b = 6 + 4 * i;
                    [b, b + 1, b + 2, b + 3]
                })
                .collect(),
            Family::Unicyclic => Vec::new(),
        }
    }

    pub fn build(&self) -> Result<Graph, ExtremalError> {
        let g = match self.family {
            Family::Tree => {
                let mut edges = vec![(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)];
                let mut open = 5;
                for [b, c, a, e] in self.gadgets() {
                    edges.extend([(open, b), (b, c), (b, a), (a, e)]);
                    open = e;
                }
                Graph::from_edge_list(self.n, &edges)
            }
            Family::Unicyclic => {
                let c = 3 * self.k;
                let mut edges: Vec<_> = (0..c).map(|i| (i, (i + 1) % c)).collect();
                edges.extend((0..self.k).map(|i| (3 * i, c + i)));
                Graph::from_edge_list(self.n, &edges)
            }
        }
        .expect("construction stays in range");
        let actual = laplacian_multiplicity_one(&g);
        if actual != self.k || !in_class_g(&g) {
            return Err(ExtremalError::VerificationFailed {
                expected: self.k,
                actual,
            });
        }
        Ok(g)
    }
}

/// The tree of order `n` attaining `m = (n - 6) / 4`, checked by the exact
/// engine before it is returned.
pub fn extremal_tree(n: usize) -> Result<Graph, ExtremalError> {
    ExtremalSpec::new(Family::Tree, n)?.build()
}

/// The unicyclic graph of order `n` attaining `m = n / 4`, checked by the
/// exact engine before it is returned.
pub fn extremal_unicyclic(n: usize) -> Result<Graph, ExtremalError> {
    ExtremalSpec::new(Family::Unicyclic, n)?.build()
}

/// Removes the last gadget of [`extremal_tree`]`(n)`, giving
/// [`extremal_tree`]`(n - 4)` with the same labels.
pub fn peel_last_gadget(spec: &ExtremalSpec, t: &Graph) -> Option<Graph> {
    let last = *spec.gadgets().last()?;
    Some(t.remove_vertices(&last).ok()?.graph)
}

/// `4 m <= n - 6` for trees and `4 m <= n` for unicyclic graphs, as the
/// right-hand side (which may be negative).
pub fn bound_times_four(family: Family, n: usize) -> i64 {
    match family {
        Family::Tree => n as i64 - 6,
        Family::Unicyclic => n as i64,
    }
}

/// Every member of the family's reduced class without pendant `P_3` of
/// order `n` whose multiplicity meets the bound, paired with it.
pub fn find_extremal_by_enumeration(
    n: usize,
    family: Family,
) -> Result<Vec<(Graph, usize)>, ExtremalError> {
    let class = match family {
        Family::Tree => GraphClass::reduced_trees(),
        Family::Unicyclic => GraphClass::reduced_unicyclic(),
    };
    let target = bound_times_four(family, n);
    let members = class.enumerate(n)?;
    Ok(members
        .into_par_iter()
        .filter_map(|g| {
            let m = laplacian_multiplicity_one(&g);
            (4 * m as i64 == target).then_some((g, m))
        })
        .collect())
}
