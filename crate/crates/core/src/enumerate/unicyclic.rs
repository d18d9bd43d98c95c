use std::collections::BTreeMap;

use crate::graph::{canonical_graph, Graph};

use super::{free_trees, EnumerateError};

pub const MIN_UNICYCLIC_ORDER: usize = 3;
pub const MAX_UNICYCLIC_ORDER: usize = 14;

/// One connected unicyclic graph per isomorphism class on `n` vertices,
/// `3 <= n <= 14`, in canonical labelling and canonical-form order.
pub fn unicyclic_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    unicyclic_graphs_where(n, |_| true)
}

/// The unicyclic graphs satisfying `keep`, which must be an isomorphism
/// invariant. It is tested before canonicalisation.
pub fn unicyclic_graphs_where(
    n: usize,
    keep: impl Fn(&Graph) -> bool,
) -> Result<Vec<Graph>, EnumerateError> {
    if !(MIN_UNICYCLIC_ORDER..=MAX_UNICYCLIC_ORDER).contains(&n) {
        return Err(EnumerateError::OutOfRange {
            n,
            min: MIN_UNICYCLIC_ORDER,
            max: MAX_UNICYCLIC_ORDER,
        });
    }
    let mut seen = BTreeMap::new();
    for t in free_trees(n)? {
        for (u, v) in t.non_edges() {
            let g = t.with_edge(u, v).expect("non-edge is addable");
            if keep(&g) {
                let (rep, form) = canonical_graph(&g);
                seen.entry(form).or_insert(rep);
            }
        }
    }
    Ok(seen.into_values().collect())
}
