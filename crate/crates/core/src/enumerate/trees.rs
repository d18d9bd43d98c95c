use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::graph::{canonical_form, canonical_graph, canonical_labeling, CanonicalForm, Graph};

use super::EnumerateError;

pub const MAX_TREE_ORDER: usize = 16;

type Level = Arc<Vec<(CanonicalForm, Graph)>>;

fn cache() -> &'static Mutex<Vec<Level>> {
    static LEVELS: OnceLock<Mutex<Vec<Level>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(Vec::new()))
}

// Children of `parent` (order n - 1) whose canonical parent is `parent`:
// deleting the leaf with the largest canonical label must give back a graph
// isomorphic to `parent`.
fn children(parent_form: &CanonicalForm, parent: &Graph) -> BTreeMap<CanonicalForm, Graph> {
    let n = parent.order() + 1;
    let mut out = BTreeMap::new();
    for v in 0..parent.order() {
        let child = parent
            .extended(1, &[(v, n - 1)])
            .expect("new leaf is in range");
        let lab = canonical_labeling(&child);
        let last_leaf = (0..n)
            .filter(|&u| child.degree(u) == 1)
            .max_by_key(|&u| lab[u])
            .expect("trees with two or more vertices have leaves");
        let back = child
            .remove_vertices(&[last_leaf])
            .expect("leaf exists")
            .graph;
        if canonical_form(&back) == *parent_form {
            let rep = child.relabel(&lab);
            let form = CanonicalForm::from_canonical(&rep);
            out.entry(form).or_insert(rep);
        }
    }
    out
}

fn level(n: usize) -> Level {
    let mut levels = cache().lock().expect("tree cache is not poisoned");
    if levels.is_empty() {
        let (k1, form) = canonical_graph(&Graph::empty(1));
        levels.push(Arc::new(vec![(form, k1)]));
    }
    while levels.len() < n {
        let parents = Arc::clone(levels.last().expect("at least one level"));
        let mut next = BTreeMap::new();
        for (form, parent) in parents.iter() {
            next.extend(children(form, parent));
        }
        levels.push(Arc::new(next.into_iter().collect()));
    }
    Arc::clone(&levels[n - 1])
}

/// One tree per isomorphism class on `n` vertices, `1 <= n <= 16`, each in
/// canonical labelling, sorted by canonical form. Generated by canonical
/// augmentation, so no global deduplication is needed.
pub fn free_trees(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    Ok(free_trees_with_forms(n)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

/// [`free_trees`] paired with the canonical forms.
pub fn free_trees_with_forms(n: usize) -> Result<Vec<(CanonicalForm, Graph)>, EnumerateError> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(EnumerateError::OutOfRange {
            n,
            min: 1,
            max: MAX_TREE_ORDER,
        });
    }
    Ok(level(n).as_ref().clone())
}

/// Trees of every order from 1 to `max_n`.
pub fn free_trees_up_to(max_n: usize) -> Result<Vec<Graph>, EnumerateError> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(free_trees(n)?);
    }
    Ok(all)
}
