//! Isomorph-free generation of trees and unicyclic graphs, class filters and
//! seeded random sampling.

mod random;
mod trees;
mod unicyclic;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{find_pendant_paths, is_reduced, Graph};

pub use random::random_connected_graph;
pub use trees::{free_trees, free_trees_up_to, free_trees_with_forms, MAX_TREE_ORDER};
pub use unicyclic::{
    unicyclic_graphs, unicyclic_graphs_where, MAX_UNICYCLIC_ORDER, MIN_UNICYCLIC_ORDER,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {n} is outside the supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
    #[error("edge probability {num}/{den} is not strictly between 0 and 1")]
    BadProbability { num: u64, den: u64 },
    #[error("unknown class or filter {0:?}")]
    UnknownName(String),
    #[error("no exhaustive generator for connected graphs")]
    NotEnumerable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Base {
    Tree,
    Unicyclic,
    AnyConnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    Reduced,
    NoPendantP3,
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::Reduced => is_reduced(g),
            Filter::NoPendantP3 => find_pendant_paths(g, 3).is_empty(),
        }
    }
}

impl FromStr for Filter {
    type Err = EnumerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "reduced" => Ok(Filter::Reduced),
            "no-pendant-p3" | "noP3" | "no-p3" => Ok(Filter::NoPendantP3),
            _ => Err(EnumerateError::UnknownName(s.to_owned())),
        }
    }
}

impl FromStr for Base {
    type Err = EnumerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tree" | "trees" => Ok(Base::Tree),
            "unicyclic" => Ok(Base::Unicyclic),
            "connected" | "any-connected" => Ok(Base::AnyConnected),
            _ => Err(EnumerateError::UnknownName(s.to_owned())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphClass {
    pub base: Base,
    pub filters: Vec<Filter>,
}

impl GraphClass {
    pub fn new(base: Base, filters: &[Filter]) -> Self {
        let mut filters = filters.to_vec();
        filters.sort_by_key(|f| *f as u8);
        filters.dedup();
        GraphClass { base, filters }
    }

    /// Reduced trees without a pendant `P_3`.
    pub fn reduced_trees() -> Self {
        GraphClass::new(Base::Tree, &[Filter::Reduced, Filter::NoPendantP3])
    }

    /// Reduced unicyclic graphs without a pendant `P_3`.
    pub fn reduced_unicyclic() -> Self {
        GraphClass::new(Base::Unicyclic, &[Filter::Reduced, Filter::NoPendantP3])
    }

    pub fn contains(&self, g: &Graph) -> bool {
        let base = match self.base {
            Base::Tree => g.is_tree(),
            Base::Unicyclic => g.is_unicyclic(),
            Base::AnyConnected => g.is_connected(),
        };
        base && self.filters.iter().all(|f| f.accepts(g))
    }

    /// Every member of order `n`, one per isomorphism class.
    pub fn enumerate(&self, n: usize) -> Result<Vec<Graph>, EnumerateError> {
        match self.base {
            Base::Tree => Ok(filter_class(free_trees(n)?, self)),
            Base::Unicyclic => unicyclic_graphs_where(n, |g| self.contains(g)),
            Base::AnyConnected => Err(EnumerateError::NotEnumerable),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.base {
            Base::Tree => "tree",
            Base::Unicyclic => "unicyclic",
            Base::AnyConnected => "connected",
        };
        f.write_str(base)?;
        for filter in &self.filters {
            let name = match filter {
                Filter::Reduced => "reduced",
                Filter::NoPendantP3 => "no-pendant-p3",
            };
            write!(f, "+{name}")?;
        }
        Ok(())
    }
}

/// The members of `graphs` that belong to `class`, in their original order.
pub fn filter_class(graphs: impl IntoIterator<Item = Graph>, class: &GraphClass) -> Vec<Graph> {
    graphs.into_iter().filter(|g| class.contains(g)).collect()
}
