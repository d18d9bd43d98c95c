use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    canonical_form, find_internal_paths, find_pendant_paths, is_cycle, is_double_star_like,
    is_star_like, parse_graph6, pendant_profile, CanonicalForm, Graph,
};
use crate::linalg::laplacian_multiplicity_one;

use super::ops::{
    contract_tree_p5, delete_pendant_p3, edge_split, edge_split_sites, reduced_graph,
    reduction_operation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    PendantCluster,
    ReductionOperation,
    DeletePendantP3,
    EdgeSplit,
    ContractInternalP5,
    ContractLineP4,
    StarLikeZero,
    DoubleStarLikeZero,
    CycleClosedForm,
    ExactRankFallback,
}

impl Rule {
    /// Terminal rules close a component and record its residual multiplicity.
    pub fn is_terminal(self) -> bool {
        matches!(
            self,
            Rule::StarLikeZero
                | Rule::DoubleStarLikeZero
                | Rule::CycleClosedForm
                | Rule::ExactRankFallback
        )
    }
}

/// One step on a connected graph. `after` may be disconnected; its
/// components are processed independently afterwards.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub rule: Rule,
    #[serde(rename = "before_g6")]
    pub before: CanonicalForm,
    #[serde(rename = "after_g6")]
    pub after: CanonicalForm,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub input_g6: String,
    pub steps: Vec<ReductionStep>,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("cannot decode {0:?}")]
    BadGraph6(String),
    #[error("step {0}: graph is not pending")]
    NotPending(usize),
    #[error("step {0}: graph is disconnected")]
    Disconnected(usize),
    #[error("step {0}: rule does not apply")]
    NotApplicable(usize),
    #[error("step {0}: no application of the rule yields the recorded graph")]
    WrongResult(usize),
    #[error("step {step}: offset {recorded} recorded, {expected} expected")]
    WrongOffset {
        step: usize,
        recorded: usize,
        expected: usize,
    },
    #[error("step {0}: rule preserves an adjacency multiplicity, not a Laplacian one")]
    WrongInvariant(usize),
    #[error("{0} components left open")]
    Unfinished(usize),
    #[error("total {recorded} recorded, offsets sum to {sum}")]
    WrongTotal { recorded: usize, sum: usize },
}

fn decode(form: &CanonicalForm) -> Result<Graph, ReplayError> {
    parse_graph6(form.as_str()).map_err(|_| ReplayError::BadGraph6(form.as_str().to_owned()))
}

/// Canonical forms of the connected components of `g`.
pub(crate) fn component_forms(g: &Graph) -> Vec<CanonicalForm> {
    g.component_graphs().iter().map(canonical_form).collect()
}

// Every graph the rule can turn `g` into, with the offset it carries.
fn successors(rule: Rule, g: &Graph) -> Vec<(Graph, usize)> {
    match rule {
        Rule::PendantCluster => {
            let r = reduced_graph(g);
            if r.offset == 0 {
                vec![]
            } else {
                vec![(r.graph, r.offset)]
            }
        }
        Rule::ReductionOperation => {
            let prof = pendant_profile(g);
            prof.pendant_owner
                .iter()
                .filter(|&(_, &v)| g.degree(v) >= 3)
                .map(|(&u, &v)| (reduction_operation(g, u, v).expect("valid site").graph, 0))
                .collect()
        }
        Rule::DeletePendantP3 if g.is_tree() => find_pendant_paths(g, 3)
            .iter()
            .map(|p| (delete_pendant_p3(g, p).expect("valid path").graph, 0))
            .collect(),
        Rule::EdgeSplit => edge_split_sites(g)
            .into_iter()
            .map(|(u, v, w)| (edge_split(g, u, v, w).expect("valid site"), 0))
            .collect(),
        Rule::ContractInternalP5 if g.is_tree() => find_internal_paths(g, 5)
            .iter()
            .map(|p| (contract_tree_p5(g, p).expect("valid path").graph, 0))
            .collect(),
        Rule::StarLikeZero if is_star_like(g) => vec![(g.clone(), 0)],
        Rule::DoubleStarLikeZero if is_double_star_like(g) => vec![(g.clone(), 0)],
        Rule::CycleClosedForm if is_cycle(g) => {
            vec![(g.clone(), if g.order().is_multiple_of(6) { 2 } else { 0 })]
        }
        Rule::ExactRankFallback => vec![(g.clone(), laplacian_multiplicity_one(g))],
        _ => vec![],
    }
}

impl ReductionTrace {
    /// Re-derives every step from the input: each `before` must be a pending
    /// component, some application of the rule must give `after` with the
    /// recorded offset, every component must end in a terminal rule, and the
    /// offsets must sum to `total`.
    pub fn replay(&self) -> Result<(), ReplayError> {
        let input = parse_graph6(&self.input_g6)
            .map_err(|_| ReplayError::BadGraph6(self.input_g6.clone()))?;
        let mut pending = component_forms(&input);
        let mut sum = 0;
        for (i, step) in self.steps.iter().enumerate() {
            let slot = pending
                .iter()
                .position(|f| *f == step.before)
                .ok_or(ReplayError::NotPending(i))?;
            pending.swap_remove(slot);
            if step.rule == Rule::ContractLineP4 {
                return Err(ReplayError::WrongInvariant(i));
            }
            let g = decode(&step.before)?;
            if !g.is_connected() {
                return Err(ReplayError::Disconnected(i));
            }
            let options = successors(step.rule, &g);
            if options.is_empty() {
                return Err(ReplayError::NotApplicable(i));
            }
            let mut matched = None;
            for (h, offset) in options {
                if canonical_form(&h) == step.after {
                    matched = Some((h, offset));
                    break;
                }
            }
            let (h, expected) = matched.ok_or(ReplayError::WrongResult(i))?;
            if expected != step.offset {
                return Err(ReplayError::WrongOffset {
                    step: i,
                    recorded: step.offset,
                    expected,
                });
            }
            sum += step.offset;
            if !step.rule.is_terminal() {
                pending.extend(component_forms(&h));
            }
        }
        if !pending.is_empty() {
            return Err(ReplayError::Unfinished(pending.len()));
        }
        if sum != self.total {
            return Err(ReplayError::WrongTotal {
                recorded: self.total,
                sum,
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
