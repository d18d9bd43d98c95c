use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::graph::{to_graph6, Graph};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub expected: String,
    pub actual: String,
    pub rule: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n_range: [usize; 2],
    pub graphs_checked: usize,
    pub violations: Vec<Violation>,
    /// How many times each rule was evaluated.
    pub checks: BTreeMap<String, usize>,
    pub seed: u64,
    pub engine: String,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn check_count(&self, rule_prefix: &str) -> usize {
        self.checks
            .iter()
            .filter(|(k, _)| k.starts_with(rule_prefix))
            .map(|(_, v)| v)
            .sum()
    }

    pub fn violations_of(&self, rule_prefix: &str) -> usize {
        self.violations
            .iter()
            .filter(|v| v.rule.starts_with(rule_prefix))
            .count()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} graphs, {} checks, {} violations (n in {}..={}, engine {})",
            self.suite,
            self.graphs_checked,
            self.checks.values().sum::<usize>(),
            self.violations.len(),
            self.n_range[0],
            self.n_range[1],
            self.engine
        )
    }
}

/// Accumulates the results of checks on many graphs; merging is
/// order-independent once [`Tally::finish`] sorts the violations.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub graphs: usize,
    pub checks: BTreeMap<String, usize>,
    pub violations: Vec<(usize, Violation)>,
    /// Probes that are reported but never fail: `[total, held]`.
    pub observed: BTreeMap<String, [usize; 2]>,
}

impl Tally {
    pub fn check(
        &mut self,
        rule: &str,
        g: &Graph,
        ok: bool,
        expected: impl Display,
        actual: impl Display,
    ) -> bool {
        *self.checks.entry(rule.to_owned()).or_default() += 1;
        if !ok {
            self.violations.push((
                g.order(),
                Violation {
                    graph6: to_graph6(g),
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                    rule: rule.to_owned(),
                },
            ));
        }
        ok
    }

    pub fn observe(&mut self, key: &str, held: bool) {
        let slot = self.observed.entry(key.to_owned()).or_default();
        slot[0] += 1;
        slot[1] += usize::from(held);
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.graphs += other.graphs;
        for (k, v) in other.checks {
            *self.checks.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
        for (k, [a, b]) in other.observed {
            let slot = self.observed.entry(k).or_default();
            slot[0] += a;
            slot[1] += b;
        }
        self
    }

    /// Violations come out with the smallest graphs first.
    #[allow(clippy::type_complexity)]
    pub fn finish_with_observations(
        mut self,
    ) -> (
        usize,
        BTreeMap<String, usize>,
        Vec<Violation>,
        BTreeMap<String, [usize; 2]>,
    ) {
        self.violations.sort();
        self.violations.dedup();
        let violations = self.violations.into_iter().map(|(_, v)| v).collect();
        (self.graphs, self.checks, violations, self.observed)
    }
}
