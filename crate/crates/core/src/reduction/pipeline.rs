use std::collections::VecDeque;

use crate::graph::{
    canonical_form, find_pendant_paths, is_cycle, is_double_star_like, is_star_like, parse_graph6,
    to_graph6, CanonicalForm, Graph,
};
use crate::linalg::laplacian_multiplicity_one;

use super::ops::{delete_pendant_p3, reduced_graph};
use super::trace::{component_forms, ReductionStep, ReductionTrace, Rule};

/// `m_{L(G)}(1)` through the reduction rules, with a replayable trace.
///
/// Components are handled separately. On each one the rules are tried in
/// this order: pendant clusters, pendant `P_3` deletion (trees only), the
/// star-like and double-star-like shapes, bare cycles, and finally an exact
/// rank computation.
pub fn multiplicity_fast(g: &Graph) -> (usize, ReductionTrace) {
    multiplicity_fast_with(g, &laplacian_multiplicity_one)
}

/// [`multiplicity_fast`] with a caller-supplied exact fallback.
pub fn multiplicity_fast_with(
    g: &Graph,
    fallback: &dyn Fn(&Graph) -> usize,
) -> (usize, ReductionTrace) {
    let mut queue: VecDeque<CanonicalForm> = component_forms(g).into();
    let mut steps = Vec::new();
    while let Some(form) = queue.pop_front() {
        let h = parse_graph6(form.as_str()).expect("canonical forms decode");
        let (rule, after, offset) = next_step(&h, fallback);
        let after_form = after.as_ref().map_or_else(|| form.clone(), canonical_form);
        if let Some(after) = &after {
            queue.extend(component_forms(after));
        }
        steps.push(ReductionStep {
            rule,
            before: form,
            after: after_form,
            offset,
        });
    }
    let total = steps.iter().map(|s| s.offset).sum();
    let trace = ReductionTrace {
        input_g6: to_graph6(g),
        steps,
        total,
    };
    (total, trace)
}

// `None` for the successor marks a terminal step.
fn next_step(h: &Graph, fallback: &dyn Fn(&Graph) -> usize) -> (Rule, Option<Graph>, usize) {
    let reduced = reduced_graph(h);
    if reduced.offset > 0 {
        return (Rule::PendantCluster, Some(reduced.graph), reduced.offset);
    }
    if h.is_tree() {
        if let Some(path) = find_pendant_paths(h, 3).into_iter().next() {
            let t1 = delete_pendant_p3(h, &path)
                .expect("pendant P3 of a tree")
                .graph;
            return (Rule::DeletePendantP3, Some(t1), 0);
        }
    }
    if is_star_like(h) {
        (Rule::StarLikeZero, None, 0)
    } else if is_double_star_like(h) {
        (Rule::DoubleStarLikeZero, None, 0)
    } else if is_cycle(h) {
        (
            Rule::CycleClosedForm,
            None,
            if h.order().is_multiple_of(6) { 2 } else { 0 },
        )
    } else {
        (Rule::ExactRankFallback, None, fallback(h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_internal_paths, pendant_profile};
    use crate::reduction::ops::{
        contract_tree_p5, edge_split, edge_split_sites, reduction_operation,
    };
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rules(trace: &ReductionTrace) -> Vec<(Rule, usize)> {
        trace.steps.iter().map(|s| (s.rule, s.offset)).collect()
    }

    #[test]
    fn star_goes_through_the_cluster_rule() {
        let (m, trace) = multiplicity_fast(&Graph::star(3));
        assert_eq!(m, 2);
        assert_eq!(
            rules(&trace),
            vec![(Rule::PendantCluster, 2), (Rule::ExactRankFallback, 0)]
        );
        assert_eq!(trace.steps[1].before.as_str(), "A_");
        trace.replay().unwrap();
    }

    #[test]
    fn cycles_use_the_closed_form() {
        let (m, trace) = multiplicity_fast(&Graph::cycle(12));
        assert_eq!(m, 2);
        assert_eq!(rules(&trace), vec![(Rule::CycleClosedForm, 2)]);
        assert_eq!(trace.steps[0].before, trace.steps[0].after);
        let (m, _) = multiplicity_fast(&Graph::cycle(10));
        assert_eq!(m, 0);
    }

    #[test]
    fn double_star_like_shortcut() {
        let p5 = Graph::path(5);
        let h = p5.disjoint_union(&p5).with_edge(2, 7).unwrap();
        let (m, trace) = multiplicity_fast(&h);
        assert_eq!(m, 0);
        assert_eq!(rules(&trace), vec![(Rule::DoubleStarLikeZero, 0)]);
        trace.replay().unwrap();
    }

    #[test]
    fn paths_shrink_by_three() {
        let (m, trace) = multiplicity_fast(&Graph::path(9));
        assert_eq!(m, 1);
        let kinds: Vec<Rule> = trace.steps.iter().map(|s| s.rule).collect();
        assert_eq!(
            kinds,
            vec![
                Rule::DeletePendantP3,
                Rule::DeletePendantP3,
                Rule::PendantCluster,
                Rule::ExactRankFallback
            ]
        );
        trace.replay().unwrap();
    }

    #[test]
    fn components_are_summed() {
        let g = Graph::cycle(6)
            .disjoint_union(&Graph::star(4))
            .disjoint_union(&Graph::empty(1));
        let (m, trace) = multiplicity_fast(&g);
        assert_eq!(m, 2 + 3);
        assert_eq!(m, laplacian_multiplicity_one(&g));
        trace.replay().unwrap();
        assert_eq!(multiplicity_fast(&Graph::empty(0)).0, 0);
    }

    #[test]
    fn json_round_trip() {
        let (_, trace) = multiplicity_fast(&Graph::spider(&[3, 2, 2, 1, 1]));
        let text = trace.to_json();
        assert!(text.contains("\"before_g6\"") && text.contains("\"PendantCluster\""));
        let back = ReductionTrace::from_json(&text).unwrap();
        assert_eq!(back, trace);
        back.replay().unwrap();
    }

    #[test]
    fn tampered_traces_are_rejected() {
        let (_, trace) = multiplicity_fast(&Graph::star(3));
        let mut bad = trace.clone();
        bad.total = 3;
        assert!(bad.replay().is_err());

        let mut bad = trace.clone();
        bad.steps[0].offset = 1;
        assert!(bad.replay().is_err());

        let mut bad = trace.clone();
        bad.steps.pop();
        assert!(bad.replay().is_err());

        let mut bad = trace;
        bad.steps[1].rule = Rule::CycleClosedForm;
        assert!(bad.replay().is_err());
    }

    // Applies randomly chosen Laplacian-preserving rules in random order.
    fn random_order_trace(g: &Graph, rng: &mut ChaCha8Rng) -> ReductionTrace {
        let mut queue = component_forms(g);
        let mut steps = Vec::new();
        while !queue.is_empty() {
            let form = queue.swap_remove(rng.gen_range(0..queue.len()));
            let h = parse_graph6(form.as_str()).unwrap();
            let mut options: Vec<(Rule, Graph, usize)> = Vec::new();
            let r = reduced_graph(&h);
            if r.offset > 0 {
                options.push((Rule::PendantCluster, r.graph, r.offset));
            }
            let prof = pendant_profile(&h);
            for (&u, &v) in &prof.pendant_owner {
                if h.degree(v) >= 3 {
                    options.push((
                        Rule::ReductionOperation,
                        reduction_operation(&h, u, v).unwrap().graph,
                        0,
                    ));
                }
            }
            if h.order() <= 12 {
                for (u, v, w) in edge_split_sites(&h) {
                    options.push((Rule::EdgeSplit, edge_split(&h, u, v, w).unwrap(), 0));
                }
            }
            if h.is_tree() {
                for p in find_pendant_paths(&h, 3) {
                    options.push((
                        Rule::DeletePendantP3,
                        delete_pendant_p3(&h, &p).unwrap().graph,
                        0,
                    ));
                }
                for p in find_internal_paths(&h, 5) {
                    options.push((
                        Rule::ContractInternalP5,
                        contract_tree_p5(&h, &p).unwrap().graph,
                        0,
                    ));
                }
            }
            // Stop early sometimes so the fallback gets exercised too.
            let stop = options.is_empty() || rng.gen_bool(0.2);
            if stop {
                let offset = laplacian_multiplicity_one(&h);
                steps.push(ReductionStep {
                    rule: Rule::ExactRankFallback,
                    before: form.clone(),
                    after: form,
                    offset,
                });
            } else {
                let (rule, after, offset) = options.choose(rng).unwrap().clone();
                queue.extend(component_forms(&after));
                steps.push(ReductionStep {
                    rule,
                    before: form,
                    after: canonical_form(&after),
                    offset,
                });
            }
        }
        let total = steps.iter().map(|s| s.offset).sum();
        ReductionTrace {
            input_g6: to_graph6(g),
            steps,
            total,
        }
    }

    #[test]
    fn rule_order_does_not_change_the_total() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let shapes = [
            Graph::spider(&[3, 2, 2, 1, 1]),
            Graph::path(11),
            Graph::cycle(9)
                .extended(3, &[(0, 9), (3, 10), (6, 11)])
                .unwrap(),
            Graph::star(5).disjoint_union(&Graph::path(7)),
            Graph::spider(&[2, 2])
                .disjoint_union(&Graph::spider(&[2, 2]))
                .extended(3, &[(0, 10), (10, 11), (11, 12), (12, 5)])
                .unwrap(),
        ];
        for g in &shapes {
            let expected = laplacian_multiplicity_one(g);
            assert_eq!(multiplicity_fast(g).0, expected);
            for _ in 0..20 {
                let trace = random_order_trace(g, &mut rng);
                assert_eq!(trace.total, expected, "{g:?}");
                trace.replay().unwrap();
            }
        }
    }
}
