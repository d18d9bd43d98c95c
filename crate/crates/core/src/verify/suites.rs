use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::enumerate::{
    free_trees, random_connected_graph, unicyclic_graphs, GraphClass, MAX_TREE_ORDER,
    MAX_UNICYCLIC_ORDER,
};
use crate::extremal::{
    bound_times_four, extremal_tree, extremal_unicyclic, peel_last_gadget, ExtremalSpec, Family,
};
use crate::graph::{
    canonical_form, find_internal_paths, find_pendant_paths, pendant_profile, Graph,
};
use crate::linalg::{
    adjacency, char_poly, integer_laplacian_eigenvalues, internal_submatrix, laplacian,
    root_multiplicity, RationalScalar,
};
use crate::reduction::{
    contract_line_p4, contract_tree_p5, delete_pendant_p3, edge_split, edge_split_sites,
    final_reduction_graph, multiplicity_fast_with, next_reduction_site, reduced_graph,
    reduction_operation, ReductionError, ReductionTrace,
};

use super::report::{Tally, VerificationReport};
use super::{Suite, VerifyError, VerifyOptions};

struct Outcome {
    graphs: usize,
    checks: BTreeMap<String, usize>,
    violations: Vec<super::Violation>,
    notes: Vec<String>,
    n_range: [usize; 2],
}

fn sweep<T, R>(items: &[T], f: impl Fn(&T, &mut Tally) -> R + Sync) -> (Tally, Vec<R>)
where
    T: Sync,
    R: Send,
{
    let parts: Vec<(Tally, R)> = items
        .par_iter()
        .map(|item| {
            let mut t = Tally {
                graphs: 1,
                ..Tally::default()
            };
            let r = f(item, &mut t);
            (t, r)
        })
        .collect();
    let mut total = Tally::default();
    let mut results = Vec::with_capacity(parts.len());
    for (t, r) in parts {
        total = total.merge(t);
        results.push(r);
    }
    (total, results)
}

fn charpoly_multiplicity(m: &crate::linalg::IntMatrix, lambda: i64) -> usize {
    let poly = char_poly(m).expect("square input");
    root_multiplicity(&poly, &RationalScalar::integer(lambda))
}

struct Ctx<'a> {
    opts: &'a VerifyOptions,
}

impl Ctx<'_> {
    /// Engine value of `m_{L(h)}(1)`, checked against the characteristic
    /// polynomial.
    /// Rank multiplicity, cross-checked against the characteristic
    /// polynomial and the reduction pipeline.
    fn m1(&self, h: &Graph, t: &mut Tally) -> usize {
        self.m1_traced(h, t).0
    }

    fn m1_traced(&self, h: &Graph, t: &mut Tally) -> (usize, ReductionTrace) {
        let engine = &self.opts.engine;
        let m = engine.m1(h);
        let poly = charpoly_multiplicity(&laplacian(h), 1);
        t.check("cross-oracle-charpoly", h, m == poly, poly, m);
        let (fast, trace) = multiplicity_fast_with(h, &|x| engine.m1(x));
        t.check("cross-oracle-fast", h, fast == m, m, fast);
        (m, trace)
    }

    fn ma(&self, h: &Graph, t: &mut Tally) -> usize {
        let m = self.opts.engine.adjacency_minus_one(h);
        let poly = charpoly_multiplicity(&adjacency(h), -1);
        t.check("cross-oracle-charpoly-adjacency", h, m == poly, poly, m);
        m
    }

    /// [`Ctx::m1`] plus a replay of the pipeline's trace.
    fn full(&self, g: &Graph, t: &mut Tally) -> usize {
        let (m, trace) = self.m1_traced(g, t);
        let replay = trace.replay();
        t.check(
            "trace-replay",
            g,
            replay.is_ok(),
            "replayable",
            replay.err().map_or_else(String::new, |e| e.to_string()),
        );
        m
    }

    fn reduced_identity(&self, g: &Graph, t: &mut Tally) {
        let m = self.full(g, t);
        let r = reduced_graph(g);
        let mr = self.m1(&r.graph, t);
        t.check("reduced-identity", g, m == r.offset + mr, r.offset + mr, m);
        self.pendant_bounds(g, m, t);
    }

    fn pendant_bounds(&self, g: &Graph, m: usize, t: &mut Tally) {
        let prof = pendant_profile(g);
        let excess = prof.p - prof.q;
        t.check(
            "pendant-excess-lower-bound",
            g,
            m >= excess,
            format!(">= {excess}"),
            m,
        );
        let inner = self
            .opts
            .engine
            .multiplicity(&internal_submatrix(g), &RationalScalar::integer(1));
        t.check(
            "internal-submatrix-identity",
            g,
            m == excess + inner,
            excess + inner,
            m,
        );
    }

    fn tree_identities(&self, g: &Graph, t: &mut Tally) {
        let m = self.m1(g, t);
        self.pendant_bounds(g, m, t);
        let n = g.order();
        if n < 2 {
            return;
        }
        let p = pendant_profile(g).p;
        let lap = laplacian(g);
        for (lambda, k) in integer_laplacian_eigenvalues(g) {
            let rank_k = self
                .opts
                .engine
                .multiplicity(&lap, &RationalScalar::integer(lambda));
            t.check("cross-oracle-charpoly", g, rank_k == k, k, rank_k);
            t.check(
                "tree-eigenvalue-multiplicity-bound",
                g,
                k < p,
                format!("<= {} at {lambda}", p - 1),
                k,
            );
            if lambda > 1 {
                t.check(
                    "tree-integer-eigenvalue-divides-order",
                    g,
                    n as i64 % lambda == 0,
                    format!("divisor of {n}"),
                    lambda,
                );
                t.check(
                    "tree-integer-eigenvalue-simple",
                    g,
                    k == 1,
                    format!("1 at {lambda}"),
                    k,
                );
            }
        }
    }

    fn lemma_checks(&self, g: &Graph, t: &mut Tally) {
        let m = self.full(g, t);
        for (u, v) in g.edges() {
            let me = self.m1(&g.without_edge(u, v).expect("edge exists"), t);
            t.check(
                "edge-deletion-interlacing",
                g,
                m <= me + 1 && me <= m + 1,
                format!("within 1 of {me}"),
                m,
            );
        }
        if g.is_bipartite() {
            let ml = self.ma(&g.line_graph(), t);
            t.check("line-graph-equivalence", g, ml == m, m, ml);
        }
        let tree = g.is_tree();
        for path in find_pendant_paths(g, 3) {
            if tree {
                let h = delete_pendant_p3(g, &path).expect("pendant P3").graph;
                let mh = self.m1(&h, t);
                t.check("pendant-p3-deletion", g, mh == m, m, mh);
            } else {
                let h = g
                    .remove_vertices(&path.vertices)
                    .expect("path exists")
                    .graph;
                let same = self.opts.engine.m1(&h) == m;
                t.observe("pendant-p3-deletion-off-trees", same);
            }
        }
        for (u, v, w) in edge_split_sites(g) {
            let h = edge_split(g, u, v, w).expect("valid site");
            let mh = self.m1(&h, t);
            t.check("edge-split", g, mh == m, m, mh);
        }
        let prof = pendant_profile(g);
        for (&u, &v) in &prof.pendant_owner {
            if g.degree(v) >= 3 {
                let h = reduction_operation(g, u, v).expect("valid site").graph;
                let mh = self.m1(&h, t);
                t.check("reduction-operation", g, mh == m, m, mh);
            }
        }
        if tree {
            for path in find_internal_paths(g, 5) {
                let h = contract_tree_p5(g, &path).expect("internal P5").graph;
                let mh = self.m1(&h, t);
                t.check("tree-p5-contraction", g, mh == m, m, mh);
            }
        }
        let mut p4_hosts = vec![g.clone()];
        if tree {
            p4_hosts.push(g.line_graph());
        }
        for host in &p4_hosts {
            let paths = find_internal_paths(host, 4);
            if paths.is_empty() {
                continue;
            }
            let ma = self.ma(host, t);
            for path in paths {
                match contract_line_p4(host, &path) {
                    Ok(d) => {
                        let mh = self.ma(&d.graph, t);
                        t.check("line-p4-contraction", host, mh == ma, ma, mh);
                    }
                    Err(ReductionError::ClosedP4(_)) => {
                        let v = &path.vertices;
                        let h = closed_p4_contraction(host, v);
                        t.observe(
                            "line-p4-contraction-with-adjacent-ends",
                            self.opts.engine.adjacency_minus_one(&h) == ma,
                        );
                    }
                    Err(e) => panic!("internal path rejected: {e}"),
                }
            }
        }
        let fin = final_reduction_graph(g);
        t.check(
            "final-reduction-terminates",
            g,
            fin.applications.len() <= prof.q && next_reduction_site(&fin.graph).is_none(),
            format!("<= {} steps to a fixed point", prof.q),
            fin.applications.len(),
        );
        let mf = self.m1(&fin.graph, t);
        t.check("final-reduction", g, mf == m, m, mf);
    }
}

// The contraction `contract_line_p4` refuses: the 4-cycle spanned by `v`
// becomes one vertex keeping the outside neighbours of both ends.
fn closed_p4_contraction(g: &Graph, v: &[usize]) -> Graph {
    let d = g.remove_vertices(v).expect("path exists");
    let merged = d.graph.order();
    let mut outside: Vec<usize> = [v[0], v[3]]
        .iter()
        .flat_map(|&e| g.neighbors(e).iter().filter_map(|&w| d.map.get(w)))
        .collect();
    outside.sort_unstable();
    outside.dedup();
    let extra: Vec<_> = outside.into_iter().map(|w| (w, merged)).collect();
    d.graph.extended(1, &extra).expect("in range")
}

fn corpus_trees(lo: usize, hi: usize) -> Result<Vec<Graph>, VerifyError> {
    let mut all = Vec::new();
    for n in lo..=hi {
        all.extend(free_trees(n)?);
    }
    Ok(all)
}

fn corpus_unicyclic(lo: usize, hi: usize) -> Result<Vec<Graph>, VerifyError> {
    let mut all = Vec::new();
    for n in lo.max(3)..=hi {
        all.extend(unicyclic_graphs(n)?);
    }
    Ok(all)
}

/// The random connected sample: orders in `1..=max_n`, edge probability
/// `k / 8` for `k` in `1..=4`, all drawn from `seed`.
pub fn random_sample(max_n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n.max(1));
            let num = rng.gen_range(1..=4);
            random_connected_graph(n, num, 8, rng.gen()).expect("valid parameters")
        })
        .collect()
}

fn finish(tally: Tally, notes: Vec<String>, n_range: [usize; 2]) -> Outcome {
    let (graphs, checks, violations, observed) = tally.finish_with_observations();
    let mut notes = notes;
    for (key, [total, ok]) in observed {
        notes.push(format!(
            "{key}: {ok} of {total} instances preserve the multiplicity"
        ));
    }
    Outcome {
        graphs,
        checks,
        violations,
        notes,
        n_range,
    }
}

fn thm1(opts: &VerifyOptions) -> Result<Outcome, VerifyError> {
    let ctx = Ctx { opts };
    let trees = corpus_trees(1, opts.max_n.min(MAX_TREE_ORDER))?;
    let uni = corpus_unicyclic(3, opts.max_n)?;
    let random = random_sample(opts.max_n, opts.random_samples, opts.seed);
    let notes = vec![format!(
        "{} trees, {} unicyclic graphs, {} random connected graphs",
        trees.len(),
        uni.len(),
        random.len()
    )];
    let mut tally = Tally::default();
    for family in [&trees, &uni, &random] {
        tally = tally.merge(sweep(family, |g, t| ctx.reduced_identity(g, t)).0);
    }
    Ok(finish(tally, notes, [1, opts.max_n]))
}

fn thm2(opts: &VerifyOptions) -> Result<Outcome, VerifyError> {
    let ctx = Ctx { opts };
    let class = GraphClass::reduced_trees();
    let mut tally = Tally::default();
    let mut notes = Vec::new();
    let mut small = (0, 0);
    for n in 6..=opts.max_n {
        let members = class.enumerate(n)?;
        let bound = bound_times_four(Family::Tree, n);
        let (part, ms) = sweep(&members, |g, t| {
            let m = ctx.full(g, t);
            t.check(
                "tree-bound",
                g,
                4 * m as i64 <= bound,
                format!("4m <= {bound}"),
                m,
            );
            m
        });
        tally = tally.merge(part);
        let attaining: Vec<&Graph> = members
            .iter()
            .zip(&ms)
            .filter(|&(_, &m)| 4 * m as i64 == bound)
            .map(|(g, _)| g)
            .collect();
        notes.push(format!(
            "n={n}: {} members, max m {}, {} attain the bound",
            members.len(),
            ms.iter().max().map_or("-".to_owned(), |m| m.to_string()),
            attaining.len()
        ));
        if n <= 9 {
            small.0 += members.len();
            small.1 += ms.iter().filter(|&&m| m == 0).count();
        }
        check_extremal(
            &mut tally,
            Family::Tree,
            n,
            &attaining,
            ExtremalSpec::new(Family::Tree, n).is_ok(),
        );
    }
    if opts.max_n >= 9 {
        let witness = extremal_tree(6).expect("base tree");
        tally.check(
            "tree-small-class-size",
            &witness,
            small == (7, 7),
            "7 members of orders 6..=9, all with m = 0",
            format!("{} members, {} with m = 0", small.0, small.1),
        );
    }
    Ok(finish(tally, notes, [6, opts.max_n]))
}

fn check_extremal(
    tally: &mut Tally,
    family: Family,
    n: usize,
    attaining: &[&Graph],
    expect_one: bool,
) {
    let witness = attaining
        .first()
        .copied()
        .cloned()
        .unwrap_or_else(|| Graph::empty(n));
    let rule = match family {
        Family::Tree => "tree",
        Family::Unicyclic => "unicyclic",
    };
    tally.check(
        &format!("{rule}-extremal-count"),
        &witness,
        attaining.len() == usize::from(expect_one),
        usize::from(expect_one),
        attaining.len(),
    );
    if expect_one && attaining.len() == 1 {
        let built = match family {
            Family::Tree => extremal_tree(n),
            Family::Unicyclic => extremal_unicyclic(n),
        };
        let same = built
            .as_ref()
            .map(|b| canonical_form(b) == canonical_form(attaining[0]))
            .unwrap_or(false);
        tally.check(
            &format!("{rule}-extremal-shape"),
            attaining[0],
            same,
            built.map_or_else(|e| e.to_string(), |b| canonical_form(&b).into_string()),
            canonical_form(attaining[0]),
        );
    }
}

fn thm3(opts: &VerifyOptions) -> Result<Outcome, VerifyError> {
    let ctx = Ctx { opts };
    let class = GraphClass::reduced_unicyclic();
    let mut tally = Tally::default();
    let mut notes = Vec::new();
    for n in 3..=opts.max_n {
        let members = class.enumerate(n)?;
        let bound = bound_times_four(Family::Unicyclic, n);
        let (part, ms) = sweep(&members, |g, t| {
            let m = ctx.full(g, t);
            if n >= 10 {
                t.check(
                    "unicyclic-bound",
                    g,
                    4 * m as i64 <= bound,
                    format!("4m <= {bound}"),
                    m,
                );
            }
            m
        });
        tally = tally.merge(part);
        let attaining: Vec<&Graph> = members
            .iter()
            .zip(&ms)
            .filter(|&(_, &m)| 4 * m as i64 == bound)
            .map(|(g, _)| g)
            .collect();
        let over = ms.iter().filter(|&&m| 4 * m as i64 > bound).count();
        notes.push(format!(
            "n={n}: {} members, max m {}, {} attain the bound, {} exceed it{}",
            members.len(),
            ms.iter().max().map_or("-".to_owned(), |m| m.to_string()),
            attaining.len(),
            over,
            if n < 10 { " (informational)" } else { "" }
        ));
        if n >= 10 {
            let expect_one = ExtremalSpec::new(Family::Unicyclic, n).is_ok();
            check_extremal(&mut tally, Family::Unicyclic, n, &attaining, expect_one);
        }
    }
    Ok(finish(tally, notes, [3, opts.max_n]))
}

fn lemmas(opts: &VerifyOptions) -> Result<Outcome, VerifyError> {
    let ctx = Ctx { opts };
    let mut corpus = corpus_trees(1, opts.max_n)?;
    corpus.extend(corpus_unicyclic(3, opts.max_n)?);
    let (mut tally, _) = sweep(&corpus, |g, t| ctx.lemma_checks(g, t));

    let mut fixed = Vec::new();
    for s in 2..=6 {
        fixed.push((Graph::spider(&vec![2; s]), "star-like-zero"));
        for r in 2..=6 {
            let a = Graph::spider(&vec![2; s]);
            let b = Graph::spider(&vec![2; r]);
            let g = a
                .disjoint_union(&b)
                .with_edge(0, a.order())
                .expect("centres");
            fixed.push((g, "double-star-like-zero"));
        }
    }
    let (part, _) = sweep(&fixed, |(g, rule), t| {
        let m = ctx.full(g, t);
        t.check(rule, g, m == 0, 0, m);
    });
    tally = tally.merge(part);

    let cycles: Vec<Graph> = (3..=30).map(Graph::cycle).collect();
    let (part, _) = sweep(&cycles, |g, t| {
        let m = ctx.full(g, t);
        let expected = if g.order() % 6 == 0 { 2 } else { 0 };
        t.check("cycle-closed-form", g, m == expected, expected, m);
    });
    tally = tally.merge(part);

    let gadget_orders: Vec<usize> = (10..=30).step_by(4).collect();
    let (part, _) = sweep(&gadget_orders, |&n, t| {
        let spec = ExtremalSpec::new(Family::Tree, n).expect("valid order");
        let g = spec.build().expect("extremal tree");
        let m = ctx.m1(&g, t);
        let peeled = peel_last_gadget(&spec, &g).expect("has a gadget");
        let mp = ctx.m1(&peeled, t);
        t.check("gadget-peeling", &g, m == mp + 1, mp + 1, m);
    });
    tally = tally.merge(part);

    let (part, _) = sweep(&corpus_trees(1, opts.max_n)?, |g, t| {
        ctx.tree_identities(g, t)
    });
    tally = tally.merge(part);
    let notes = vec![format!(
        "{} enumerated graphs, {} star-like shapes, cycles 3..=30, {} extremal trees",
        corpus.len(),
        fixed.len(),
        gadget_orders.len()
    )];
    Ok(finish(tally, notes, [1, opts.max_n]))
}

fn identities(opts: &VerifyOptions) -> Result<Outcome, VerifyError> {
    let ctx = Ctx { opts };
    let trees = corpus_trees(1, opts.max_n)?;
    let (tally, _) = sweep(&trees, |g, t| ctx.tree_identities(g, t));
    let notes = vec![format!("{} trees", trees.len())];
    Ok(finish(tally, notes, [1, opts.max_n]))
}

fn limit(suite: Suite) -> usize {
    match suite {
        Suite::Thm2 | Suite::Identities => MAX_TREE_ORDER,
        _ => MAX_UNICYCLIC_ORDER,
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    if opts.max_n > limit(suite) {
        return Err(VerifyError::MaxNTooLarge {
            suite,
            max_n: opts.max_n,
            limit: limit(suite),
        });
    }
    let start = Instant::now();
    let body = || -> Result<Outcome, VerifyError> {
        match suite {
            Suite::Thm1 => thm1(opts),
            Suite::Thm2 => thm2(opts),
            Suite::Thm3 => thm3(opts),
            Suite::Lemmas => lemmas(opts),
            Suite::Identities => identities(opts),
            Suite::All => {
                let mut merged: Option<Outcome> = None;
                for part in [Suite::Thm1, Suite::Thm2, Suite::Thm3, Suite::Lemmas] {
                    let mut o = match part {
                        Suite::Thm1 => thm1(opts)?,
                        Suite::Thm2 => thm2(opts)?,
                        Suite::Thm3 => thm3(opts)?,
                        _ => lemmas(opts)?,
                    };
                    o.notes = o
                        .notes
                        .into_iter()
                        .map(|s| format!("{part}: {s}"))
                        .collect();
                    merged = Some(match merged {
                        None => o,
                        Some(mut acc) => {
                            acc.graphs += o.graphs;
                            for (k, v) in o.checks {
                                *acc.checks.entry(k).or_default() += v;
                            }
                            acc.violations.extend(o.violations);
                            acc.notes.extend(o.notes);
                            acc.n_range = [
                                acc.n_range[0].min(o.n_range[0]),
                                acc.n_range[1].max(o.n_range[1]),
                            ];
                            acc
                        }
                    });
                }
                let mut o = merged.expect("four parts");
                o.violations.sort_by(|a, b| {
                    (a.graph6.len(), &a.graph6, &a.rule).cmp(&(b.graph6.len(), &b.graph6, &b.rule))
                });
                Ok(o)
            }
        }
    };
    let outcome = match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| VerifyError::ThreadPool(e.to_string()))?
            .install(body)?,
        None => body()?,
    };
    Ok(VerificationReport {
        suite: suite.to_string(),
        n_range: outcome.n_range,
        graphs_checked: outcome.graphs,
        violations: outcome.violations,
        checks: outcome.checks,
        seed: opts.seed,
        engine: opts.engine.name().to_owned(),
        notes: outcome.notes,
        runtime_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    })
}
