//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use lap1::enumerate::{free_trees, unicyclic_graphs, GraphClass};
use lap1::extremal::extremal_unicyclic;
use lap1::graph::canonical_form;
use lap1::linalg::{char_poly, laplacian, laplacian_multiplicity_one, root_multiplicity};
use lap1::linalg::{rank, RationalScalar};
use lap1::reduction::multiplicity_fast;
use lap1::verify::{run_suite, Suite, VerificationReport, VerifyOptions};
use lap1::Graph;
use num_bigint::BigInt;

use common::*;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite(s: Suite, max_n: usize, jobs: Option<usize>) -> Result<VerificationReport, String> {
    let opts = VerifyOptions {
        jobs,
        ..VerifyOptions::new(max_n)
    };
    let r = run_suite(s, &opts).map_err(|e| e.to_string())?;
    ensure(r.is_clean(), || {
        format!(
            "{} violations, first {:?}",
            r.violations.len(),
            r.violations[0]
        )
    })?;
    Ok(r)
}

fn require_rules(r: &VerificationReport, rules: &[&str]) -> Result<(), String> {
    for rule in rules {
        ensure(r.check_count(rule) > 0, || format!("rule {rule} never ran"))?;
    }
    Ok(())
}

fn thm1(reports: &mut Vec<VerificationReport>) -> Outcome {
    let r = suite(Suite::Thm1, 12, Some(1))?;
    let trees: usize = (1..=12).map(|n| free_trees(n).unwrap().len()).sum();
    let uni: usize = (3..=12).map(|n| unicyclic_graphs(n).unwrap().len()).sum();
    ensure(r.graphs_checked == trees + uni + 1000, || {
        format!(
            "{} graphs checked, expected {}",
            r.graphs_checked,
            trees + uni + 1000
        )
    })?;
    ensure(
        r.check_count("reduced-identity") == r.graphs_checked,
        || "identity not checked on every graph".into(),
    )?;
    let msg = format!("{} trees, {} unicyclic, 1000 random", trees, uni);
    reports.push(r);
    Ok(msg)
}

/// `(n, members, how many attain 4m = bound)` per order, computed directly.
fn equality_profile(
    class: &GraphClass,
    orders: std::ops::RangeInclusive<usize>,
    bound4: impl Fn(usize) -> i64,
) -> Result<Vec<(usize, usize, Vec<Graph>)>, String> {
    let mut out = Vec::new();
    for n in orders {
        let members = class.enumerate(n).map_err(|e| e.to_string())?;
        let mut tight = Vec::new();
        for g in &members {
            let m4 = 4 * laplacian_multiplicity_one(g) as i64;
            ensure(m4 <= bound4(n), || format!("bound fails at n = {n}"))?;
            if m4 == bound4(n) {
                tight.push(g.clone());
            }
        }
        out.push((n, members.len(), tight));
    }
    Ok(out)
}

fn thm2(reports: &mut Vec<VerificationReport>) -> Outcome {
    let r = suite(Suite::Thm2, 14, None)?;
    require_rules(
        &r,
        &["tree-bound", "tree-extremal-count", "tree-small-class-size"],
    )?;
    let class = GraphClass::reduced_trees();
    let prof = equality_profile(&class, 6..=14, |n| n as i64 - 6)?;
    let small: usize = prof.iter().filter(|p| p.0 <= 9).map(|p| p.1).sum();
    ensure(small == 7, || format!("{small} small trees, expected 7"))?;
    for n in 6..=9 {
        for g in class.enumerate(n).unwrap() {
            ensure(laplacian_multiplicity_one(&g) == 0, || {
                format!("small tree with m > 0 at n = {n}")
            })?;
        }
    }
    for (n, _, tight) in &prof {
        let want = usize::from([6, 10, 14].contains(n));
        ensure(tight.len() == want, || {
            format!("{} extremal classes at n = {n}", tight.len())
        })?;
    }
    reports.push(r);
    let sizes: Vec<String> = prof.iter().map(|p| p.1.to_string()).collect();
    Ok(format!("class sizes n=6..14: {}", sizes.join(",")))
}

fn thm3(reports: &mut Vec<VerificationReport>) -> Outcome {
    let r = suite(Suite::Thm3, 13, None)?;
    require_rules(&r, &["unicyclic-bound"])?;
    let prof = equality_profile(&GraphClass::reduced_unicyclic(), 10..=13, |n| n as i64)?;
    for (n, _, tight) in &prof {
        let want = usize::from(*n == 12);
        ensure(tight.len() == want, || {
            format!("{} extremal classes at n = {n}", tight.len())
        })?;
    }
    let at12 = &prof[2].2[0];
    ensure(
        canonical_form(at12) == canonical_form(&extremal_unicyclic(12).unwrap()),
        || "n = 12 extremal graph differs from the construction".into(),
    )?;
    reports.push(r);
    let sizes: Vec<String> = prof.iter().map(|p| p.1.to_string()).collect();
    Ok(format!("class sizes n=10..13: {}", sizes.join(",")))
}

fn lemmas(reports: &mut Vec<VerificationReport>) -> Outcome {
    let r = suite(Suite::Lemmas, 10, None)?;
    require_rules(
        &r,
        &[
            "edge-deletion-interlacing",
            "line-graph-equivalence",
            "pendant-p3-deletion",
            "edge-split",
            "reduction-operation",
            "tree-p5-contraction",
            "line-p4-contraction",
            "star-like-zero",
            "double-star-like-zero",
        ],
    )?;
    ensure(r.check_count("star-like-zero") == 5, || {
        "star-like s = 2..6".into()
    })?;
    ensure(r.check_count("double-star-like-zero") == 25, || {
        "double-star-like s, t = 2..6".into()
    })?;
    let msg = format!("{} checks", r.checks.values().sum::<usize>());
    reports.push(r);
    Ok(msg)
}

fn cycles(touched: &mut Vec<Graph>) -> Outcome {
    for n in 3..=30 {
        let c = Graph::cycle(n);
        let l = laplacian(&c)
            .scaled_minus_identity(&BigInt::from(1), &BigInt::from(1))
            .unwrap();
        let m = n - rank(&l);
        let want = if n % 6 == 0 { 2 } else { 0 };
        ensure(m == want, || format!("m(C_{n}) = {m}"))?;
        touched.push(c);
    }
    Ok("n = 3..30".into())
}

fn cross_oracle(reports: &[VerificationReport], touched: &[Graph]) -> Outcome {
    ensure(reports.len() == 4, || {
        "earlier criteria did not all run".into()
    })?;
    let mut checks = 0;
    for r in reports {
        ensure(r.violations_of("cross-oracle") == 0, || {
            format!("{}: cross-oracle violations", r.suite)
        })?;
        ensure(
            r.check_count("cross-oracle-fast") >= r.graphs_checked
                && r.check_count("cross-oracle-charpoly") >= r.graphs_checked,
            || format!("{}: not every graph was cross-checked", r.suite),
        )?;
        checks += r.check_count("cross-oracle");
    }
    let one = RationalScalar::integer(1);
    for g in touched {
        let m = laplacian_multiplicity_one(g);
        let poly = root_multiplicity(&char_poly(&laplacian(g)).unwrap(), &one);
        let (fast, trace) = multiplicity_fast(g);
        ensure(m == poly && m == fast && trace.replay().is_ok(), || {
            format!("disagreement on a cycle of order {}", g.order())
        })?;
        checks += 2;
    }
    Ok(format!("{checks} agreement checks"))
}

fn identities() -> Outcome {
    let r = suite(Suite::Identities, 11, None)?;
    require_rules(
        &r,
        &[
            "pendant-excess-lower-bound",
            "internal-submatrix-identity",
            "tree-eigenvalue-multiplicity-bound",
            "tree-integer-eigenvalue-divides-order",
            "tree-integer-eigenvalue-simple",
        ],
    )?;
    Ok(format!("{} trees", r.graphs_checked))
}

fn counts() -> Outcome {
    let a55 = fixture("a000055.txt");
    let a1429 = fixture("a001429.txt");
    let otter = free_tree_counts(12);
    let polya = unicyclic_counts(12);
    for n in 1..=12 {
        let trees = free_trees(n).map_err(|e| e.to_string())?;
        let codes: BTreeSet<String> = trees.iter().filter_map(|t| code_of(t, false)).collect();
        ensure(
            trees.len() as i128 == otter[n]
                && trees.len() as u64 == a55[n]
                && codes.len() == trees.len(),
            || format!("tree count at n = {n}: {}", trees.len()),
        )?;
        if n <= 8 {
            ensure(codes == brute_force_trees(n), || {
                format!("trees differ from the labelled sweep at n = {n}")
            })?;
        }
    }
    for n in 3..=12 {
        let gs = unicyclic_graphs(n).map_err(|e| e.to_string())?;
        let codes: BTreeSet<String> = gs.iter().filter_map(|g| code_of(g, true)).collect();
        ensure(
            gs.len() as i128 == polya[n]
                && gs.len() as u64 == a1429[n - 3]
                && codes.len() == gs.len(),
            || format!("unicyclic count at n = {n}: {}", gs.len()),
        )?;
        if n <= 7 {
            ensure(codes == brute_force_unicyclic(n), || {
                format!("unicyclic graphs differ from the labelled sweep at n = {n}")
            })?;
        }
    }
    Ok("trees 1..12, unicyclic 3..12".into())
}

fn report(id: usize, name: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let took = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(d) if took <= budget => (true, d),
        Ok(d) => (false, format!("{d}; over budget of {} s", budget.as_secs())),
        Err(e) => (false, e),
    };
    println!(
        "{} {id} {name}: {detail} ({:.2} s)",
        if ok { "PASS" } else { "FAIL" },
        took.as_secs_f64()
    );
    ok
}

fn main() {
    let secs = Duration::from_secs;
    let mut reports = Vec::new();
    let mut touched = Vec::new();
    let results = [
        report(1, "reduced-graph identity", secs(60), || thm1(&mut reports)),
        report(2, "tree bound and extremal trees", secs(120), || {
            thm2(&mut reports)
        }),
        report(3, "unicyclic bound and extremal graph", secs(120), || {
            thm3(&mut reports)
        }),
        report(4, "lemma sweep", secs(180), || lemmas(&mut reports)),
        report(5, "cycle closed form", secs(5), || cycles(&mut touched)),
        report(6, "cross-oracle agreement", secs(120), || {
            cross_oracle(&reports, &touched)
        }),
        report(7, "tree identities", secs(60), identities),
        report(8, "enumeration counts", secs(60), counts),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!(
        "{} of {} criteria pass",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
