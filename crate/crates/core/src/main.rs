use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lap1::enumerate::{free_trees, unicyclic_graphs_where, Base, Filter, GraphClass};
use lap1::extremal::{extremal_tree, extremal_unicyclic};
use lap1::graph::{parse_graph6, pendant_profile, to_graph6, Graph};
use lap1::linalg::laplacian_multiplicity_one;
use lap1::reduction::{
    final_reduction_graph, multiplicity_fast, next_reduction_site, reduced_graph,
};
use lap1::verify::{run_suite, Engine, Suite, VerifyOptions};

const EXIT_VIOLATIONS: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "lap1",
    version,
    about = "Multiplicity of the Laplacian eigenvalue 1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// File holding a graph6 line or an edge list ("n m" then m lines "u v").
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Fast,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Reduced,
    Final,
}

/// Rank engines selectable for mutation testing.
#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Exact,
    OffByOne,
}

impl EngineArg {
    fn build(self, seed: u64) -> Engine {
        match self {
            EngineArg::Exact => Engine::exact(),
            EngineArg::OffByOne => Engine::off_by_one(seed),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Tree,
    Unicyclic,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of 1 as a Laplacian eigenvalue, with pendant counts.
    Mult {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        #[arg(long)]
        json_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "exact", hide = true)]
        engine: EngineArg,
    },
    /// Delete surplus pendants, or iterate the reduction operation.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "reduced")]
        to: Target,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// One graph6 line per isomorphism class.
    Enumerate {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        /// Comma-separated: reduced, no-pendant-p3 (alias noP3).
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        /// thm1, thm2, thm3, lemmas, identities or all.
        suite: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        /// Size of the random connected sample.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        json_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "exact", hide = true)]
        engine: EngineArg,
    },
    /// The graph attaining the multiplicity bound for its class.
    Extremal {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    if let Some(g6) = &input.g6 {
        return parse_graph6(g6).map_err(|e| usage(format!("bad graph6: {e}")));
    }
    let path = input.file.as_ref().expect("clap requires one input");
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| usage(format!("{} is empty", path.display())))?;
    let looks_like_edges = first.split_whitespace().count() == 2
        && first.split_whitespace().all(|w| w.parse::<usize>().is_ok());
    if looks_like_edges {
        Graph::parse_edge_list(&text).map_err(|e| usage(format!("bad edge list: {e}")))
    } else {
        parse_graph6(first).map_err(|e| usage(format!("bad graph6: {e}")))
    }
}

fn emit(value: &serde_json::Value, json_out: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    match json_out {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn max_n_cap() -> Result<Option<usize>, Failure> {
    match std::env::var("LAP1_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| usage(format!("LAP1_MAX_N={v:?} is not a count"))),
        Err(_) => Ok(None),
    }
}

fn check_cap(n: usize) -> Result<(), Failure> {
    match max_n_cap()? {
        Some(cap) if n > cap => Err(usage(format!("order {n} exceeds LAP1_MAX_N={cap}"))),
        _ => Ok(()),
    }
}

fn cmd_mult(
    input: &Input,
    method: Method,
    engine: &Engine,
    json_out: Option<&Path>,
) -> Result<(), Failure> {
    let g = read_graph(input)?;
    let prof = pendant_profile(&g);
    let mut out = json!({"n": g.order(), "p": prof.p, "q": prof.q, "graph6": to_graph6(&g)});
    let m = match method {
        Method::Exact => engine.m1(&g),
        Method::Fast => multiplicity_fast(&g).0,
        Method::Both => {
            let exact = engine.m1(&g);
            let (fast, trace) = multiplicity_fast(&g);
            out["trace"] = serde_json::to_value(&trace).expect("trace serializes");
            if exact != fast {
                return Err(Failure {
                    code: EXIT_INCONSISTENT,
                    message: format!("exact engine gives {exact}, reduction pipeline gives {fast}"),
                });
            }
            exact
        }
    };
    out["m1"] = json!(m);
    eprintln!("n={} m1={m} p={} q={}", g.order(), prof.p, prof.q);
    emit(&out, json_out)
}

fn cmd_reduce(input: &Input, to: Target, json_out: Option<&Path>) -> Result<(), Failure> {
    let g = read_graph(input)?;
    let (_, trace) = multiplicity_fast(&g);
    let out = match to {
        Target::Reduced => {
            let r = reduced_graph(&g);
            json!({
                "input_g6": to_graph6(&g),
                "to": "reduced",
                "output_g6": to_graph6(&r.graph),
                "offset": r.offset,
                "trace": trace,
            })
        }
        Target::Final => {
            let fin = final_reduction_graph(&g);
            let applications: Vec<_> = fin
                .applications
                .iter()
                .map(|&(u, v)| json!({"pendant": u, "neighbor": v}))
                .collect();
            json!({
                "input_g6": to_graph6(&g),
                "to": "final",
                "output_g6": to_graph6(&fin.graph),
                "offset": 0,
                "applications": applications,
                "fixed_point": next_reduction_site(&fin.graph).is_none(),
                "trace": trace,
            })
        }
    };
    eprintln!(
        "{} -> {} (offset {})",
        out["input_g6"], out["output_g6"], out["offset"]
    );
    emit(&out, json_out)
}

fn cmd_enumerate(class: ClassArg, n: usize, filters: &[String]) -> Result<(), Failure> {
    check_cap(n)?;
    let filters = filters
        .iter()
        .map(|f| f.parse::<Filter>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?;
    let base = match class {
        ClassArg::Tree => Base::Tree,
        ClassArg::Unicyclic => Base::Unicyclic,
    };
    let class = GraphClass::new(base, &filters);
    let graphs = match base {
        Base::Tree => {
            free_trees(n).map(|ts| ts.into_iter().filter(|t| class.contains(t)).collect())
        }
        _ => unicyclic_graphs_where(n, |g| class.contains(g)),
    }
    .map_err(usage)?;
    for g in &graphs {
        println!("{}", to_graph6(g));
    }
    eprintln!("{} graphs in {class} of order {n}", graphs.len());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &str,
    max_n: usize,
    seed: u64,
    jobs: Option<usize>,
    samples: usize,
    timings: bool,
    engine: Engine,
    json_out: Option<&Path>,
) -> Result<(), Failure> {
    check_cap(max_n)?;
    let suite: Suite = suite.parse().map_err(usage)?;
    let opts = VerifyOptions {
        seed,
        jobs,
        random_samples: samples,
        timings,
        engine,
        ..VerifyOptions::new(max_n)
    };
    let report = run_suite(suite, &opts).map_err(usage)?;
    eprintln!("{}", report.summary());
    emit(
        &serde_json::to_value(&report).expect("report serializes"),
        json_out,
    )?;
    if report.is_clean() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_VIOLATIONS,
            message: format!("first violation: {:?}", report.violations[0]),
        })
    }
}

fn cmd_extremal(class: ClassArg, n: usize) -> Result<(), Failure> {
    let g = match class {
        ClassArg::Tree => extremal_tree(n),
        ClassArg::Unicyclic => extremal_unicyclic(n),
    }
    .map_err(usage)?;
    println!("{}", to_graph6(&g));
    println!("m={}", laplacian_multiplicity_one(&g));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Mult {
            input,
            method,
            json_out,
            engine,
        } => cmd_mult(input, *method, &engine.build(0), json_out.as_deref()),
        Command::Reduce {
            input,
            to,
            json_out,
        } => cmd_reduce(input, *to, json_out.as_deref()),
        Command::Enumerate { class, n, filter } => cmd_enumerate(*class, *n, filter),
        Command::Verify {
            suite,
            max_n,
            seed,
            jobs,
            samples,
            timings,
            json_out,
            engine,
        } => cmd_verify(
            suite,
            *max_n,
            *seed,
            *jobs,
            *samples,
            *timings,
            engine.build(*seed),
            json_out.as_deref(),
        ),
        Command::Extremal { class, n } => cmd_extremal(*class, *n),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("lap1: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
