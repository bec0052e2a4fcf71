//! `dig`: distance matrices, Smith forms, distance ideals, classification and
//! the verification suites from the command line.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use dig_core::classify::{classify_batch, direct_membership, ClassificationReport, Family};
use dig_core::graph::{catalog, parse_edge_list, parse_graph6, BlowupSpec, Graph};
use dig_core::harness::{run_suite, suite_names, GraphStream, SuiteOptions, SuiteResult, SUITES};
use dig_core::ideal::{evaluated_snf, generalized_distance_matrix, matrix_ideal, ring_matrix, PhiOptions, Ring};
use dig_core::linalg::smith_normal_form;
use dig_core::poly::{Domain, GbOptions};
use serde_json::{json, Value};
use std::io::{Read, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dig", version, about = "Distance ideals of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the distance matrix
    Dist {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Smith normal form of D(G), or of D_X(G) evaluated at a point
    Snf {
        #[command(flatten)]
        input: GraphInput,
        /// comma-separated diagonal values, one per vertex
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        evaluate: Option<Vec<i64>>,
        #[arg(long)]
        json: bool,
    },
    /// Gröbner basis of the ideal of k-minors of D_X(G)
    Ideal {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        /// coefficient ring: Z or Q
        #[arg(long, default_value = "Q")]
        ring: String,
        /// use one variable t for every vertex
        #[arg(long)]
        univariate: bool,
        /// share one variable among vertices, as NAME=V0,V1,...
        #[arg(long = "group")]
        groups: Vec<String>,
        /// replace the distance between u and v (both entries), as u,v,value
        #[arg(long = "override")]
        overrides: Vec<String>,
        /// replace only entry (u, v), as u,v,value
        #[arg(long = "entry-override")]
        entry_overrides: Vec<String>,
        #[arg(long, env = "DIG_GB_BUDGET")]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Membership in the six families, with witnesses
    Classify {
        #[command(flatten)]
        input: OptionalGraphInput,
        /// graph6 file, one graph per line ("-" for stdin)
        #[arg(long)]
        stream: Option<String>,
        /// every connected graph on N vertices (N <= 6)
        #[arg(long)]
        gen: Option<usize>,
        /// also decide membership from the ideals
        #[arg(long)]
        direct: bool,
        #[arg(long, env = "DIG_GB_BUDGET")]
        budget: Option<u64>,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite ("all" runs every suite)
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// graph6 file to sweep instead of the internal generator
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, env = "DIG_GB_BUDGET")]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// List the verification suites
    Suites,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// graph6 string
    #[arg(long)]
    g6: Option<String>,
    /// edge-list file ("-" for stdin)
    #[arg(long)]
    edges: Option<String>,
    /// blow-up of a path, e.g. P3:1,-1,0
    #[arg(long)]
    blowup: Option<String>,
    /// a named graph from the catalog (paw, house, G_{6,14}, ...)
    #[arg(long)]
    named: Option<String>,
}

#[derive(Args)]
#[group(multiple = false)]
struct OptionalGraphInput {
    #[arg(long)]
    g6: Option<String>,
    #[arg(long)]
    edges: Option<String>,
    #[arg(long)]
    blowup: Option<String>,
    #[arg(long)]
    named: Option<String>,
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load_graph(
    g6: &Option<String>,
    edges: &Option<String>,
    blowup: &Option<String>,
    named: &Option<String>,
) -> Result<Option<Graph>> {
    Ok(if let Some(s) = g6 {
        Some(parse_graph6(s)?)
    } else if let Some(path) = edges {
        Some(parse_edge_list(&read_source(path)?)?)
    } else if let Some(spec) = blowup {
        Some(spec.parse::<BlowupSpec>()?.build())
    } else if let Some(name) = named {
        Some(
            catalog::by_name(name)
                .ok_or_else(|| anyhow!("no catalog graph {name:?}; known: {}", catalog::names().join(", ")))?,
        )
    } else {
        None
    })
}

impl GraphInput {
    fn graph(&self) -> Result<Graph> {
        load_graph(&self.g6, &self.edges, &self.blowup, &self.named)?.ok_or_else(|| anyhow!("no graph given"))
    }
}

/// `println!` that reports a closed pipe as an error instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout().lock(), $($arg)*)?
    };
}

fn print_json(v: &Value) -> Result<()> {
    out!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn parse_triple(s: &str) -> Result<(usize, usize, u32)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [u, v, d] = parts[..] else { bail!("expected u,v,value but got {s:?}") };
    Ok((u.parse()?, v.parse()?, d.parse()?))
}

fn dist(g: &Graph, json: bool) -> Result<()> {
    let d = g.distance_matrix()?;
    if json {
        print_json(&json!({ "graph": g.to_graph6(), "n": g.n(), "diameter": d.diameter(), "matrix": d.rows() }))?;
    } else {
        write!(std::io::stdout().lock(), "{}", d.to_int_matrix())?;
    }
    Ok(())
}

fn snf(g: &Graph, evaluate: Option<Vec<i64>>, json: bool) -> Result<()> {
    let result = match &evaluate {
        Some(d) => evaluated_snf(g, d)?,
        None => smith_normal_form(&g.distance_matrix()?.to_int_matrix()),
    };
    if json {
        let mut v = serde_json::to_value(&result)?;
        v["graph"] = json!(g.to_graph6());
        v["evaluation"] = json!(evaluate);
        print_json(&v)?;
    } else {
        let factors: Vec<String> = result.diagonal().iter().map(ToString::to_string).collect();
        let deltas: Vec<String> = (1..=result.rank).map(|k| result.delta(k).to_string()).collect();
        out!("diagonal: {}", factors.join(" "));
        out!("deltas:   {}", deltas.join(" "));
        out!("rank {}, phi {}", result.rank, result.phi);
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn ideal(
    g: &Graph,
    k: usize,
    ring: &str,
    univariate: bool,
    groups: &[String],
    overrides: &[String],
    entry_overrides: &[String],
    budget: Option<u64>,
    json: bool,
) -> Result<bool> {
    let domain = match ring {
        "Z" | "z" => Domain::Z,
        "Q" | "q" => Domain::Q,
        other => bail!("--ring must be Z or Q, got {other:?}"),
    };
    let ring = Ring::new(domain, univariate);
    if univariate && !groups.is_empty() {
        bail!("--group and --univariate cannot be combined");
    }
    let mut m = if univariate { ring_matrix(g, ring)? } else { generalized_distance_matrix(g)?.to_domain(domain)? };
    let pairs = overrides.iter().map(|s| parse_triple(s)).collect::<Result<Vec<_>>>()?;
    m = m.with_distance_override(&pairs)?;
    let pairs = entry_overrides.iter().map(|s| parse_triple(s)).collect::<Result<Vec<_>>>()?;
    m = m.with_entry_override(&pairs)?;

    let mut names: Vec<String> = Vec::new();
    if !groups.is_empty() {
        let mut spec = Vec::new();
        let mut covered = vec![false; g.n()];
        for group in groups {
            let (name, list) =
                group.split_once('=').ok_or_else(|| anyhow!("expected NAME=V0,V1,... but got {group:?}"))?;
            let vertices = list.split(',').map(|v| v.trim().parse::<usize>()).collect::<Result<Vec<_>, _>>()?;
            for &v in &vertices {
                if v >= g.n() {
                    bail!("vertex {v} out of range in group {name}");
                }
                covered[v] = true;
            }
            spec.push((names.len() as u16, vertices));
            names.push(name.to_string());
        }
        for (v, _) in covered.iter().enumerate().filter(|(_, c)| !**c) {
            spec.push((names.len() as u16, vec![v]));
            names.push(format!("x{v}"));
        }
        m = m.group_variables(&spec)?;
    }
    let name = |v: u16| if names.is_empty() { ring.var_name(v) } else { names[v as usize].clone() };

    let gb = budget.map(|budget| GbOptions { budget }).unwrap_or_default();
    let ideal = matrix_ideal(&m, k, ring, &gb)?;
    let basis = ideal.basis.to_strings_with(&name);
    if json {
        print_json(&json!({
            "graph": g.to_graph6(),
            "ring": ring.name(),
            "k": k,
            "trivial": ideal.trivial,
            "basis": basis,
            "generators": ideal.generators.len(),
            "steps": ideal.basis.steps(),
        }))?;
    } else {
        out!("I_{k} over {}: {}", ring.name(), if ideal.trivial { "trivial" } else { "nontrivial" });
        for p in &basis {
            out!("  {p}");
        }
    }
    Ok(ideal.trivial)
}

fn classify_cmd(graphs: Vec<Graph>, direct: bool, budget: Option<u64>, csv: bool, json: bool) -> Result<()> {
    let reports = classify_batch(&graphs);
    let phi = PhiOptions { gb: budget.map(|budget| GbOptions { budget }).unwrap_or_default(), ..Default::default() };
    if csv {
        out!("{}", ClassificationReport::CSV_HEADER);
    }
    let mut records = Vec::new();
    for (g, report) in graphs.iter().zip(reports) {
        let report = report.with_context(|| format!("classifying {}", g.to_graph6()))?;
        if csv {
            out!("{}", report.csv_row());
            continue;
        }
        let mut v = serde_json::to_value(&report)?;
        if direct {
            let verdicts = Family::ALL
                .iter()
                .map(|&f| direct_membership(g, f, &phi).map_err(anyhow::Error::from))
                .collect::<Result<Vec<_>>>()?;
            v["direct"] = serde_json::to_value(&verdicts)?;
        }
        if json {
            records.push(v);
        } else {
            out!("{} (n = {})", report.graph, report.n);
            for verdict in &report.verdicts {
                let witness = serde_json::to_string(&verdict.witness)?;
                out!("  {:<11} {:<3} {witness}", verdict.family.key(), if verdict.member { "in" } else { "out" });
            }
            if let Some(direct) = v.get("direct").and_then(Value::as_array) {
                for d in direct {
                    out!(
                        "  {:<11} {:<3} Phi = {} (from the ideals)",
                        d["family"].as_str().unwrap_or(""),
                        if d["member"] == true { "in" } else { "out" },
                        d["phi"]["value"]
                    );
                }
            }
        }
    }
    if json {
        print_json(&if records.len() == 1 { records.pop().expect("one record") } else { Value::Array(records) })?;
    }
    Ok(())
}

fn print_suite(r: &SuiteResult) -> Result<()> {
    out!(
        "{:<22} {} cases, {} passed, {} failed, {} budget aborts, {} ms",
        r.suite,
        r.cases,
        r.passed,
        r.failed,
        r.budget_aborts,
        r.wall_time_ms
    );
    for f in &r.failures {
        out!("  FAIL {} {}: expected {}, got {}", f.graph, f.params, f.expected, f.got);
        out!("       replay: {}", f.replay);
    }
    for note in &r.notes {
        out!("  note {note}");
    }
    Ok(())
}

fn verify(suite: &str, options: &SuiteOptions, json: bool) -> Result<bool> {
    let names: Vec<&str> = if suite == "all" { suite_names() } else { vec![suite] };
    let mut results = Vec::new();
    for name in names {
        let r = run_suite(name, options)?;
        if !json {
            print_suite(&r)?;
        }
        results.push(r);
    }
    if json {
        let v = if results.len() == 1 { serde_json::to_value(&results[0])? } else { serde_json::to_value(&results)? };
        print_json(&v)?;
    }
    Ok(results.iter().all(SuiteResult::ok))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Dist { input, json } => dist(&input.graph()?, json).map(|_| true),
        Command::Snf { input, evaluate, json } => snf(&input.graph()?, evaluate, json).map(|_| true),
        Command::Ideal { input, k, ring, univariate, groups, overrides, entry_overrides, budget, json } => {
            ideal(&input.graph()?, k, &ring, univariate, &groups, &overrides, &entry_overrides, budget, json)
                .map(|_| true)
        }
        Command::Classify { input, stream, gen, direct, budget, csv, json } => {
            let single = load_graph(&input.g6, &input.edges, &input.blowup, &input.named)?;
            let graphs = match (single, stream, gen) {
                (Some(g), None, None) => GraphStream::single(g).into_graphs(),
                (None, Some(path), None) => GraphStream::from_graph6(&read_source(&path)?, true, false)?.into_graphs(),
                (None, None, Some(n)) => GraphStream::generated(n)?.into_graphs(),
                _ => bail!("give exactly one of a graph, --stream FILE or --gen N"),
            };
            classify_cmd(graphs, direct, budget, csv, json).map(|_| true)
        }
        Command::Verify { suite, max_n, graph6, seed, budget, json } => {
            let graph6 = match graph6 {
                Some(path) => Some(GraphStream::from_graph6(&read_source(&path)?, false, false)?.into_graphs()),
                None => None,
            };
            verify(&suite, &SuiteOptions { max_n, graph6, seed, budget }, json)
        }
        Command::Suites => {
            for s in SUITES {
                out!("{:<22} {}", s.name, s.description);
            }
            Ok(true)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
