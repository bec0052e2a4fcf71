//! Graph streams and the verification suites.
//!
//! A suite is a list of independent cases, each a closure over one input.
//! Cases run in parallel; results are collected in case order, so two runs
//! with the same options produce the same payload.

mod generate;
mod suites;

pub use generate::{
    canonical_form, generate_connected, generate_connected_bipartite, generate_trees, random_connected,
    random_connected_bipartite, random_tree, tree_code, MAX_BIPARTITE, MAX_GENERATED, MAX_TREE,
};
pub use suites::SUITES;

use crate::graph::{parse_graph6_stream, Graph};
use crate::poly::GbOptions;
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeSet;
use std::time::Instant;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StreamSource {
    Generated { n: usize },
    Graph6,
    Literal,
}

#[derive(Clone, Debug)]
pub struct GraphStream {
    pub source: StreamSource,
    pub connected_only: bool,
    pub dedup: bool,
    graphs: Vec<Graph>,
}

impl GraphStream {
    /// Connected graphs on `n <= 6` vertices, one per isomorphism class.
    pub fn generated(n: usize) -> Result<Self> {
        Ok(GraphStream {
            source: StreamSource::Generated { n },
            connected_only: true,
            dedup: true,
            graphs: generate_connected(n)?,
        })
    }

    /// Records from a graph6 stream. With `dedup`, isomorphic copies are
    /// dropped for graphs up to 8 vertices and repeated records beyond that.
    pub fn from_graph6(text: &str, connected_only: bool, dedup: bool) -> Result<Self> {
        let mut graphs = parse_graph6_stream(text)?;
        if connected_only {
            graphs.retain(|g| g.n() > 0 && g.is_connected());
        }
        if dedup {
            let mut seen = BTreeSet::new();
            graphs.retain(|g| {
                let key = if g.n() <= 8 { format!("{}:{}", g.n(), canonical_form(g).0) } else { g.to_graph6() };
                seen.insert(key)
            });
        }
        Ok(GraphStream { source: StreamSource::Graph6, connected_only, dedup, graphs })
    }

    pub fn single(g: Graph) -> Self {
        GraphStream { source: StreamSource::Literal, connected_only: false, dedup: false, graphs: vec![g] }
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// largest order swept; each suite has its own default
    pub max_n: Option<usize>,
    /// graphs to sweep instead of (or in addition to) the internal generator
    pub graph6: Option<Vec<Graph>>,
    pub seed: Option<u64>,
    /// Gröbner step budget; `None` uses the default (or `DIG_GB_BUDGET`)
    pub budget: Option<u64>,
}

pub const DEFAULT_SEED: u64 = 20240229;

impl SuiteOptions {
    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }

    pub fn gb(&self) -> GbOptions {
        match self.budget {
            Some(budget) => GbOptions { budget },
            None => GbOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub graph: String,
    pub params: Value,
    pub expected: String,
    pub got: String,
    /// CLI invocation that reproduces the case
    pub replay: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub budget_aborts: usize,
    pub failures: Vec<Failure>,
    /// computed values reported for information (not pass/fail)
    pub notes: Vec<String>,
    pub wall_time_ms: u64,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// The result without its timing, for comparing runs.
    pub fn payload(&self) -> SuiteResult {
        SuiteResult { wall_time_ms: 0, ..self.clone() }
    }
}

pub(crate) enum Outcome {
    Pass,
    Fail {
        expected: String,
        got: String,
    },
    /// passes, with something worth reporting
    Note(String),
}

impl Outcome {
    pub(crate) fn check(ok: bool, expected: impl ToString, got: impl ToString) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail { expected: expected.to_string(), got: got.to_string() }
        }
    }
}

type Check = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub(crate) struct Case {
    graph: String,
    params: Value,
    replay: String,
    check: Check,
}

impl Case {
    pub(crate) fn new(
        graph: impl Into<String>,
        params: Value,
        replay: impl Into<String>,
        check: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Case {
        Case { graph: graph.into(), params, replay: replay.into(), check: Box::new(check) }
    }
}

pub(crate) fn run_cases(name: &str, cases: Vec<Case>, mut notes: Vec<String>, start: Instant) -> SuiteResult {
    let outcomes: Vec<Result<Outcome>> = cases.par_iter().map(|c| (c.check)()).collect();
    let mut result = SuiteResult {
        suite: name.to_string(),
        cases: cases.len(),
        passed: 0,
        failed: 0,
        budget_aborts: 0,
        failures: Vec::new(),
        notes: Vec::new(),
        wall_time_ms: 0,
    };
    for (case, outcome) in cases.iter().zip(outcomes) {
        let failure = |expected: String, got: String| Failure {
            graph: case.graph.clone(),
            params: case.params.clone(),
            expected,
            got,
            replay: case.replay.clone(),
        };
        match outcome {
            Ok(Outcome::Pass) => result.passed += 1,
            Ok(Outcome::Note(note)) => {
                result.passed += 1;
                notes.push(format!("{}: {note}", case.graph));
            }
            Ok(Outcome::Fail { expected, got }) => {
                result.failed += 1;
                result.failures.push(failure(expected, got));
            }
            Err(e) => {
                if matches!(e, Error::Budget { .. }) {
                    result.budget_aborts += 1;
                }
                result.failed += 1;
                result.failures.push(failure("completion".into(), e.to_string()));
            }
        }
    }
    result.notes = notes;
    result.wall_time_ms = start.elapsed().as_millis() as u64;
    result
}

/// Run one named suite.
pub fn run_suite(name: &str, options: &SuiteOptions) -> Result<SuiteResult> {
    let start = Instant::now();
    let suite = SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::invalid(format!("unknown suite {name:?}; known: {}", suite_names().join(", "))))?;
    let (cases, notes) = (suite.build)(options)?;
    Ok(run_cases(name, cases, notes, start))
}

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// Quote a graph6 string for a shell command line.
pub(crate) fn shell_g6(g: &Graph) -> String {
    format!("'{}'", g.to_graph6().replace('\'', r"'\''"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_streams_filter_and_dedup() {
        // P3 twice under different labellings, an edgeless pair, and a triangle
        let text = "BW\nBg\nA?\nBw\n";
        let s = GraphStream::from_graph6(text, true, true).unwrap();
        assert_eq!(s.graphs().len(), 2);
        let all = GraphStream::from_graph6(text, false, false).unwrap();
        assert_eq!(all.graphs().len(), 4);
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteOptions::default()).is_err());
    }
}
