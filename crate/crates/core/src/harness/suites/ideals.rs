//! Closed-form distance ideals.

use crate::graph::Graph;
use crate::harness::{shell_g6, Case, Outcome, SuiteOptions};
use crate::ideal::{distance_ideal_with, Ring};
use crate::poly::{ideal_equal, Domain, MultiPoly};
use crate::Result;
use serde_json::json;

fn ideal_case(g: Graph, ring: Ring, expected: Vec<String>, params: serde_json::Value, opts: &SuiteOptions) -> Case {
    let gb = opts.gb();
    let univariate = if ring.is_univariate() { " --univariate" } else { "" };
    let letter = if ring.domain() == Domain::Z { "Z" } else { "Q" };
    let replay = format!("dig ideal --g6 {} --k 3 --ring {letter}{univariate} --json", shell_g6(&g));
    Case::new(g.to_graph6(), params, replay, move || {
        let ideal = distance_ideal_with(&g, 3, ring, &gb)?;
        let exp = expected.iter().map(|s| MultiPoly::parse(s, ring.domain())).collect::<Result<Vec<_>>>()?;
        let equal = ideal_equal(ideal.basis.basis(), &exp)?;
        let got = ideal.basis.to_strings_with(&|v| ring.var_name(v));
        Ok(Outcome::check(equal, format!("<{}>", expected.join(", ")), format!("<{}>", got.join(", "))))
    })
}

pub(super) fn knm(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let mut cases = Vec::new();
    for n in 3..=5 {
        for m in 3..=5 {
            let g = Graph::complete_multipartite(&[n, m]);
            let expected = (0..n + m).map(|v| format!("x{v} - 2")).collect();
            cases.push(ideal_case(g, Ring::QX, expected, json!({ "n": n, "m": m }), opts));
        }
    }
    // reference basis uses x1..x4 with parts {x1, x2} and {x3, x4}
    let k22 = [
        "x0*x1 - 1/2*x0 - 1/2*x1 - 2",
        "x0*x2 - 2*x0 - 2*x2 + 4",
        "x1*x2 - 2*x1 - 2*x2 + 4",
        "x0*x3 - 2*x0 - 2*x3 + 4",
        "x1*x3 - 2*x1 - 2*x3 + 4",
        "x2*x3 - 1/2*x2 - 1/2*x3 - 2",
    ];
    let g = Graph::complete_multipartite(&[2, 2]);
    cases.push(ideal_case(g, Ring::QX, k22.iter().map(|s| s.to_string()).collect(), json!({ "n": 2, "m": 2 }), opts));
    Ok((cases, vec![]))
}

pub(super) fn univariate(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let cases = vec![
        ideal_case(Graph::cycle(5), Ring::Zt, vec!["t + 6".into(), "11".into()], json!({ "graph": "C5" }), opts),
        ideal_case(Graph::complete(3), Ring::Zt, vec!["t^3 - 3*t + 2".into()], json!({ "graph": "K3" }), opts),
    ];
    Ok((cases, vec![]))
}
