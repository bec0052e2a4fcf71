//! Smith forms and determinants of plain and evaluated distance matrices.

use crate::graph::{BlowupSpec, Graph};
use crate::harness::{
    canonical_form, generate_connected_bipartite, generate_trees, random_connected_bipartite, shell_g6, Case, Outcome,
    SuiteOptions, MAX_BIPARTITE,
};
use crate::ideal::evaluated_snf;
use crate::linalg::{determinant, minor_gcd, smith_normal_form};
use crate::Result;
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

fn snf_replay(g: &Graph) -> String {
    format!("dig snf --g6 {} --json", shell_g6(g))
}

fn trees(opts: &SuiteOptions) -> Result<Vec<Graph>> {
    if let Some(stream) = &opts.graph6 {
        return Ok(stream.iter().filter(|g| g.is_connected() && g.edge_count() + 1 == g.n()).cloned().collect());
    }
    let mut out = Vec::new();
    for n in 2..=opts.max_n.unwrap_or(9) {
        out.extend(generate_trees(n)?);
    }
    Ok(out)
}

/// Invariant factors of `D(T)` for a tree on `n + 1` vertices.
fn tree_factors(order: usize) -> Vec<i64> {
    if order == 2 {
        return vec![1, 1];
    }
    let n = order as i64 - 1;
    let mut f = vec![1, 1];
    f.extend(std::iter::repeat_n(2, order - 3));
    f.push(2 * n);
    f
}

pub(super) fn tree_snf(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let cases = trees(opts)?
        .into_iter()
        .map(|t| {
            let expected = tree_factors(t.n());
            Case::new(t.to_graph6(), json!({ "n": t.n() }), snf_replay(&t), move || {
                let snf = smith_normal_form(&t.distance_matrix()?.to_int_matrix());
                Ok(Outcome::check(snf.diagonal_is(&expected), format!("{expected:?}"), format!("{:?}", snf.diagonal())))
            })
        })
        .collect();
    Ok((cases, vec![]))
}

pub(super) fn graham_pollak(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let cases = trees(opts)?
        .into_iter()
        .map(|t| {
            let n = t.n() as u32 - 1;
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            let expected = BigInt::from(sign) * BigInt::from(n) * (BigInt::from(1) << (n - 1));
            Case::new(t.to_graph6(), json!({ "n": t.n() }), snf_replay(&t), move || {
                let det = determinant(&t.distance_matrix()?.to_int_matrix());
                Ok(Outcome::check(det == expected, &expected, &det))
            })
        })
        .collect();
    Ok((cases, vec![]))
}

const RANDOM_BIPARTITE_PER_SIZE: usize = 10;
const RANDOM_BIPARTITE_MAX: usize = 12;

/// Connected bipartite graphs: the stream (or every class up to `max_n`,
/// default 8), then seeded random ones on the remaining orders up to 12.
fn bipartite_sweep(opts: &SuiteOptions) -> Result<Vec<(Graph, &'static str)>> {
    let mut out = Vec::new();
    let max_n = opts.max_n.unwrap_or(MAX_BIPARTITE);
    match &opts.graph6 {
        Some(stream) => out.extend(
            stream.iter().filter(|g| g.n() > 0 && g.is_connected() && g.is_bipartite()).map(|g| (g.clone(), "stream")),
        ),
        None => {
            for n in 1..=max_n.min(MAX_BIPARTITE) {
                out.extend(generate_connected_bipartite(n)?.into_iter().map(|g| (g, "generated")));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed());
    let first_random = out.iter().map(|(g, _)| g.n()).max().unwrap_or(1) + 1;
    for n in first_random.max(2)..=RANDOM_BIPARTITE_MAX {
        for _ in 0..RANDOM_BIPARTITE_PER_SIZE {
            out.push((random_connected_bipartite(&mut rng, n, 0.3), "random"));
        }
    }
    Ok(out)
}

pub(super) fn bipartite_parity(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let cases = bipartite_sweep(opts)?
        .into_iter()
        .filter(|(g, _)| g.n() >= 3)
        .map(|(g, origin)| {
            Case::new(g.to_graph6(), json!({ "origin": origin }), snf_replay(&g), move || {
                let gcd = minor_gcd(&g.distance_matrix()?.to_int_matrix(), 3);
                let even = (&gcd % BigInt::from(2)) == BigInt::from(0);
                Ok(Outcome::check(even, "even gcd of 3-minors", &gcd))
            })
        })
        .collect();
    Ok((cases, vec![]))
}

pub(super) fn bipartite_delta3(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let k22 = canonical_form(&Graph::complete_multipartite(&[2, 2])).0;
    let mut cases: Vec<Case> = bipartite_sweep(opts)?
        .into_iter()
        .filter(|(g, _)| g.n() >= 4)
        .map(|(g, origin)| {
            let expected = if g.n() == 4 && canonical_form(&g).0 == k22 { 4 } else { 2 };
            Case::new(g.to_graph6(), json!({ "origin": origin }), snf_replay(&g), move || {
                let d3 = smith_normal_form(&g.distance_matrix()?.to_int_matrix()).delta(3);
                Ok(Outcome::check(d3 == BigInt::from(expected), expected, &d3))
            })
        })
        .collect();
    let p3 = Graph::path(3);
    cases.push(Case::new(p3.to_graph6(), json!({ "check": "|det|" }), snf_replay(&p3), move || {
        let det = determinant(&p3.distance_matrix()?.to_int_matrix());
        Ok(Outcome::check(det == BigInt::from(4) || det == BigInt::from(-4), 4, &det))
    }));
    Ok((cases, vec![]))
}

fn evaluated_case(family: &str, params: serde_json::Value, g: Graph, d: Vec<i64>, head: &[i64]) -> Case {
    let mut expected = head.to_vec();
    expected.resize(g.n(), 0);
    let list = d.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    let replay = format!("dig snf --g6 {} --evaluate {list} --json", shell_g6(&g));
    let params = json!({ "family": family, "params": params, "d": d });
    Case::new(g.to_graph6(), params, replay, move || {
        let snf = evaluated_snf(&g, &d)?;
        Ok(Outcome::check(snf.diagonal_is(&expected), format!("{expected:?}"), format!("{:?}", snf.diagonal())))
    })
}

/// Blow-up with the given part sizes; `clique[i]` chooses the kind of part `i`.
fn blowup(sizes: &[usize], clique: &[bool]) -> Graph {
    let a = sizes.iter().zip(clique).map(|(&s, &c)| if c { s as i64 - 1 } else { 1 - s as i64 }).collect();
    BlowupSpec::new(a).expect("small blow-up").build()
}

fn expand(sizes: &[usize], values: &[i64]) -> Vec<i64> {
    sizes.iter().zip(values).flat_map(|(&s, &v)| std::iter::repeat_n(v, s)).collect()
}

fn grid(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|p| (lo..=hi).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

pub(super) fn evaluated_snf_suite(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let mut cases = Vec::new();
    for pqr in grid(3, 1, 4) {
        let g = Graph::complete_multipartite(&pqr);
        let d = vec![2; g.n()];
        cases.push(evaluated_case("K_{p,q,r}", json!(pqr), g, d, &[1, 1, 4]));
    }
    for n in 2..=opts.max_n.unwrap_or(8) {
        for p in 1..n {
            let mut parts = vec![n - p];
            parts.extend(std::iter::repeat_n(1, p));
            let g = Graph::complete_multipartite(&parts);
            let d = expand(&[n - p, p], &[2, 1]);
            cases.push(evaluated_case("K_{n-p,1,...,1}", json!({ "n": n, "p": p }), g, d, &[1, 1]));
        }
    }
    for sizes in grid(5, 1, 3) {
        let g = blowup(&sizes, &[false, true, false, true, false]);
        let d = expand(&sizes, &[2, 1, 2, 1, 2]);
        cases.push(evaluated_case("Psi", json!(sizes), g, d, &[1, 1, 2, 2]));
    }
    for sizes in grid(4, 1, 3) {
        let g = blowup(&sizes, &[true, false, false, true]);
        let d = expand(&sizes, &[1, 2, 2, 1]);
        cases.push(evaluated_case("Omega", json!(sizes), g, d, &[1, 1, 3, 3]));
    }
    Ok((cases, vec![]))
}
