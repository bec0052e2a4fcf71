//! Classifier sweeps: the combinatorial tests against each other and against
//! the ideals.

use crate::classify::{
    classify, classify_family, direct_membership, lambda2_z_obstruction, lambda2_z_structure, Family,
};
use crate::graph::{contains_induced, Graph};
use crate::harness::{generate_connected, random_connected, shell_g6, Case, Outcome, SuiteOptions, MAX_GENERATED};
use crate::ideal::PhiOptions;
use crate::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

/// The supplied stream (connected graphs only), or every connected graph up to `max_n`.
fn sweep(opts: &SuiteOptions, default_max: usize) -> Result<Vec<Graph>> {
    if let Some(stream) = &opts.graph6 {
        return Ok(stream.iter().filter(|g| g.n() > 0 && g.is_connected()).cloned().collect());
    }
    let mut out = Vec::new();
    for n in 1..=opts.max_n.unwrap_or(default_max) {
        out.extend(generate_connected(n)?);
    }
    Ok(out)
}

fn phi_options(opts: &SuiteOptions) -> PhiOptions {
    PhiOptions { gb: opts.gb(), ..Default::default() }
}

fn verdict(member: bool) -> &'static str {
    if member {
        "in"
    } else {
        "out"
    }
}

pub(super) fn lambda2_z(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let cases = sweep(opts, MAX_GENERATED)?
        .into_iter()
        .map(|g| {
            let phi = phi_options(opts);
            let replay = format!("dig classify --g6 {} --direct --json", shell_g6(&g));
            Case::new(g.to_graph6(), json!({ "n": g.n() }), replay, move || {
                let forbidden_free = lambda2_z_obstruction(&g).is_none();
                let structural = lambda2_z_structure(&g).is_some();
                let direct = direct_membership(&g, Family::Lambda2Z, &phi)?.member;
                let agree = forbidden_free == structural && structural == direct;
                Ok(Outcome::check(
                    agree,
                    "forbidden = structural = direct",
                    format!(
                        "forbidden-free {}, structural {}, direct {}",
                        verdict(forbidden_free),
                        verdict(structural),
                        verdict(direct)
                    ),
                ))
            })
        })
        .collect();
    Ok((cases, vec![]))
}

const RANDOM_PER_SIZE: usize = 10;

pub(super) fn classifier_properties(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let mut graphs = sweep(opts, MAX_GENERATED)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed());
    for n in 7..=9 {
        for _ in 0..RANDOM_PER_SIZE {
            let p = rng.gen_range(0.1..0.6);
            graphs.push(random_connected(&mut rng, n, p));
        }
    }
    let c5 = Graph::cycle(5);
    let cases = graphs
        .into_iter()
        .enumerate()
        .map(|(index, g)| {
            let seed = opts.seed().wrapping_add(index as u64);
            let c5 = c5.clone();
            let replay = format!("dig classify --g6 {} --json", shell_g6(&g));
            Case::new(g.to_graph6(), json!({ "n": g.n(), "seed": seed }), replay, move || {
                // containments are checked inside classify
                let report = classify(&g)?;
                let free = report.member(Family::Lambda2Z);
                if free && g.n() != 5 && contains_induced(&g, &c5).is_some() {
                    return Ok(Outcome::Fail {
                        expected: "an F- and odd-hole-free graph with an induced C5 is C5".into(),
                        got: "induced C5 in a larger member".into(),
                    });
                }
                if free && g.n() > 1 {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    for _ in 0..3 {
                        let deleted = rng.gen_range(1..1u64 << g.n()) & g.vertex_mask();
                        let Some(h) = crate::classify::connected_remainder(&g, deleted) else { continue };
                        if lambda2_z_obstruction(&h).is_some() {
                            return Ok(Outcome::Fail {
                                expected: "induced subgraphs stay forbidden-free".into(),
                                got: format!("deleting {deleted:#b} leaves {}", h.to_graph6()),
                            });
                        }
                    }
                }
                Ok(Outcome::Pass)
            })
        })
        .collect();
    Ok((cases, vec![]))
}

fn direct_suite(opts: &SuiteOptions, family: Family) -> Result<(Vec<Case>, Vec<String>)> {
    let cases = sweep(opts, MAX_GENERATED)?
        .into_iter()
        .map(|g| {
            let phi = phi_options(opts);
            let replay = format!("dig classify --g6 {} --direct --json", shell_g6(&g));
            Case::new(g.to_graph6(), json!({ "n": g.n(), "family": family }), replay, move || {
                let structural = classify_family(&g, family)?.member;
                let direct = direct_membership(&g, family, &phi)?;
                Ok(Outcome::check(
                    structural == direct.member,
                    format!("structural verdict {}", verdict(structural)),
                    format!("Phi = {} so the ideals say {}", direct.phi.value, verdict(direct.member)),
                ))
            })
        })
        .collect();
    Ok((cases, vec![]))
}

pub(super) fn lambda2_q_direct(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    direct_suite(opts, Family::Lambda2Q)
}

pub(super) fn lambda2_tz_direct(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    direct_suite(opts, Family::Lambda2tZ)
}

pub(super) fn lambda2_tq_direct(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    direct_suite(opts, Family::Lambda2tQ)
}
