//! Seeded property checks relating ideals, evaluations and Smith forms.

use crate::graph::Graph;
use crate::harness::{generate_connected, random_connected, shell_g6, Case, Outcome, SuiteOptions};
use crate::ideal::{generalized_distance_matrix, matrix_ideal, phi, symbolic_minors, PhiOptions, Ring, SymbolicMatrix};
use crate::linalg::{minor_gcd, smith_normal_form, IntMatrix};
use crate::poly::{groebner_with, Domain, MultiPoly};
use crate::Result;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::collections::BTreeMap;

const EVAL_CASES: usize = 200;
const SNF_CASES: usize = 200;
const MONOTONE_PAIRS: usize = 50;

fn join(d: &[i64]) -> String {
    d.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

pub(super) fn eval_gcd(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed());
    let mut cases = Vec::new();
    for index in 0..EVAL_CASES {
        let n = rng.gen_range(2..=6);
        let p = rng.gen_range(0.2..0.7);
        let g = random_connected(&mut rng, n, p);
        let d: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let k = rng.gen_range(1..=n);
        let replay = format!("dig snf --g6 {} --evaluate {} --json", shell_g6(&g), join(&d));
        let params = json!({ "case": index, "d": d, "k": k });
        cases.push(Case::new(g.to_graph6(), params, replay, move || {
            let m = generalized_distance_matrix(&g)?;
            let point: Vec<BigRational> = d.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            let mut gcd = BigInt::zero();
            for minor in symbolic_minors(&m, k) {
                gcd = gcd.gcd(&minor.evaluate(&point)?.to_integer());
            }
            let values: Vec<BigInt> = d.iter().map(|&x| BigInt::from(x)).collect();
            let delta = smith_normal_form(&m.evaluate(&values)?).delta(k);
            Ok(Outcome::check(gcd == delta, format!("Delta_{k} = {delta}"), format!("gcd of evaluated minors {gcd}")))
        }));
    }
    Ok((cases, vec![]))
}

/// Random unimodular matrix: a product of elementary operations.
fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for _ in 0..3 * n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        match rng.gen_range(0..3) {
            0 => u.swap_rows(a, b),
            1 if a != b => u.add_row_multiple(a, b, &BigInt::from(rng.gen_range(-3..=3))),
            _ => {
                let row: Vec<BigInt> = u.row(a).iter().map(|x| -x).collect();
                for (j, x) in row.into_iter().enumerate() {
                    u.set(a, j, x);
                }
            }
        }
    }
    u
}

pub(super) fn snf_invariance(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed());
    let mut cases = Vec::new();
    for index in 0..SNF_CASES {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let a = IntMatrix::from_fn(r, c, |_, _| BigInt::from(rng.gen_range(-9..=9)));
        let (u, v) = (random_unimodular(&mut rng, r), random_unimodular(&mut rng, c));
        let params = json!({ "case": index, "matrix": a.to_rows().iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>() });
        let replay = format!("dig verify snf-invariance --seed {} --json", opts.seed());
        cases.push(Case::new("-", params, replay, move || {
            let base = smith_normal_form(&a);
            let moved = smith_normal_form(&u.mul(&a)?.mul(&v)?);
            if base.invariant_factors != moved.invariant_factors {
                return Ok(Outcome::Fail {
                    expected: format!("{:?}", base.diagonal()),
                    got: format!("{:?}", moved.diagonal()),
                });
            }
            for k in 1..=r.min(c) {
                let oracle = minor_gcd(&a, k);
                if base.delta(k) != oracle {
                    return Ok(Outcome::Fail {
                        expected: format!("Delta_{k} = {oracle} from minors"),
                        got: base.delta(k).to_string(),
                    });
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    Ok((cases, vec![]))
}

fn diameter_at_most_two(h: &Graph) -> bool {
    h.distance_matrix().map(|d| d.diameter() <= 2).unwrap_or(false)
}

/// `D_X(H)` computed from `H` alone, with vertex `j` of `H` using the
/// variable of vertex `vs[j]` of `G`.
fn relabelled_matrix(h: &Graph, vs: &[usize]) -> Result<SymbolicMatrix> {
    let m = generalized_distance_matrix(h)?;
    let domain = m.domain();
    let map: BTreeMap<u16, MultiPoly> =
        vs.iter().enumerate().map(|(j, &v)| (j as u16, MultiPoly::var(domain, v as u16))).collect();
    m.substitute(&map)
}

pub(super) fn induced_monotone(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed());
    let mut cases = Vec::new();
    while cases.len() < MONOTONE_PAIRS {
        let n = rng.gen_range(4..=6);
        let p = rng.gen_range(0.2..0.6);
        let g = random_connected(&mut rng, n, p);
        let found = (0..100).find_map(|_| {
            let mask = rng.gen_range(1..1u64 << n);
            let h = g.induced_by_mask(mask);
            (h.n() >= 2 && mask.count_ones() < n as u32 && diameter_at_most_two(&h)).then_some(mask)
        });
        let Some(mask) = found else { continue };
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let gb = opts.gb();
        let params = json!({ "case": cases.len(), "subgraph": vs });
        let replay = format!("dig ideal --g6 {} --k 1 --ring Q --json", shell_g6(&g));
        cases.push(Case::new(g.to_graph6(), params, replay, move || {
            let h = g.induced_subgraph(&vs)?;
            let hm = relabelled_matrix(&h, &vs)?.to_domain(Domain::Q)?;
            let gm = generalized_distance_matrix(&g)?;
            for i in 1..=vs.len() {
                let big = matrix_ideal(&gm, i, Ring::QX, &gb)?;
                let small = groebner_with(&symbolic_minors(&hm, i), &gb)?;
                for p in small.basis() {
                    if !big.basis.contains(p)? {
                        return Ok(Outcome::Fail {
                            expected: format!("I_{i}(H) inside I_{i}(G)"),
                            got: format!("{p} not in I_{i}(G)"),
                        });
                    }
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    Ok((cases, vec![]))
}

pub(super) fn phi_bounds(opts: &SuiteOptions) -> Result<(Vec<Case>, Vec<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed());
    let mut graphs = Vec::new();
    match &opts.graph6 {
        Some(stream) => graphs.extend(stream.iter().filter(|g| g.n() > 0 && g.is_connected()).cloned()),
        None => {
            for n in 1..=opts.max_n.unwrap_or(5) {
                graphs.extend(generate_connected(n)?);
            }
        }
    }
    let cases = graphs
        .into_iter()
        .map(|g| {
            let n = g.n();
            let mut points = vec![vec![0; n], vec![1; n], vec![2; n]];
            for _ in 0..3 {
                points.push((0..n).map(|_| rng.gen_range(-2..=2)).collect());
            }
            let options = PhiOptions { gb: opts.gb(), k_max: Some(n), ..Default::default() };
            let replay = format!("dig classify --g6 {} --direct --json", shell_g6(&g));
            Case::new(g.to_graph6(), json!({ "n": n, "points": points }), replay, move || {
                let z = phi(&g, Ring::ZX, &options)?.value;
                let q = phi(&g, Ring::QX, &options)?.value;
                if z > q {
                    return Ok(Outcome::Fail { expected: "Phi_Z <= Phi_Q".into(), got: format!("{z} > {q}") });
                }
                let m = generalized_distance_matrix(&g)?;
                for d in &points {
                    let values: Vec<BigInt> = d.iter().map(|&x| BigInt::from(x)).collect();
                    let small = smith_normal_form(&m.evaluate(&values)?).phi;
                    if z > small {
                        return Ok(Outcome::Fail {
                            expected: format!("Phi_Z <= phi at d = ({})", join(d)),
                            got: format!("{z} > {small}"),
                        });
                    }
                }
                Ok(Outcome::Pass)
            })
        })
        .collect();
    Ok((cases, vec![]))
}
