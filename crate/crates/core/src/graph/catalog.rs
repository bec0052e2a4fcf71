//! Named small graphs: the forbidden graphs for the first ideals, the family
//! `F` of minimal forbidden graphs for `Λ2^Z`, and the graphs excluded from
//! `Λ2^Q`. Edge lists are 0-based.

use super::{BlowupSpec, Graph};

type Entry = (&'static str, usize, &'static [(usize, usize)]);

const LAMBDA1: &[Entry] = &[
    ("P4", 4, &[(0, 1), (1, 2), (2, 3)]),
    ("paw", 4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
    ("diamond", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
    ("C4", 4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
];

const FAMILY_F: &[Entry] = &[
    ("bull", 5, &[(0, 4), (1, 3), (2, 3), (2, 4), (3, 4)]),
    ("dart", 5, &[(0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    ("house", 5, &[(0, 1), (0, 4), (1, 3), (2, 3), (2, 4), (3, 4)]),
    ("gem", 5, &[(0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]),
    ("full-house", 5, &[(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    ("G_{6,5}", 6, &[(0, 4), (1, 5), (2, 3), (2, 5), (3, 5), (4, 5)]),
    ("5-pan", 6, &[(0, 5), (1, 2), (1, 4), (2, 3), (3, 5), (4, 5)]),
    ("G_{6,7}", 6, &[(0, 4), (1, 2), (1, 5), (2, 5), (3, 4), (3, 5)]),
    ("G_{6,8}", 6, &[(0, 5), (1, 4), (1, 5), (2, 3), (2, 5), (3, 5), (4, 5)]),
    ("G_{6,9}", 6, &[(0, 5), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]),
    ("G_{6,10}", 6, &[(0, 1), (0, 5), (1, 4), (2, 4), (2, 5), (3, 4), (3, 5)]),
    ("co-twin-house", 6, &[(0, 5), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)]),
    ("G_{6,12}", 6, &[(0, 5), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)]),
    ("co-twin-C5", 6, &[(0, 1), (0, 5), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)]),
    (
        "G_{6,14}",
        6,
        &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
    ),
    ("G_{6,15}", 7, &[(0, 1), (0, 6), (1, 6), (2, 4), (2, 5), (3, 4), (3, 5), (4, 6), (5, 6)]),
];

fn build(entry: &Entry) -> (&'static str, Graph) {
    let (name, n, edges) = *entry;
    (name, Graph::from_edges(n, edges).expect("catalog edges are valid"))
}

/// `{P4, paw, diamond}`: a connected graph avoiding these has a trivial
/// first ideal only, over the integers.
pub fn lambda1_z() -> Vec<(&'static str, Graph)> {
    LAMBDA1[..3].iter().map(build).collect()
}

/// `{P4, paw, diamond, C4}`, the rational counterpart.
pub fn lambda1_q() -> Vec<(&'static str, Graph)> {
    LAMBDA1.iter().map(build).collect()
}

/// The sixteen graphs of `F`, smallest first.
pub fn family_f() -> Vec<(&'static str, Graph)> {
    FAMILY_F.iter().map(build).collect()
}

/// Graphs with a trivial third ideal over `Q[X]` that lie in `Λ2^Z`.
pub fn lambda2_q() -> Vec<(&'static str, Graph)> {
    let blowup = |a: &[i64]| BlowupSpec::new(a.to_vec()).expect("small blow-up").build();
    vec![
        ("P5", Graph::path(5)),
        ("C5", Graph::cycle(5)),
        ("H1", blowup(&[-1, 0, 0, 0])),
        ("H2", blowup(&[0, -1, 0, 0])),
        ("H3", blowup(&[1, -1, -1])),
        ("H4", blowup(&[1, -1, 1])),
        ("K_{2,2,2}", Graph::complete_multipartite(&[2, 2, 2])),
    ]
}

pub fn names() -> Vec<&'static str> {
    let mut out: Vec<&str> = LAMBDA1.iter().map(|e| e.0).collect();
    out.extend(FAMILY_F.iter().map(|e| e.0));
    out.extend(lambda2_q().into_iter().map(|e| e.0));
    out
}

/// Look up a catalog graph by name.
pub fn by_name(name: &str) -> Option<Graph> {
    LAMBDA1
        .iter()
        .chain(FAMILY_F)
        .find(|e| e.0 == name)
        .map(|e| build(e).1)
        .or_else(|| lambda2_q().into_iter().find(|e| e.0 == name).map(|e| e.1))
}
