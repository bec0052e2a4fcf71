//! Membership of connected graphs in the families `Λ_k^R` of graphs whose
//! `k+1`-th distance ideal over `R` is not trivial, decided combinatorially.
//!
//! Where the literature gives both a forbidden-subgraph and a structural
//! description, both are evaluated and must agree.

mod direct;

pub use direct::{direct_membership, DirectVerdict};

use crate::graph::{catalog, contains_induced, find_odd_hole_geq, full_mask, recognize_blowup, BlowupTemplate, Graph};
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    #[serde(rename = "lambda1_Z")]
    Lambda1Z,
    #[serde(rename = "lambda1_Q")]
    Lambda1Q,
    #[serde(rename = "lambda2_Z")]
    Lambda2Z,
    #[serde(rename = "lambda2_Q")]
    Lambda2Q,
    #[serde(rename = "lambda2_tZ")]
    Lambda2tZ,
    #[serde(rename = "lambda2_tQ")]
    Lambda2tQ,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Lambda1Z, Family::Lambda1Q, Family::Lambda2Z, Family::Lambda2Q, Family::Lambda2tZ, Family::Lambda2tQ];

    pub fn key(self) -> &'static str {
        match self {
            Family::Lambda1Z => "lambda1_Z",
            Family::Lambda1Q => "lambda1_Q",
            Family::Lambda2Z => "lambda2_Z",
            Family::Lambda2Q => "lambda2_Q",
            Family::Lambda2tZ => "lambda2_tZ",
            Family::Lambda2tQ => "lambda2_tQ",
        }
    }

    /// The index `k` with membership meaning `Φ ≤ k`.
    pub fn level(self) -> usize {
        match self {
            Family::Lambda1Z | Family::Lambda1Q => 1,
            _ => 2,
        }
    }

    pub fn ring(self) -> crate::ideal::Ring {
        use crate::ideal::Ring;
        match self {
            Family::Lambda1Z | Family::Lambda2Z => Ring::ZX,
            Family::Lambda1Q | Family::Lambda2Q => Ring::QX,
            Family::Lambda2tZ => Ring::Zt,
            Family::Lambda2tQ => Ring::Qt,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// an induced copy of a named graph: `map[i]` is the vertex playing vertex `i`
    Forbidden {
        name: String,
        map: Vec<usize>,
    },
    OddHole {
        cycle: Vec<usize>,
    },
    /// a smallest connected induced subgraph outside the family
    Obstruction {
        vertices: Vec<usize>,
        graph6: String,
    },
    /// the structural family the graph belongs to
    Structure {
        tag: String,
        params: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub family: Family,
    pub member: bool,
    pub witness: Witness,
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::invalid("graph has no vertices"));
    }
    if !g.is_connected() {
        let missing = (0..g.n()).find(|&v| g.component_mask(0, g.vertex_mask()) >> v & 1 == 0);
        return Err(Error::Disconnected(0, missing.unwrap_or(0)));
    }
    Ok(())
}

fn structure(tag: impl Into<String>, params: Vec<usize>) -> Witness {
    Witness::Structure { tag: tag.into(), params }
}

fn first_forbidden(g: &Graph, list: &[(&'static str, Graph)]) -> Option<Witness> {
    list.iter().find_map(|(name, h)| {
        (h.n() <= g.n())
            .then(|| contains_induced(g, h))
            .flatten()
            .map(|map| Witness::Forbidden { name: name.to_string(), map })
    })
}

/// Smallest connected induced subgraph failing `member`, searched by size
/// and then in increasing vertex-subset order.
fn minimal_obstruction(g: &Graph, member: impl Fn(&Graph) -> bool) -> Option<Witness> {
    let n = g.n();
    for size in 1..=n {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let mask = subset.iter().fold(0u64, |m, &v| m | 1 << v);
            if g.is_connected_subset(mask) {
                let h = g.induced_by_mask(mask);
                if !member(&h) {
                    return Some(Witness::Obstruction { vertices: subset.clone(), graph6: h.to_graph6() });
                }
            }
            if !crate::linalg::next_colex(&mut subset, n) {
                break;
            }
        }
    }
    None
}

fn complete_or_complete_bipartite(g: &Graph) -> Option<Witness> {
    if g.is_complete() {
        return Some(structure("complete", vec![g.n()]));
    }
    match g.complete_multipartite_parts() {
        Some(parts) if parts.len() == 2 => Some(structure("complete-bipartite", parts)),
        _ => None,
    }
}

fn consistency(g: &Graph, family: Family, forbidden_free: bool, structural: bool) -> Result<()> {
    if forbidden_free != structural {
        return Err(Error::Consistency(format!(
            "{family} on {}: forbidden-subgraph test says {}, structural test says {}",
            g.to_graph6(),
            forbidden_free,
            structural
        )));
    }
    Ok(())
}

/// `Λ1^Z`: `{P4, paw, diamond}`-free, equivalently complete or complete bipartite.
pub fn classify_lambda1_z(g: &Graph) -> Result<Verdict> {
    require_connected(g)?;
    let forbidden = first_forbidden(g, &catalog::lambda1_z());
    let structural = complete_or_complete_bipartite(g);
    consistency(g, Family::Lambda1Z, forbidden.is_none(), structural.is_some())?;
    Ok(Verdict {
        family: Family::Lambda1Z,
        member: structural.is_some(),
        witness: structural.or(forbidden).expect("one side holds"),
    })
}

fn star_or_complete(g: &Graph) -> Option<Witness> {
    if g.is_complete() {
        return Some(structure("complete", vec![g.n()]));
    }
    match g.complete_multipartite_parts() {
        Some(parts) if parts.len() == 2 && parts[0] == 1 => Some(structure("star", vec![parts[1]])),
        _ => None,
    }
}

/// `Λ1^Q`: `{P4, paw, diamond, C4}`-free, equivalently a star or complete.
pub fn classify_lambda1_q(g: &Graph) -> Result<Verdict> {
    require_connected(g)?;
    let forbidden = first_forbidden(g, &catalog::lambda1_q());
    let structural = star_or_complete(g);
    consistency(g, Family::Lambda1Q, forbidden.is_none(), structural.is_some())?;
    Ok(Verdict {
        family: Family::Lambda1Q,
        member: structural.is_some(),
        witness: structural.or(forbidden).expect("one side holds"),
    })
}

/// Complete multipartite with at most one part of size above one.
fn one_large_part(parts: &[usize]) -> bool {
    parts.iter().filter(|&&p| p > 1).count() <= 1
}

/// The structural side of the `Λ2^Z` test: a tag when the graph is in one of
/// the six listed families.
pub fn lambda2_z_structure(g: &Graph) -> Option<Witness> {
    if g.n() == 5 && g.edge_count() == 5 && g.degree_sequence() == [2; 5] && g.is_connected() {
        return Some(structure("C5", vec![]));
    }
    if let Some((a, b)) = g.bipartition() {
        return Some(structure("bipartite", vec![a.len(), b.len()]));
    }
    if let Some(parts) = g.complete_multipartite_parts() {
        if parts.len() == 3 {
            return Some(structure("complete-tripartite", parts));
        }
        if one_large_part(&parts) {
            return Some(structure("complete-multipartite-one-large-part", parts));
        }
    }
    for t in [BlowupTemplate::psi(), BlowupTemplate::omega()] {
        if let Some(e) = recognize_blowup(g, &t) {
            return Some(structure(format!("blowup {}", t.name), e.part_sizes));
        }
    }
    None
}

/// The forbidden-subgraph side of the `Λ2^Z` test: an induced member of `F`
/// (smallest first) or an odd hole of length at least 7.
pub fn lambda2_z_obstruction(g: &Graph) -> Option<Witness> {
    first_forbidden(g, &catalog::family_f()).or_else(|| find_odd_hole_geq(g, 7).map(|cycle| Witness::OddHole { cycle }))
}

/// `Λ2^Z`: free of `F` and of odd holes of length at least 7, equivalently
/// C5, bipartite, complete tripartite, `K_{n-p+1,1,...,1}`, or an induced
/// subgraph of a blow-up `P5^(-,+,-,+,-)` or `P4^(+,-,-,+)`.
pub fn classify_lambda2_z(g: &Graph) -> Result<Verdict> {
    require_connected(g)?;
    let forbidden = lambda2_z_obstruction(g);
    let structural = lambda2_z_structure(g);
    consistency(g, Family::Lambda2Z, forbidden.is_none(), structural.is_some())?;
    Ok(Verdict {
        family: Family::Lambda2Z,
        member: structural.is_some(),
        witness: structural.or(forbidden).expect("one side holds"),
    })
}

fn lambda2_q_structure(g: &Graph) -> Option<Witness> {
    if let Some(parts) = g.complete_multipartite_parts() {
        if parts.len() == 2 {
            return Some(structure("complete-bipartite", parts));
        }
        if parts.len() == 3 && parts[0] == 1 {
            return Some(structure("K_{1,n,m}", parts));
        }
        if one_large_part(&parts) {
            return Some(structure("complete-multipartite-one-large-part", parts));
        }
    }
    for t in BlowupTemplate::rational_family() {
        if let Some(e) = recognize_blowup(g, &t) {
            return Some(structure(format!("blowup {}", t.name), e.part_sizes));
        }
    }
    None
}

/// `Λ2^Q`, decided by its structural description: `K_{n,m}`, `K_{1,n,m}`,
/// `K_{n-p+1,1,...,1}`, or an induced subgraph of one of five blow-up patterns.
/// Non-members get a witness from `F`, an odd hole, the graphs known to have a
/// trivial third rational ideal, or else a smallest obstruction.
pub fn classify_lambda2_q(g: &Graph) -> Result<Verdict> {
    require_connected(g)?;
    if let Some(w) = lambda2_q_structure(g) {
        return Ok(Verdict { family: Family::Lambda2Q, member: true, witness: w });
    }
    let witness = match classify_lambda2_z(g)? {
        Verdict { member: false, witness, .. } => witness,
        _ => first_forbidden(g, &catalog::lambda2_q())
            .or_else(|| minimal_obstruction(g, |h| lambda2_q_structure(h).is_some()))
            .expect("the graph itself is an obstruction"),
    };
    Ok(Verdict { family: Family::Lambda2Q, member: false, witness })
}

fn lambda2_tz_structure(g: &Graph) -> Option<Witness> {
    if g.n() == 5 && g.edge_count() == 5 && g.degree_sequence() == [2; 5] && g.is_connected() {
        return Some(structure("C5", vec![]));
    }
    if let Some((a, b)) = g.bipartition() {
        return Some(structure("bipartite", vec![a.len(), b.len()]));
    }
    match g.complete_multipartite_parts() {
        Some(parts) if parts.len() == 3 => Some(structure("complete-tripartite", parts)),
        _ => None,
    }
}

/// `Λ2^{t,Z}`: C5, bipartite, or complete tripartite.
pub fn classify_lambda2_tz(g: &Graph) -> Result<Verdict> {
    require_connected(g)?;
    if let Some(w) = lambda2_tz_structure(g) {
        return Ok(Verdict { family: Family::Lambda2tZ, member: true, witness: w });
    }
    let witness =
        minimal_obstruction(g, |h| lambda2_tz_structure(h).is_some()).expect("the graph itself is an obstruction");
    Ok(Verdict { family: Family::Lambda2tZ, member: false, witness })
}

/// `Λ2^{t,Q}`: complete or complete bipartite, which is exactly `Λ1^Z`.
pub fn classify_lambda2_tq(g: &Graph) -> Result<Verdict> {
    require_connected(g)?;
    let verdict = match complete_or_complete_bipartite(g) {
        Some(w) => Verdict { family: Family::Lambda2tQ, member: true, witness: w },
        None => {
            let witness = first_forbidden(g, &catalog::lambda1_z()).expect("P4, paw or diamond present");
            Verdict { family: Family::Lambda2tQ, member: false, witness }
        }
    };
    let l1 = classify_lambda1_z(g)?;
    if l1.member != verdict.member {
        return Err(Error::Consistency(format!("{}: lambda2_tQ and lambda1_Z disagree", g.to_graph6())));
    }
    Ok(verdict)
}

pub fn classify_family(g: &Graph, family: Family) -> Result<Verdict> {
    match family {
        Family::Lambda1Z => classify_lambda1_z(g),
        Family::Lambda1Q => classify_lambda1_q(g),
        Family::Lambda2Z => classify_lambda2_z(g),
        Family::Lambda2Q => classify_lambda2_q(g),
        Family::Lambda2tZ => classify_lambda2_tz(g),
        Family::Lambda2tQ => classify_lambda2_tq(g),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub graph: String,
    pub n: usize,
    pub verdicts: Vec<Verdict>,
}

/// Containments every report must respect: `(smaller, larger)`.
pub const CONTAINMENTS: [(Family, Family); 5] = [
    (Family::Lambda1Z, Family::Lambda2Z),
    (Family::Lambda1Q, Family::Lambda2Q),
    (Family::Lambda2Q, Family::Lambda2Z),
    (Family::Lambda2tZ, Family::Lambda2Z),
    (Family::Lambda2tQ, Family::Lambda2Q),
];

impl ClassificationReport {
    pub fn member(&self, family: Family) -> bool {
        self.verdicts.iter().any(|v| v.family == family && v.member)
    }

    pub fn verdict(&self, family: Family) -> &Verdict {
        self.verdicts.iter().find(|v| v.family == family).expect("all families present")
    }

    pub const CSV_HEADER: &'static str = "graph6,n,lambda1_Z,lambda1_Q,lambda2_Z,lambda2_Q,lambda2_tZ,lambda2_tQ";

    pub fn csv_row(&self) -> String {
        let flags: Vec<&str> = Family::ALL.iter().map(|&f| if self.member(f) { "1" } else { "0" }).collect();
        format!("{},{},{}", self.graph, self.n, flags.join(","))
    }
}

/// Classify against all six families and check the containments between them.
pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    let verdicts = Family::ALL.iter().map(|&f| classify_family(g, f)).collect::<Result<Vec<_>>>()?;
    let report = ClassificationReport { graph: g.to_graph6(), n: g.n(), verdicts };
    for (small, large) in CONTAINMENTS {
        if report.member(small) && !report.member(large) {
            return Err(Error::Consistency(format!("{}: member of {small} but not of {large}", report.graph)));
        }
    }
    Ok(report)
}

/// Classify many graphs in parallel; results keep the input order.
pub fn classify_batch(graphs: &[Graph]) -> Vec<Result<ClassificationReport>> {
    use rayon::prelude::*;
    graphs.par_iter().map(classify).collect()
}

/// The induced subgraph left after deleting the vertices in `deleted`, when
/// it is nonempty and connected.
pub fn connected_remainder(g: &Graph, deleted: u64) -> Option<Graph> {
    let mask = full_mask(g.n()) & !deleted;
    (mask != 0 && g.is_connected_subset(mask)).then(|| g.induced_by_mask(mask))
}
