//! Blow-ups of paths: `P_k^a` replaces vertex `i` of `P_k` by a clique on
//! `a_i + 1` vertices (`a_i > 0`), an independent set on `-a_i + 1` vertices
//! (`a_i < 0`), or keeps it (`a_i = 0`), joining consecutive parts completely.

use super::Graph;
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlowupSpec {
    a: Vec<i64>,
}

impl BlowupSpec {
    pub fn new(a: Vec<i64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::invalid("blow-up needs a path with at least one vertex"));
        }
        let total: i64 = a.iter().map(|&x| x.abs() + 1).sum();
        if total as usize > super::MAX_VERTICES {
            return Err(Error::TooManyVertices(total as usize));
        }
        Ok(BlowupSpec { a })
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.a.iter().map(|&x| x.unsigned_abs() as usize + 1).collect()
    }

    /// Build the blow-up. Vertices are numbered part by part, left to right.
    pub fn build(&self) -> Graph {
        self.build_with_parts().0
    }

    /// Build the blow-up and report the part index of every vertex.
    pub fn build_with_parts(&self) -> (Graph, Vec<usize>) {
        let mut part_of = Vec::new();
        for (i, size) in self.part_sizes().into_iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, size));
        }
        let n = part_of.len();
        let mut g = Graph::empty(n).expect("size checked in constructor");
        for u in 0..n {
            for v in u + 1..n {
                let (pu, pv) = (part_of[u], part_of[v]);
                let adjacent = if pu == pv { self.a[pu] > 0 } else { pu.abs_diff(pv) == 1 };
                if adjacent {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        (g, part_of)
    }
}

impl fmt::Display for BlowupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "P{}:{}", self.k(), a.join(","))
    }
}

/// Literal form `P5:-1,2,-1,2,-1`; the path length must match the vector.
impl FromStr for BlowupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s.strip_prefix('P').ok_or_else(|| Error::parse(0, "blow-up literal must start with 'P'"))?;
        let (k, vector) = rest.split_once(':').ok_or_else(|| Error::parse(1, "expected ':' after path length"))?;
        let k: usize = k.parse().map_err(|_| Error::parse(1, format!("bad path length {k:?}")))?;
        let offset = 2 + k.to_string().len();
        let a = vector
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::parse(offset, format!("bad entry: {e}")))?;
        if a.len() != k {
            return Err(Error::parse(offset, format!("P{k} needs {k} entries, got {}", a.len())));
        }
        BlowupSpec::new(a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PartKind {
    /// `+`: a clique of any size
    Clique,
    /// `-`: an independent set of any size
    Independent,
    /// `0`: at most one vertex
    Single,
}

/// A sign pattern such as `P5^(-,+,-,+,-)`. Parts may be empty when
/// matching, so induced subgraphs of any blow-up of the pattern match too.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlowupTemplate {
    pub name: &'static str,
    pub parts: Vec<PartKind>,
}

impl BlowupTemplate {
    pub fn new(name: &'static str, signs: &str) -> Self {
        let parts = signs
            .chars()
            .map(|c| match c {
                '+' => PartKind::Clique,
                '-' => PartKind::Independent,
                '0' => PartKind::Single,
                _ => panic!("bad template sign {c:?}"),
            })
            .collect();
        BlowupTemplate { name, parts }
    }

    /// `P5^(-,+,-,+,-)`
    pub fn psi() -> Self {
        Self::new("P5^(-,+,-,+,-)", "-+-+-")
    }

    /// `P4^(+,-,-,+)`
    pub fn omega() -> Self {
        Self::new("P4^(+,-,-,+)", "+--+")
    }

    /// The five patterns of the rational classification.
    pub fn rational_family() -> Vec<Self> {
        vec![
            Self::new("P3^(+,-,0)", "+-0"),
            Self::new("P3^(+,0,+)", "+0+"),
            Self::new("P4^(0,+,0,0)", "0+00"),
            Self::new("P4^(+,0,0,0)", "+000"),
            Self::new("P3^(+,0,-)", "+0-"),
        ]
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupEmbedding {
    pub template: &'static str,
    /// template position of every vertex
    pub position: Vec<usize>,
    pub part_sizes: Vec<usize>,
}

impl BlowupEmbedding {
    /// The blow-up vector realised by the nonempty parts (empty parts at the
    /// ends are dropped; a connected graph never leaves an interior part empty).
    pub fn spec(&self, template: &BlowupTemplate) -> Option<BlowupSpec> {
        let first = self.part_sizes.iter().position(|&s| s > 0)?;
        let last = self.part_sizes.iter().rposition(|&s| s > 0)?;
        let mut a = Vec::new();
        for i in first..=last {
            let s = self.part_sizes[i] as i64;
            if s == 0 {
                return None;
            }
            a.push(match template.parts[i] {
                PartKind::Clique => s - 1,
                PartKind::Independent => -(s - 1),
                PartKind::Single => 0,
            });
        }
        BlowupSpec::new(a).ok()
    }
}

/// Assign every vertex of `g` to a template position so that parts are
/// cliques / independent sets / singletons as dictated, consecutive parts are
/// completely joined and non-consecutive parts are not joined at all.
///
/// Backtracking over per-vertex position domains with unit propagation; the
/// most constrained vertex is branched on first and positions are tried in
/// ascending order, so the first assignment found is deterministic.
pub fn recognize_blowup(g: &Graph, template: &BlowupTemplate) -> Option<BlowupEmbedding> {
    let k = template.len();
    assert!((1..=8).contains(&k), "templates have 1..=8 parts");
    let full: u8 = if k == 8 { u8::MAX } else { (1u8 << k) - 1 };
    let mut domains = vec![full; g.n()];
    let mut assigned = vec![false; g.n()];
    if !search(g, template, &mut domains, &mut assigned) {
        return None;
    }
    let position: Vec<usize> = domains.iter().map(|d| d.trailing_zeros() as usize).collect();
    let mut part_sizes = vec![0; k];
    for &p in &position {
        part_sizes[p] += 1;
    }
    Some(BlowupEmbedding { template: template.name, position, part_sizes })
}

fn allowed_for(template: &BlowupTemplate, p: usize, adjacent: bool) -> u8 {
    let k = template.len();
    let mut near = 0u8;
    if p > 0 {
        near |= 1 << (p - 1);
    }
    if p + 1 < k {
        near |= 1 << (p + 1);
    }
    let full: u8 = if k == 8 { u8::MAX } else { (1u8 << k) - 1 };
    let same = 1u8 << p;
    if adjacent {
        near | if template.parts[p] == PartKind::Clique { same } else { 0 }
    } else {
        let far = full & !near & !same;
        far | if template.parts[p] == PartKind::Independent { same } else { 0 }
    }
}

/// Fix `v` at position `p` and propagate; false on a wipe-out.
fn assign(g: &Graph, t: &BlowupTemplate, domains: &mut [u8], assigned: &mut [bool], v: usize, p: usize) -> bool {
    let mut queue = vec![(v, p)];
    while let Some((v, p)) = queue.pop() {
        if assigned[v] {
            if domains[v] != 1 << p {
                return false;
            }
            continue;
        }
        domains[v] = 1 << p;
        assigned[v] = true;
        for u in 0..g.n() {
            if u == v {
                continue;
            }
            let allowed = allowed_for(t, p, g.has_edge(u, v));
            if assigned[u] {
                if domains[u] & allowed == 0 {
                    return false;
                }
                continue;
            }
            domains[u] &= allowed;
            match domains[u].count_ones() {
                0 => return false,
                1 => queue.push((u, domains[u].trailing_zeros() as usize)),
                _ => {}
            }
        }
    }
    true
}

fn search(g: &Graph, t: &BlowupTemplate, domains: &mut Vec<u8>, assigned: &mut Vec<bool>) -> bool {
    let next = (0..g.n()).filter(|&v| !assigned[v]).min_by_key(|&v| (domains[v].count_ones(), v));
    let Some(v) = next else { return true };
    let options = domains[v];
    for p in 0..t.len() {
        if options >> p & 1 == 0 {
            continue;
        }
        let (saved_d, saved_a) = (domains.clone(), assigned.clone());
        if assign(g, t, domains, assigned, v, p) && search(g, t, domains, assigned) {
            return true;
        }
        *domains = saved_d;
        *assigned = saved_a;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_p3_example() {
        let spec: BlowupSpec = "P3:1,-1,0".parse().unwrap();
        let (g, parts) = spec.build_with_parts();
        assert_eq!(g.n(), 5);
        assert_eq!(parts, vec![0, 0, 1, 1, 2]);
        // K2 on {0,1}, joined to independent {2,3}, joined to 4
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]);
        assert!(g.is_connected());
    }

    #[test]
    fn all_zero_is_a_path() {
        let spec = BlowupSpec::new(vec![0; 5]).unwrap();
        assert_eq!(spec.build(), Graph::path(5));
        let g = BlowupSpec::new(vec![1, 0, 0, 0]).unwrap().build();
        assert_eq!(g.induced_subgraph(&[1, 2, 3, 4]).unwrap(), Graph::path(4));
    }

    #[test]
    fn literal_errors() {
        assert!("Q3:1,2,3".parse::<BlowupSpec>().is_err());
        assert!("P3:1,2".parse::<BlowupSpec>().is_err());
        assert!("P2:1,x".parse::<BlowupSpec>().is_err());
        assert_eq!("P2:1,-3".parse::<BlowupSpec>().unwrap().to_string(), "P2:1,-3");
    }

    #[test]
    fn p5_matches_psi() {
        let m = recognize_blowup(&Graph::path(5), &BlowupTemplate::psi()).unwrap();
        assert_eq!(m.part_sizes, vec![1; 5]);
    }

    #[test]
    fn house_matches_nothing() {
        let house = crate::graph::catalog::by_name("house").unwrap();
        let mut templates = vec![BlowupTemplate::psi(), BlowupTemplate::omega()];
        templates.extend(BlowupTemplate::rational_family());
        for t in &templates {
            assert!(recognize_blowup(&house, t).is_none(), "{}", t.name);
        }
    }

    #[test]
    fn omega_with_empty_last_part() {
        let g = BlowupSpec::new(vec![2, -1, -1]).unwrap().build();
        let t = BlowupTemplate::omega();
        let m = recognize_blowup(&g, &t).unwrap();
        assert_eq!(m.part_sizes, vec![3, 2, 2, 0]);
        assert_eq!(m.spec(&t).unwrap().a(), &[2, -1, -1]);
    }

    #[test]
    fn single_parts_hold_one_vertex() {
        // K_{1,2}: a vertex joined to an independent pair does not fit 0 0
        let t = BlowupTemplate::new("P2^(0,0)", "00");
        assert!(recognize_blowup(&Graph::star(2), &t).is_none());
        assert!(recognize_blowup(&Graph::path(2), &t).is_some());
    }
}
