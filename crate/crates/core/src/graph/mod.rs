//! Simple undirected graphs on at most 64 vertices.
//!
//! Neighbourhoods are single-word bitsets, which keeps induced-subgraph
//! search and subset iteration cheap at the sizes this crate works with.

mod blowup;
pub mod catalog;
mod distance;
mod edgelist;
mod graph6;
mod holes;
mod induced;
mod structure;

pub use blowup::{recognize_blowup, BlowupEmbedding, BlowupSpec, BlowupTemplate, PartKind};
pub use distance::DistanceMatrix;
pub use edgelist::parse_edge_list;
pub use graph6::{parse_graph6, parse_graph6_stream};
pub use holes::{find_odd_hole_geq, is_induced_cycle};
pub use induced::{contains_induced, is_induced_embedding};

use crate::{Error, Result};
use std::fmt;

pub const MAX_VERTICES: usize = 64;

/// Iterate the set bits of a word, lowest first.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n], labels: None })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::invalid(format!("{} labels for {} vertices", labels.len(), self.n)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path within vertex cap")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("cycle within vertex cap")
    }

    pub fn complete(n: usize) -> Self {
        Graph::complete_multipartite(&vec![1; n])
    }

    pub fn star(leaves: usize) -> Self {
        Graph::complete_multipartite(&[1, leaves])
    }

    /// Complete multipartite graph; parts are numbered consecutively in the order given.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut g = Graph::empty(n).expect("multipartite within vertex cap");
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.adj[u] |= 1 << v;
                    g.adj[v] |= 1 << u;
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.adj[u].checked_shr(u as u32 + 1).unwrap_or(0)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj, labels: self.labels.clone() }
    }

    /// Vertices reachable from `start` within the vertex subset `within`.
    pub(crate) fn component_mask(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_mask(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// True when the subgraph induced by `mask` is connected (the empty set counts as connected).
    pub fn is_connected_subset(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        self.component_mask(start, mask) == mask
    }

    /// Induced subgraph on `vs`, relabelled `0..vs.len()` in the given order.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph> {
        if vs.is_empty() {
            return Err(Error::invalid("induced subgraph needs at least one vertex"));
        }
        let mut seen = 0u64;
        for &v in vs {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::invalid(format!("vertex {v} repeated")));
            }
            seen |= 1 << v;
        }
        Ok(self.induced_unchecked(vs))
    }

    pub(crate) fn induced_unchecked(&self, vs: &[usize]) -> Graph {
        let k = vs.len();
        let mut adj = vec![0u64; k];
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        let labels = self.labels.as_ref().map(|l| vs.iter().map(|&v| l[v].clone()).collect());
        Graph { n: k, adj, labels }
    }

    pub fn induced_by_mask(&self, mask: u64) -> Graph {
        let vs: Vec<usize> = bits(mask).collect();
        self.induced_unchecked(&vs)
    }

    /// Relabel: vertex `v` of `self` becomes vertex `perm[v]` of the result.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from vertex count"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::invalid("not a permutation"));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); self.n];
            for (v, name) in l.iter().enumerate() {
                out[perm[v]] = name.clone();
            }
            out
        });
        Ok(Graph { n: self.n, adj, labels })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    /// Same graph without vertex labels (labels do not take part in structure).
    pub fn unlabeled(&self) -> Graph {
        Graph { n: self.n, adj: self.adj.clone(), labels: None }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_subgraph_preserves_order() {
        let c5 = Graph::cycle(5);
        let p4 = c5.induced_subgraph(&[1, 2, 3, 4]).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let k3 = Graph::complete(5).induced_subgraph(&[4, 0, 2]).unwrap();
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn induced_subgraph_rejects_bad_vertices() {
        let g = Graph::path(3);
        assert!(matches!(g.induced_subgraph(&[0, 3]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
        assert!(g.induced_subgraph(&[]).is_err());
        assert!(g.induced_subgraph(&[1, 1]).is_err());
    }

    #[test]
    fn paw_triangle_is_k3() {
        let paw = catalog::by_name("paw").unwrap();
        // vertices 0,1,2 form the triangle, 3 hangs off 2
        assert_eq!(paw.induced_subgraph(&[0, 1, 2]).unwrap(), Graph::complete(3));
    }

    #[test]
    fn complement_and_connectivity() {
        let g = Graph::complete_multipartite(&[2, 3]);
        assert!(g.is_connected());
        let c = g.complement();
        assert!(!c.is_connected());
        assert_eq!(c.edge_count(), 1 + 3);
    }

    #[test]
    fn too_many_vertices() {
        assert!(matches!(Graph::empty(65), Err(Error::TooManyVertices(65))));
        assert!(Graph::empty(64).is_ok());
    }
}
