use super::{bits, Graph};
use crate::linalg::IntMatrix;
use crate::{Error, Result};
use serde::Serialize;

/// Shortest-path distances of a connected graph, in edge hops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.entries[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|u| self.row(u).to_vec()).collect()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |u, v| self.get(u, v).into())
    }
}

impl Graph {
    /// All-pairs BFS distances. Fails on disconnected graphs, naming a pair
    /// of mutually unreachable vertices.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let n = self.n();
        let mut entries = vec![0u32; n * n];
        for s in 0..n {
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut d = 0;
            while frontier != 0 {
                d += 1;
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.neighbors(v);
                }
                next &= !seen;
                for v in bits(next) {
                    entries[s * n + v] = d;
                }
                seen |= next;
                frontier = next;
            }
            if seen != self.vertex_mask() {
                let missing = (!seen & self.vertex_mask()).trailing_zeros() as usize;
                return Err(Error::Disconnected(s, missing));
            }
        }
        Ok(DistanceMatrix { n, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances() {
        let d = Graph::path(4).distance_matrix().unwrap();
        assert_eq!(d.row(0), &[0, 1, 2, 3]);
        assert_eq!(d.diameter(), 3);
    }

    #[test]
    fn complete_bipartite_parity() {
        let g = Graph::complete_multipartite(&[2, 3]);
        let d = g.distance_matrix().unwrap();
        for u in 0..5 {
            for v in 0..5 {
                let same = (u < 2) == (v < 2);
                let expect = if u == v {
                    0
                } else if same {
                    2
                } else {
                    1
                };
                assert_eq!(d.get(u, v), expect);
            }
        }
    }

    #[test]
    fn c5_has_diameter_two() {
        let d = Graph::cycle(5).distance_matrix().unwrap();
        assert_eq!(d.diameter(), 2);
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    assert!(matches!(d.get(u, v), 1 | 2));
                }
            }
        }
    }

    #[test]
    fn disconnected_names_pair() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.distance_matrix(), Err(Error::Disconnected(0, 2)));
    }
}
