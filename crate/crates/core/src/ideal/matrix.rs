use crate::graph::Graph;
use crate::linalg::IntMatrix;
use crate::poly::{Domain, MultiPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;

/// Square matrix of integer polynomials, typically `diag(X) + D(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix {
    n: usize,
    entries: Vec<MultiPoly>,
    source: String,
}

/// `D_X(G)`: the distance matrix with `x_u` added at diagonal position `u`.
pub fn generalized_distance_matrix(g: &Graph) -> Result<SymbolicMatrix> {
    let d = g.distance_matrix()?;
    let n = g.n();
    let mut entries = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            entries.push(if u == v {
                MultiPoly::var(Domain::Z, u as u16)
            } else {
                MultiPoly::int(Domain::Z, d.get(u, v) as i64)
            });
        }
    }
    Ok(SymbolicMatrix { n, entries, source: g.to_graph6() })
}

/// `tI + D(G)` with `t` as variable 0.
pub fn univariate_distance_matrix(g: &Graph) -> Result<SymbolicMatrix> {
    let m = generalized_distance_matrix(g)?;
    let t = MultiPoly::var(Domain::Z, 0);
    m.substitute(&(0..g.n() as u16).map(|u| (u, t.clone())).collect())
}

impl SymbolicMatrix {
    pub fn from_fn(n: usize, source: impl Into<String>, mut f: impl FnMut(usize, usize) -> MultiPoly) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                entries.push(f(u, v));
            }
        }
        SymbolicMatrix { n, entries, source: source.into() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Identifier of the graph the matrix was built from (its graph6 string).
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn get(&self, u: usize, v: usize) -> &MultiPoly {
        &self.entries[u * self.n + v]
    }

    pub fn domain(&self) -> Domain {
        self.entries.first().map_or(Domain::Z, MultiPoly::domain)
    }

    pub fn to_domain(&self, domain: Domain) -> Result<SymbolicMatrix> {
        let entries = self.entries.iter().map(|p| p.to_domain(domain)).collect::<Result<_>>()?;
        Ok(SymbolicMatrix { n: self.n, entries, source: self.source.clone() })
    }

    /// Substitute into every entry.
    pub fn substitute(&self, map: &BTreeMap<u16, MultiPoly>) -> Result<SymbolicMatrix> {
        let entries = self.entries.iter().map(|p| p.substitute(map)).collect::<Result<_>>()?;
        Ok(SymbolicMatrix { n: self.n, entries, source: self.source.clone() })
    }

    /// Rename variables: every vertex in a group gets that group's variable.
    pub fn group_variables(&self, groups: &[(u16, Vec<usize>)]) -> Result<SymbolicMatrix> {
        let mut map = BTreeMap::new();
        for (var, vertices) in groups {
            for &u in vertices {
                if u >= self.n {
                    return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
                }
                if map.insert(u as u16, MultiPoly::var(self.domain(), *var)).is_some() {
                    return Err(Error::invalid(format!("vertex {u} is in two groups")));
                }
            }
        }
        self.substitute(&map)
    }

    /// Evaluate at `x_u = d[u]`; every entry must become an integer.
    pub fn evaluate(&self, d: &[BigInt]) -> Result<IntMatrix> {
        let point: Vec<BigRational> = d.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let mut values = Vec::with_capacity(self.entries.len());
        for p in &self.entries {
            let v = p.evaluate(&point)?;
            if !v.is_integer() {
                return Err(Error::invalid("evaluation is not integral"));
            }
            values.push(v.to_integer());
        }
        Ok(IntMatrix::from_fn(self.n, self.n, |i, j| values[i * self.n + j].clone()))
    }

    /// Replace the off-diagonal entries `(u, v)` and `(v, u)` by a constant distance.
    pub fn with_distance_override(&self, pairs: &[(usize, usize, u32)]) -> Result<SymbolicMatrix> {
        let mut out = self.clone();
        for &(u, v, value) in pairs {
            out.set_entry(u, v, value)?;
            out.set_entry(v, u, value)?;
        }
        Ok(out)
    }

    /// Replace only entry `(u, v)`, leaving `(v, u)` alone. The result is in
    /// general not symmetric.
    pub fn with_entry_override(&self, pairs: &[(usize, usize, u32)]) -> Result<SymbolicMatrix> {
        let mut out = self.clone();
        for &(u, v, value) in pairs {
            out.set_entry(u, v, value)?;
        }
        Ok(out)
    }

    fn set_entry(&mut self, u: usize, v: usize, value: u32) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::DiagonalOverride(u));
        }
        if value == 0 {
            return Err(Error::invalid("distance override must be at least 1"));
        }
        self.entries[u * self.n + v] = MultiPoly::int(self.domain(), value as i64);
        Ok(())
    }
}
