//! Distance ideals: the ideals generated by the `k`-minors of the
//! generalized distance matrix `D_X(G) = diag(X) + D(G)`, over `Z[X]`,
//! `Q[X]`, or with every `x_u` replaced by a single `t`.

mod certificate;
mod matrix;
mod minors;

pub use certificate::{evaluated_snf, nontriviality_certificate, Certificate};
pub use matrix::{generalized_distance_matrix, univariate_distance_matrix, SymbolicMatrix};
pub use minors::symbolic_minors;

use crate::graph::Graph;
use crate::poly::{default_var_name, groebner_with, Domain, GbOptions, GroebnerBasis, MultiPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

pub(crate) fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::linalg::bigint_json(x).serialize(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    /// `Z[X]`, one variable per vertex
    ZX,
    QX,
    /// `Z[t]`, all diagonal variables identified
    Zt,
    Qt,
}

impl Ring {
    pub fn domain(self) -> Domain {
        match self {
            Ring::ZX | Ring::Zt => Domain::Z,
            Ring::QX | Ring::Qt => Domain::Q,
        }
    }

    pub fn is_univariate(self) -> bool {
        matches!(self, Ring::Zt | Ring::Qt)
    }

    pub fn new(domain: Domain, univariate: bool) -> Self {
        match (domain, univariate) {
            (Domain::Z, false) => Ring::ZX,
            (Domain::Q, false) => Ring::QX,
            (Domain::Z, true) => Ring::Zt,
            (Domain::Q, true) => Ring::Qt,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Ring::ZX => "Z[X]",
            Ring::QX => "Q[X]",
            Ring::Zt => "Z[t]",
            Ring::Qt => "Q[t]",
        }
    }

    /// How variable `v` is printed in this ring.
    pub fn var_name(self, v: u16) -> String {
        if self.is_univariate() {
            "t".into()
        } else {
            default_var_name(v)
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Ring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z[X]" | "ZX" => Ok(Ring::ZX),
            "Q[X]" | "QX" => Ok(Ring::QX),
            "Z[t]" | "Zt" => Ok(Ring::Zt),
            "Q[t]" | "Qt" => Ok(Ring::Qt),
            _ => Err(Error::invalid(format!("unknown ring {s:?}"))),
        }
    }
}

/// The ideal of `k`-minors with its Gröbner basis.
#[derive(Clone, Debug)]
pub struct DistanceIdeal {
    pub graph: String,
    pub k: usize,
    pub ring: Ring,
    pub generators: Vec<MultiPoly>,
    pub basis: GroebnerBasis,
    pub trivial: bool,
}

impl DistanceIdeal {
    pub fn record(&self) -> IdealRecord {
        IdealRecord {
            graph: self.graph.clone(),
            ring: self.ring,
            k: self.k,
            trivial: self.trivial,
            basis: self.basis.to_strings_with(&|v| self.ring.var_name(v)),
            certificate: None,
        }
    }
}

/// JSON form of one ideal computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealRecord {
    pub graph: String,
    pub ring: Ring,
    pub k: usize,
    pub trivial: bool,
    pub basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

/// The matrix whose minors generate ideals over `ring`.
pub fn ring_matrix(g: &Graph, ring: Ring) -> Result<SymbolicMatrix> {
    let m = if ring.is_univariate() { univariate_distance_matrix(g)? } else { generalized_distance_matrix(g)? };
    m.to_domain(ring.domain())
}

pub fn distance_ideal(g: &Graph, k: usize, ring: Ring) -> Result<DistanceIdeal> {
    distance_ideal_with(g, k, ring, &GbOptions::default())
}

pub fn distance_ideal_with(g: &Graph, k: usize, ring: Ring, options: &GbOptions) -> Result<DistanceIdeal> {
    matrix_ideal(&ring_matrix(g, ring)?, k, ring, options)
}

/// Ideal of `k`-minors of an arbitrary symbolic matrix (overridden or
/// variable-grouped distance matrices), computed over `ring`'s coefficients.
pub fn matrix_ideal(m: &SymbolicMatrix, k: usize, ring: Ring, options: &GbOptions) -> Result<DistanceIdeal> {
    if k == 0 || k > m.n() {
        return Err(Error::invalid(format!("ideal index {k} out of range 1..={}", m.n())));
    }
    let m = m.to_domain(ring.domain())?;
    let generators = symbolic_minors(&m, k);
    let generators = if generators.is_empty() { vec![MultiPoly::zero(ring.domain())] } else { generators };
    let basis = groebner_with(&generators, options).map_err(|e| with_index(e, k))?;
    Ok(DistanceIdeal { graph: m.source().to_string(), k, ring, trivial: basis.is_trivial(), generators, basis })
}

fn with_index(e: Error, k: usize) -> Error {
    match e {
        Error::Budget { budget, .. } => Error::Budget { budget, index: Some(k) },
        other => other,
    }
}

#[derive(Clone, Debug)]
pub struct PhiOptions {
    pub gb: GbOptions,
    /// largest index examined; `None` means `min(n, 5)`
    pub k_max: Option<usize>,
    /// evaluation vectors tried per index before the Gröbner fallback
    /// (over `Z[X]` only; zero disables certificates)
    pub certificate_budget: usize,
}

impl Default for PhiOptions {
    fn default() -> Self {
        PhiOptions { gb: GbOptions::default(), k_max: None, certificate_budget: 729 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiStep {
    pub k: usize,
    pub trivial: bool,
    /// `"certificate"` or `"groebner"`
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiResult {
    pub graph: String,
    pub ring: Ring,
    /// the largest index with a trivial ideal
    pub value: usize,
    /// false when every examined index was trivial and `k_max < n`, so that
    /// `value` is only a lower bound
    pub exact: bool,
    pub steps: Vec<PhiStep>,
}

/// `Φ_R(G)`: walk up from `k = 1` until the first nontrivial ideal. Over
/// `Z[X]` an evaluation certificate is tried before any Gröbner computation.
pub fn phi(g: &Graph, ring: Ring, options: &PhiOptions) -> Result<PhiResult> {
    let n = g.n();
    let k_max = options.k_max.unwrap_or(n.min(5)).min(n);
    let matrix = ring_matrix(g, ring)?;
    let mut steps = Vec::new();
    for k in 1..=k_max {
        if ring == Ring::ZX && options.certificate_budget > 0 {
            if let Some(cert) = nontriviality_certificate(g, k, options.certificate_budget)? {
                steps.push(PhiStep { k, trivial: false, method: "certificate", certificate: Some(cert), basis: None });
                break;
            }
        }
        let ideal = matrix_ideal(&matrix, k, ring, &options.gb)?;
        steps.push(PhiStep {
            k,
            trivial: ideal.trivial,
            method: "groebner",
            certificate: None,
            basis: Some(ideal.basis.to_strings_with(&|v| ring.var_name(v))),
        });
        if !ideal.trivial {
            break;
        }
    }
    let trivial_prefix = steps.iter().take_while(|s| s.trivial).count();
    Ok(PhiResult {
        graph: g.to_graph6(),
        ring,
        value: trivial_prefix,
        exact: trivial_prefix < k_max || k_max == n,
        steps,
    })
}
