use super::generalized_distance_matrix;
use crate::graph::Graph;
use crate::linalg::{smith_normal_form, SnfResult};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

/// Smith normal form of `D_X(G)` evaluated at `x_u = d[u]`.
pub fn evaluated_snf(g: &Graph, d: &[i64]) -> Result<SnfResult> {
    if d.len() != g.n() {
        return Err(Error::invalid(format!("evaluation vector has {} entries for {} vertices", d.len(), g.n())));
    }
    let m = generalized_distance_matrix(g)?;
    let d: Vec<BigInt> = d.iter().map(|&x| BigInt::from(x)).collect();
    Ok(smith_normal_form(&m.evaluate(&d)?))
}

/// A point `d` with `Δ_k(D_X(G)|_{X=d}) ≠ 1`, which shows that the `k`-th
/// distance ideal over `Z[X]` is not trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub d: Vec<i64>,
    #[serde(serialize_with = "crate::ideal::ser_bigint")]
    pub delta: BigInt,
}

/// Search `{0,1,2}^n` in lexicographic order for a certificate, trying at
/// most `search_budget` vectors. Finding none proves nothing.
pub fn nontriviality_certificate(g: &Graph, k: usize, search_budget: usize) -> Result<Option<Certificate>> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::invalid(format!("ideal index {k} out of range 1..={n}")));
    }
    let m = generalized_distance_matrix(g)?;
    let mut d = vec![0i64; n];
    for _ in 0..search_budget {
        let point: Vec<BigInt> = d.iter().map(|&x| BigInt::from(x)).collect();
        let snf = smith_normal_form(&m.evaluate(&point)?);
        let delta = snf.delta(k);
        if !delta.is_one() {
            return Ok(Some(Certificate { d, delta }));
        }
        // next vector in lexicographic order (last coordinate fastest)
        let Some(pos) = d.iter().rposition(|&x| x < 2) else { break };
        d[pos] += 1;
        for x in &mut d[pos + 1..] {
            *x = 0;
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_have_a_certificate_at_zero() {
        let star = Graph::star(4);
        let c = nontriviality_certificate(&star, 3, 1).unwrap().unwrap();
        assert_eq!(c.d, vec![0; 5]);
        assert_eq!(c.delta, BigInt::from(2));
        let p3 = nontriviality_certificate(&Graph::path(3), 3, 1).unwrap().unwrap();
        assert_eq!(p3.delta, BigInt::from(4));
    }

    #[test]
    fn k3_determinant_certificate() {
        let c = nontriviality_certificate(&Graph::complete(3), 3, 1).unwrap().unwrap();
        assert_eq!(c.delta, BigInt::from(2));
    }

    #[test]
    fn no_certificate_for_trivial_ideals() {
        // the off-diagonal 1 makes I_1 of K2 trivial
        assert!(nontriviality_certificate(&Graph::complete(2), 1, 9).unwrap().is_none());
    }

    #[test]
    fn evaluated_forms_from_the_structure_results() {
        let s = evaluated_snf(&Graph::path(5), &[2, 1, 2, 1, 2]).unwrap();
        assert!(s.diagonal_is(&[1, 1, 2, 2, 0]));
        let s = evaluated_snf(&Graph::path(4), &[1, 2, 2, 1]).unwrap();
        assert!(s.diagonal_is(&[1, 1, 3, 3]));
        assert!(evaluated_snf(&Graph::path(4), &[1, 2]).is_err());
    }
}
