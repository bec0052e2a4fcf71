use super::SymbolicMatrix;
use crate::linalg::next_colex;
use crate::poly::MultiPoly;
use num_traits::Signed;
use rayon::prelude::*;
use std::collections::{HashMap, HashSet};

/// All `k x k` minors of `m`, zeros dropped and deduplicated up to sign
/// (each kept with positive leading coefficient), in a deterministic order.
///
/// For each row set the determinants of every column subset are built up
/// one row at a time by expansion along the newest row.
pub fn symbolic_minors(m: &SymbolicMatrix, k: usize) -> Vec<MultiPoly> {
    let n = m.n();
    assert!(k >= 1 && k <= n, "minor size {k} out of range for n = {n}");
    let mut row_sets = Vec::new();
    let mut rows: Vec<usize> = (0..k).collect();
    loop {
        row_sets.push(rows.clone());
        if !next_colex(&mut rows, n) {
            break;
        }
    }
    let found: Vec<Vec<MultiPoly>> = row_sets.par_iter().map(|rows| minors_for_rows(m, rows)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in found.into_iter().flatten() {
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out.sort_by_cached_key(|p| (p.total_degree(), p.terms().len(), p.to_string()));
    out
}

fn minors_for_rows(m: &SymbolicMatrix, rows: &[usize]) -> Vec<MultiPoly> {
    let n = m.n();
    let mut level: HashMap<u64, MultiPoly> = HashMap::from([(0u64, MultiPoly::one(m.domain()))]);
    for &r in rows {
        let mut next: HashMap<u64, MultiPoly> = HashMap::new();
        for (&set, det) in &level {
            for c in 0..n {
                if set >> c & 1 == 1 || m.get(r, c).is_zero() {
                    continue;
                }
                let term = m.get(r, c).mul(det).expect("uniform domain");
                let below = (set & ((1u64 << c) - 1)).count_ones() as usize;
                // position of c among the new column set, against the last row
                let last = set.count_ones() as usize;
                let term = if (last + below) % 2 == 1 { term.neg() } else { term };
                let slot = next.entry(set | 1 << c).or_insert_with(|| MultiPoly::zero(m.domain()));
                *slot = slot.add(&term).expect("uniform domain");
            }
        }
        next.retain(|_, p| !p.is_zero());
        level = next;
    }
    level.into_values().map(|p| if p.terms()[0].1.is_negative() { p.neg() } else { p }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::ideal::generalized_distance_matrix;
    use crate::linalg::determinant;
    use crate::poly::Domain;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};

    fn names(ps: &[MultiPoly]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    /// 2x2 cofactor expansion over every pair of rows and columns.
    fn two_minors_oracle(m: &SymbolicMatrix) -> HashSet<String> {
        let n = m.n();
        let mut out = HashSet::new();
        for r1 in 0..n {
            for r2 in r1 + 1..n {
                for c1 in 0..n {
                    for c2 in c1 + 1..n {
                        let a = m.get(r1, c1).mul(m.get(r2, c2)).unwrap();
                        let b = m.get(r1, c2).mul(m.get(r2, c1)).unwrap();
                        let d = a.sub(&b).unwrap();
                        if !d.is_zero() {
                            let d = if d.terms()[0].1.is_negative() { d.neg() } else { d };
                            out.insert(d.to_string());
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn p3_two_minors() {
        let m = generalized_distance_matrix(&Graph::path(3)).unwrap();
        let minors = symbolic_minors(&m, 2);
        let got: HashSet<String> = names(&minors).into_iter().collect();
        assert_eq!(got, two_minors_oracle(&m));
        assert!(got.contains("x0*x1 - 1"));
        // 1·1 - 2·x1 up to sign
        assert!(got.contains("2*x1 - 1"));
    }

    #[test]
    fn first_minors_contain_one() {
        let m = generalized_distance_matrix(&Graph::cycle(5)).unwrap();
        assert!(symbolic_minors(&m, 1).iter().any(|p| p.is_one()));
    }

    #[test]
    fn full_minor_is_the_determinant() {
        let g = Graph::cycle(5);
        let m = generalized_distance_matrix(&g).unwrap();
        let full = symbolic_minors(&m, 5);
        assert_eq!(full.len(), 1);
        // det D_X at X = 0 is det D(G), up to the sign normalisation
        let at_zero = full[0].evaluate(&vec![BigRational::from_integer(0.into()); 5]).unwrap();
        let det = determinant(&g.distance_matrix().unwrap().to_int_matrix());
        assert_eq!(at_zero.to_integer().magnitude(), det.magnitude());
    }

    #[test]
    fn evaluated_minors_match_numeric_determinants() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let g = crate::graph::catalog::by_name("house").unwrap();
        let m = generalized_distance_matrix(&g).unwrap();
        for k in 1..=5 {
            let minors = symbolic_minors(&m, k);
            let d: Vec<i64> = (0..5).map(|_| rng.gen_range(-3..=3)).collect();
            let point: Vec<BigRational> = d.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            let numeric = m.evaluate(&d.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()).unwrap();
            let g1 = minors
                .iter()
                .map(|p| p.evaluate(&point).unwrap().to_integer())
                .fold(BigInt::from(0), |a, b| num_integer::Integer::gcd(&a, &b));
            assert_eq!(g1, crate::linalg::minor_gcd(&numeric, k), "k = {k}");
        }
        assert_eq!(m.domain(), Domain::Z);
    }
}
