use super::{bigint_json, IntMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Invariant factors `f_1 | f_2 | ... | f_r` of an integer matrix, together
/// with the determinantal divisors `Δ_i = f_1 ⋯ f_i` (`Δ_0 = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
    /// number of invariant factors equal to 1
    pub phi: usize,
    pub deltas: Vec<BigInt>,
    /// `min(rows, cols)`, the length of the full diagonal
    pub diagonal_len: usize,
}

impl SnfResult {
    fn from_factors(invariant_factors: Vec<BigInt>, diagonal_len: usize) -> Self {
        let mut deltas = vec![BigInt::one()];
        for f in &invariant_factors {
            let next = deltas.last().unwrap() * f;
            deltas.push(next);
        }
        SnfResult {
            rank: invariant_factors.len(),
            phi: invariant_factors.iter().filter(|f| f.is_one()).count(),
            invariant_factors,
            deltas,
            diagonal_len,
        }
    }

    /// `Δ_k`, which is zero beyond the rank.
    pub fn delta(&self, k: usize) -> BigInt {
        self.deltas.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The full diagonal `f_1, ..., f_r, 0, ..., 0`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let mut d = self.invariant_factors.clone();
        d.resize(self.diagonal_len, BigInt::zero());
        d
    }

    /// Convenience for comparisons against small literal diagonals.
    pub fn diagonal_is(&self, expected: &[i64]) -> bool {
        let d = self.diagonal();
        d.len() == expected.len() && d.iter().zip(expected).all(|(a, &b)| *a == BigInt::from(b))
    }
}

impl Serialize for SnfResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SnfResult", 4)?;
        let f: Vec<_> = self.invariant_factors.iter().map(bigint_json).collect();
        let d: Vec<_> = self.deltas.iter().map(bigint_json).collect();
        st.serialize_field("invariant_factors", &f)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("phi", &self.phi)?;
        st.serialize_field("deltas", &d)?;
        st.end()
    }
}

/// Smith normal form by unimodular row and column operations.
///
/// The pivot is the smallest nonzero entry (by absolute value, first in
/// row-major order) of the unfinished block. When the pivot's row and column
/// are cleared but it fails to divide some remaining entry, that entry's row
/// is added to the pivot row and elimination resumes.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut factors = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_entry(&a, t) else {
                return SnfResult::from_factors(factors, rows.min(cols));
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            let pivot = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t) / &pivot;
                    a.add_row_multiple(i, t, &-q);
                    clean &= a.get(i, t).is_zero();
                }
            }
            for j in t + 1..cols {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j) / &pivot;
                    a.add_col_multiple(j, t, &-q);
                    clean &= a.get(t, j).is_zero();
                }
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(a.get(i, j) % &pivot).is_zero()));
            match bad_row {
                Some(i) => a.add_row_multiple(t, i, &BigInt::one()),
                None => {
                    factors.push(pivot.abs());
                    break;
                }
            }
        }
    }
    SnfResult::from_factors(factors, rows.min(cols))
}

fn smallest_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::linalg::{determinant, minor_gcd};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dist(g: &Graph) -> IntMatrix {
        g.distance_matrix().unwrap().to_int_matrix()
    }

    #[test]
    fn path_and_k22() {
        let s = smith_normal_form(&dist(&Graph::path(4)));
        assert!(s.diagonal_is(&[1, 1, 2, 6]));
        assert_eq!(s.phi, 2);
        let s = smith_normal_form(&dist(&Graph::cycle(4)));
        assert_eq!(s.delta(3), BigInt::from(4));
    }

    #[test]
    fn zero_matrix() {
        let s = smith_normal_form(&IntMatrix::zeros(3, 2));
        assert_eq!(s.rank, 0);
        assert!(s.invariant_factors.is_empty());
        assert_eq!(s.deltas, vec![BigInt::one()]);
        assert!(s.diagonal_is(&[0, 0]));
    }

    #[test]
    fn divisibility_repair() {
        // diag(2, 3) has Smith form diag(1, 6)
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]).unwrap();
        assert!(smith_normal_form(&m).diagonal_is(&[1, 6]));
    }

    fn matrix(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
        IntMatrix::from_fn(rows, cols, |i, j| BigInt::from(entries[i * cols + j]))
    }

    /// Random unimodular matrix as a product of elementary operations.
    fn unimodular(n: usize, rng: &mut ChaCha8Rng) -> IntMatrix {
        let mut u = IntMatrix::identity(n);
        for _ in 0..rng.gen_range(0..=20) {
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            match rng.gen_range(0..3) {
                0 => u.swap_rows(i, j),
                1 if i != j => u.add_row_multiple(i, j, &BigInt::from(rng.gen_range(-3..=3))),
                _ => {
                    for c in 0..n {
                        let v = -u.get(i, c).clone();
                        u.set(i, c, v);
                    }
                }
            }
        }
        u
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn deltas_match_minor_gcds(rows in 1usize..=7, cols in 1usize..=7,
                                   entries in prop::collection::vec(-9i64..=9, 49)) {
            let m = matrix(rows, cols, &entries);
            let s = smith_normal_form(&m);
            for k in 1..=rows.min(cols) {
                prop_assert_eq!(s.delta(k), minor_gcd(&m, k), "k = {}", k);
            }
            prop_assert!(s.invariant_factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        }

        #[test]
        fn determinant_is_factor_product(n in 1usize..=6, entries in prop::collection::vec(-9i64..=9, 36)) {
            let m = matrix(n, n, &entries);
            let s = smith_normal_form(&m);
            let det = determinant(&m);
            if s.rank == n {
                prop_assert_eq!(det.abs(), s.delta(n));
            } else {
                prop_assert!(det.is_zero());
            }
        }

        #[test]
        fn unimodular_invariance(rows in 1usize..=6, cols in 1usize..=6,
                                 entries in prop::collection::vec(-9i64..=9, 36), seed: u64) {
            let m = matrix(rows, cols, &entries);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = unimodular(rows, &mut rng);
            let q = unimodular(cols, &mut rng);
            let pmq = p.mul(&m).unwrap().mul(&q).unwrap();
            prop_assert_eq!(smith_normal_form(&pmq), smith_normal_form(&m));
        }
    }
}
