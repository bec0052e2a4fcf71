use super::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Panics on a non-square matrix.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a {}x{} matrix", m.rows(), m.cols());
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(i, k);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&pivot * a.get(i, j) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = pivot;
    }
    let det = a.get(n - 1, n - 1).clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Advance `c` to the next k-subset of `0..n` in colexicographic order.
pub(crate) fn next_colex(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in 0..k {
        let limit = if i + 1 < k { c[i + 1] } else { n };
        if c[i] + 1 < limit {
            c[i] += 1;
            for (j, slot) in c[..i].iter_mut().enumerate() {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// gcd of all `k x k` minors, by direct enumeration of row and column
/// subsets. Zero when every minor vanishes; stops as soon as the gcd is 1.
pub fn minor_gcd(m: &IntMatrix, k: usize) -> BigInt {
    assert!(k >= 1 && k <= m.rows().min(m.cols()), "minor size {k} out of range for {}x{}", m.rows(), m.cols());
    let mut g = BigInt::zero();
    let mut rows: Vec<usize> = (0..k).collect();
    loop {
        let mut cols: Vec<usize> = (0..k).collect();
        loop {
            let d = determinant(&m.submatrix(&rows, &cols));
            g = g.gcd(&d);
            if g.is_one() {
                return g;
            }
            if !next_colex(&mut cols, m.cols()) {
                break;
            }
        }
        if !next_colex(&mut rows, m.rows()) {
            break;
        }
    }
    g.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    fn cofactor(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let term = BigInt::from(m[0][j]) * cofactor(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn distance_determinants() {
        let p3 = Graph::path(3).distance_matrix().unwrap().to_int_matrix();
        assert_eq!(determinant(&p3), BigInt::from(4));
        let star = Graph::star(3).distance_matrix().unwrap().to_int_matrix();
        assert_eq!(determinant(&star), BigInt::from(-12));
        assert_eq!(determinant(&IntMatrix::identity(5)), BigInt::one());
    }

    #[test]
    fn colex_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_colex(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn minor_gcds() {
        let k23 = Graph::complete_multipartite(&[2, 3]).distance_matrix().unwrap().to_int_matrix();
        assert_eq!(minor_gcd(&k23, 3), BigInt::from(2));
        let k3 = Graph::complete(3).distance_matrix().unwrap().to_int_matrix();
        assert_eq!(minor_gcd(&k3, 1), BigInt::one());
        assert_eq!(minor_gcd(&IntMatrix::zeros(3, 4), 2), BigInt::zero());
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(n in 1usize..=6, seed in prop::collection::vec(-9i64..=9, 36)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
            let m = IntMatrix::from_rows(&rows).unwrap();
            prop_assert_eq!(determinant(&m), cofactor(&rows));
        }
    }
}
