//! Dense exact linear algebra over the rationals and the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Q;

pub type Matrix = Vec<Vec<Q>>;

/// Row echelon form by Gaussian elimination; returns the reduced matrix and
/// the pivot columns.
pub fn row_reduce(m: &[Vec<Q>]) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let t = &a[r][j] * &f;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (a, pivots)
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    row_reduce(m).1.len()
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn nullspace(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let (a, pivots) = row_reduce(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Rank of an integer matrix by Bareiss fraction-free elimination.
pub fn rank_fraction_free(m: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Determinant over the rationals.
pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &a[c][j] * &f;
                a[i][j] -= t;
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&m), 1);
        let k = nullspace(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m {
                let s: Q = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn bareiss_agrees_with_gauss() {
        let rows: &[&[i64]] = &[&[2, 4, 1, 0], &[1, 2, 0, 3], &[3, 6, 1, 3], &[0, 0, 5, 1]];
        let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(rank_fraction_free(&ints), rank(&mat(rows)));
        assert_eq!(rank(&mat(rows)), 3);
    }

    #[test]
    fn determinant_with_row_swap() {
        assert_eq!(det(&mat(&[&[0, 1], &[1, 0]])), q(-1));
        assert_eq!(det(&mat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]])), q(18));
    }
}
