//! Exact linear algebra over arbitrary-precision integers and prime fields.
//!
//! Ranks and determinants use fraction-free (Bareiss) elimination, so all
//! intermediate values stay integral; no floating point is used anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Rank of an integer matrix (rank over Q), by fraction-free elimination
/// with column pivoting.
pub fn rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut col = 0;
    while rank < rows && col < cols {
        let Some(piv) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            col += 1;
            continue;
        };
        m.swap(rank, piv);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let t = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = t / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

pub fn rank_i64(m: &[Vec<i64>]) -> usize {
    rank_bigint(
        m.iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            m.swap(k, piv);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}

/// Determinant plus adjugate, so `A * adj = det * I`. Used to solve the same
/// square system against many right-hand sides without re-eliminating.
pub fn det_and_adjugate(m: &[Vec<BigInt>]) -> (BigInt, Vec<Vec<BigInt>>) {
    let n = m.len();
    let det = det_bigint(m.to_vec());
    let mut adj = vec![vec![BigInt::zero(); n]; n];
    if n == 1 {
        adj[0][0] = BigInt::one();
        return (det, adj);
    }
    for i in 0..n {
        for j in 0..n {
            // cofactor C_{j,i} lands at adj[i][j]
            let minor: Vec<Vec<BigInt>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| m[r][c].clone())
                        .collect()
                })
                .collect();
            let mut cof = det_bigint(minor);
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            adj[i][j] = cof;
        }
    }
    (det, adj)
}

/// The integer normal of the hyperplane spanned by `rows` (an `(n-1) x n`
/// matrix): coordinate `i` is the signed cofactor obtained by deleting
/// column `i`. Returns the zero vector when the rows are dependent.
pub fn cross_normal(rows: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    debug_assert_eq!(rows.len() + 1, n);
    (0..n)
        .map(|i| {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != i)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = det_bigint(minor);
            if i % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// Divide out the gcd of all entries (including `extra`), keeping signs.
pub fn normalize_by_gcd(v: &mut [BigInt], extra: &mut BigInt) {
    let mut g = extra.abs();
    for x in v.iter() {
        g = num_integer::Integer::gcd(&g, &x.abs());
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x /= &g;
    }
    *extra /= &g;
}

/// Rank of a matrix over `F_p` (entries given as signed integers).
pub fn rank_mod_p(m: &[Vec<i64>], p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|row| row.iter().map(|&x| reduce(x)).collect())
        .collect();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let Some(piv) = (rank..rows).find(|&i| a[i][col] != 0) else {
            col += 1;
            continue;
        };
        a.swap(rank, piv);
        let inv = mod_inverse(a[rank][col], p);
        for j in col..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        for i in 0..rows {
            if i != rank && a[i][col] != 0 {
                let f = a[i][col];
                for j in col..cols {
                    a[i][j] = (a[i][j] + (p - f) * a[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a != 0 mod p
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(m: &[&[i64]]) -> Vec<Vec<BigInt>> {
        m.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn rank_cases() {
        assert_eq!(rank_bigint(big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_bigint(big(&[&[0, 0], &[0, 5]])), 1);
        assert_eq!(rank_bigint(big(&[&[1, 0, 2], &[0, 1, 3], &[1, 1, 5]])), 2);
        assert_eq!(rank_bigint(big(&[&[2, 0], &[0, 3]])), 2);
        assert_eq!(rank_bigint(Vec::new()), 0);
    }

    #[test]
    fn det_cases() {
        assert_eq!(det_bigint(big(&[&[3]])), BigInt::from(3));
        assert_eq!(det_bigint(big(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(
            det_bigint(big(&[&[2, 0, 1], &[1, 3, 2], &[0, 1, 4]])),
            BigInt::from(21)
        );
        assert_eq!(det_bigint(big(&[&[1, 2], &[2, 4]])), BigInt::zero());
        // empty matrix: det = 1 by convention (used for rank-1 hyperplanes)
        assert_eq!(det_bigint(Vec::new()), BigInt::one());
    }

    #[test]
    fn adjugate_identity() {
        let m = big(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let (det, adj) = det_and_adjugate(&m);
        // check A * adj = det * I
        for i in 0..3 {
            for j in 0..3 {
                let mut s = BigInt::zero();
                for k in 0..3 {
                    s += &m[i][k] * &adj[k][j];
                }
                let expect = if i == j { det.clone() } else { BigInt::zero() };
                assert_eq!(s, expect);
            }
        }
    }

    #[test]
    fn cross_normal_is_orthogonal() {
        let rows = big(&[&[-2, 1, 1], &[-3, 2, 1]]);
        let n = cross_normal(&rows, 3);
        for row in &rows {
            let dot: BigInt = row.iter().zip(&n).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        assert_eq!(n, vec![BigInt::from(-1), BigInt::from(-1), BigInt::from(-1)]);
    }

    #[test]
    fn rank_mod_small_primes() {
        // rank over F_2 can drop below the rational rank
        let m = vec![vec![1i64, 1], vec![1, -1]];
        assert_eq!(rank_i64(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
    }
}
