//! Exact integer linear algebra on small dense matrices.
//!
//! Matrices are row lists. Inputs are `i64`; every intermediate value is a
//! [`BigInt`], so no certificate here can be spoiled by overflow.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Rank over the rationals (fraction-free elimination).
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m = to_big(rows);
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let a = m[rank][col].clone();
            let b = m[r][col].clone();
            let (top, rest) = m.split_at_mut(r);
            for (x, y) in rest[0][col..].iter_mut().zip(&top[rank][col..]) {
                *x = &*x * &a - y * &b;
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    determinant_big(to_big(rows))
}

pub(crate) fn determinant_big(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(
        m.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Outcome of [`column_reduce`]: `original = [lower | 0] * transform`, with
/// `transform` unimodular.
pub struct ColumnReduction {
    pub lower: Vec<Vec<BigInt>>,
    pub transform: Vec<Vec<BigInt>>,
}

/// Column-style Hermite reduction of a full-row-rank `k x m` matrix.
///
/// Returns `None` if the rows are linearly dependent.
pub fn column_reduce(rows: &[Vec<i64>]) -> Option<ColumnReduction> {
    let mut a = to_big(rows);
    let k = a.len();
    let m = a.first().map_or(0, Vec::len);
    if k > m {
        return None;
    }
    let mut w: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    for r in 0..k {
        loop {
            // smallest nonzero entry of row r among columns r..m becomes the pivot
            let best = (r..m)
                .filter(|&j| !a[r][j].is_zero())
                .min_by(|&x, &y| a[r][x].abs().cmp(&a[r][y].abs()))?;
            if best != r {
                for row in a.iter_mut() {
                    row.swap(r, best);
                }
                w.swap(r, best);
            }
            let mut done = true;
            for j in r + 1..m {
                if a[r][j].is_zero() {
                    continue;
                }
                let q = a[r][j].div_floor(&a[r][r]);
                for row in a.iter_mut() {
                    let v = &row[j] - &q * &row[r];
                    row[j] = v;
                }
                let add: Vec<BigInt> = w[j].iter().map(|x| &q * x).collect();
                for (dst, x) in w[r].iter_mut().zip(add) {
                    *dst += x;
                }
                if !a[r][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
    }
    let lower = a.into_iter().map(|row| row[..k].to_vec()).collect();
    Some(ColumnReduction {
        lower,
        transform: w,
    })
}

/// True if the rows are independent and span a saturated sublattice of `Z^m`,
/// i.e. they extend to a lattice basis.
pub fn is_primitive_system(rows: &[Vec<i64>]) -> bool {
    complete_to_basis(rows).is_some()
}

/// Extends the given rows to a basis of `Z^m`: the result is an `m x m`
/// matrix with determinant `+-1` whose first rows are the input rows.
pub fn complete_to_basis(rows: &[Vec<i64>]) -> Option<Vec<Vec<BigInt>>> {
    let k = rows.len();
    let red = column_reduce(rows)?;
    let diag_unit = (0..k).all(|i| red.lower[i][i].abs().is_one());
    if !diag_unit {
        return None;
    }
    let mut basis = to_big(rows);
    basis.extend(red.transform.into_iter().skip(k));
    Some(basis)
}

/// Integer normal of the hyperplane spanned by `d - 1` vectors in `Z^d`
/// (generalized cross product; zero if the vectors are dependent).
pub fn cross_normal(vectors: &[Vec<i64>]) -> Vec<BigInt> {
    let d = vectors.len() + 1;
    assert!(vectors.iter().all(|v| v.len() == d));
    let mut normal = vec![BigInt::zero(); d];
    for (skip, slot) in normal.iter_mut().enumerate() {
        let minor: Vec<Vec<BigInt>> = vectors
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != skip)
                    .map(|(_, &x)| BigInt::from(x))
                    .collect()
            })
            .collect();
        let det = determinant_big(minor);
        *slot = if skip % 2 == 0 { det } else { -det };
    }
    let g = normal.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in normal.iter_mut() {
            *x /= &g;
        }
    }
    normal
}
