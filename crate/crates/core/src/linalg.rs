//! Small dense linear algebra over `BigRational`.
//!
//! Matrices are row-major `Vec<Vec<BigRational>>`. Sizes here never exceed a
//! few dozen, so plain Gaussian elimination is adequate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn to_q_matrix(m: &[Vec<i64>]) -> QMatrix {
    m.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect()
}

/// Determinant by Gaussian elimination with exact pivots.
pub fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut a: QMatrix = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Unique(Vec<BigRational>),
    Underdetermined { rank: usize, unknowns: usize },
    Inconsistent,
}

/// Solve `A x = b` for a possibly non-square `A` by row reduction of the
/// augmented matrix.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Solution {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    assert_eq!(rows, b.len(), "right-hand side length mismatch");

    let mut m: QMatrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(p, row);
        let inv = m[row][col].recip();
        for c in col..=cols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }

    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return Solution::Inconsistent;
    }
    let rank = pivot_cols.len();
    if rank < cols {
        return Solution::Underdetermined { rank, unknowns: cols };
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Solution::Unique(x)
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix, computed by
/// exact congruence diagonalisation.
pub fn inertia(sym: &[Vec<BigRational>]) -> (usize, usize, usize) {
    let n = sym.len();
    let mut a: QMatrix = sym.to_vec();
    let mut diag = Vec::with_capacity(n);

    for k in 0..n {
        if a[k][k].is_zero() {
            // Pull a nonzero diagonal entry into place, or manufacture one
            // from an off-diagonal entry via x_k += x_j.
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            }
        }
        let p = a[k][k].clone();
        if p.is_zero() {
            // Row k is entirely zero beyond this point.
            diag.push(p);
            continue;
        }
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let factor = &a[r][k] / &p;
            for c in k..n {
                let delta = &factor * &a[k][c];
                a[r][c] -= delta;
            }
        }
        // The matching column operations only touch row k.
        for c in k + 1..n {
            a[k][c] = BigRational::zero();
        }
        diag.push(p);
    }

    let pos = diag.iter().filter(|d| d.is_positive()).count();
    let neg = diag.iter().filter(|d| d.is_negative()).count();
    (pos, neg, n - pos - neg)
}
