#![allow(clippy::needless_range_loop)]
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Determinant by Bareiss fraction-free elimination. The empty matrix has
/// determinant 1.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();

    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Exact by Sylvester's identity.
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }

    let det = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    if negate {
        -det
    } else {
        det
    }
}

/// Invariant factors `d1 | d2 | ...` of the Smith normal form, one per
/// diagonal position (`min(rows, cols)` of them), all nonnegative. Trailing
/// zeros mark rank deficiency.
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let size = rows.min(cols);

    for t in 0..size {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);

        loop {
            let mut dirty = false;

            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &a[i][t] * &q;
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }

            if dirty {
                // A smaller remainder appeared in the pivot row or column.
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap(t, pi);
                swap_cols(&mut a, t, pj);
                continue;
            }

            // Pivot row and column are clear; enforce divisibility of the rest.
            let bad_row = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero())
            });
            match bad_row {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
    }

    (0..size).map(|i| a[i][i].abs()).collect()
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_abs = a[t][t].abs();
    let mut consider = |i: usize, j: usize, v: &BigInt| {
        if !v.is_zero() && (best_abs.is_zero() || v.abs() < best_abs) {
            best = (i, j);
            best_abs = v.abs();
        }
    };
    for (i, row) in a.iter().enumerate().skip(t) {
        consider(i, t, &row[t]);
    }
    for j in t..a[t].len() {
        consider(t, j, &a[t][j]);
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}
