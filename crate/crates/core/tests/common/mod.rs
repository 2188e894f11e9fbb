//! Brute-force oracles, deliberately independent of the library's
//! elimination code: determinants by cofactor expansion, TU by trying every
//! square submatrix, signings by trying every sign pattern.

#![allow(dead_code)]

use tumatroid::combinatorics::combinations;
use tumatroid::{ExactMatrix, ScalarKind};

/// Integer entries, or `None` if some entry is fractional.
pub fn int_grid(a: &ExactMatrix) -> Option<Vec<Vec<i64>>> {
    (0..a.n_rows())
        .map(|i| (0..a.n_cols()).map(|j| a.get(i, j).to_i64()).collect())
        .collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    let mut total = 0i128;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] as i128 * cofactor_det(&minor);
    }
    total
}

pub fn select(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> Vec<Vec<i64>> {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect()
}

/// Every square subdeterminant lies in {-1, 0, 1}.
pub fn naive_tu(a: &ExactMatrix) -> bool {
    let Some(m) = int_grid(a) else { return false };
    let (r, c) = (a.n_rows(), a.n_cols());
    (1..=r.min(c)).all(|k| {
        combinations(r, k).iter().all(|rows| {
            combinations(c, k)
                .iter()
                .all(|cols| cofactor_det(&select(&m, rows, cols)).abs() <= 1)
        })
    })
}

/// All rational signings of a GF(2) matrix, in binary order of the signs of
/// its nonzero entries (row-major).
pub fn all_signings(u: &ExactMatrix) -> Vec<ExactMatrix> {
    let m = int_grid(u).expect("gf2 entries are integers");
    let nz: Vec<(usize, usize)> = (0..u.n_rows())
        .flat_map(|i| (0..u.n_cols()).map(move |j| (i, j)))
        .filter(|&(i, j)| m[i][j] != 0)
        .collect();
    (0..1u64 << nz.len())
        .map(|mask| {
            let mut g = vec![vec![0i64; u.n_cols()]; u.n_rows()];
            for (bit, &(i, j)) in nz.iter().enumerate() {
                g[i][j] = if mask >> bit & 1 == 1 { -1 } else { 1 };
            }
            if u.n_rows() == 0 || u.n_cols() == 0 {
                ExactMatrix::zeros(ScalarKind::Rational, u.n_rows(), 0)
            } else {
                ExactMatrix::from_int_rows(&g).unwrap()
            }
        })
        .collect()
}

/// Number of TU signings found by exhaustive enumeration.
pub fn count_tu_signings(u: &ExactMatrix) -> usize {
    all_signings(u).iter().filter(|a| naive_tu(a)).count()
}
