//! Fixed example matroids and random generators of totally unimodular
//! matrices, regular standard representations and valid sum instances.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactmat::ExactMatrix;
use crate::label::Label;
use crate::stdrepr::StandardRepr;
use crate::sums::{is_unit_2x2, standard_repr_sum, Glue, Sum3Labels, Unit2x2Form};
use crate::tumod::{scale_rows_cols, SignVector};

/// Labels `{prefix}x1..` for rows and `{prefix}y1..` for columns.
pub fn repr_with_prefix(prefix: &str, b: ExactMatrix) -> StandardRepr {
    let x = (1..=b.n_rows()).map(|i| Label::from(format!("{prefix}x{i}"))).collect();
    let y = (1..=b.n_cols()).map(|j| Label::from(format!("{prefix}y{j}"))).collect();
    StandardRepr::new(x, y, b).expect("generated labels are distinct")
}

/// `B` of the Fano matroid: the columns of `[1 | B]` are the seven nonzero
/// vectors of GF(2)^3.
pub fn fano_b() -> ExactMatrix {
    ExactMatrix::from_gf2_rows(&[[1u8, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 1]]).expect("literal")
}

pub fn fano() -> StandardRepr {
    repr_with_prefix("", fano_b())
}

/// `B` of R10: the 5x5 circulant with rows `11001` shifted.
pub fn r10_b() -> ExactMatrix {
    ExactMatrix::from_gf2_rows(&[
        [1u8, 1, 0, 0, 1],
        [1, 1, 1, 0, 0],
        [0, 1, 1, 1, 0],
        [0, 0, 1, 1, 1],
        [1, 0, 0, 1, 1],
    ])
    .expect("literal")
}

pub fn r10() -> StandardRepr {
    repr_with_prefix("", r10_b())
}

/// Network matrix of a random directed spanning tree on `rows + 1` nodes
/// (one row per tree arc) and `cols` random non-tree arcs.
pub fn network_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ExactMatrix {
    let nodes = rows + 1;
    // node v > 0 hangs below parent[v]; tree arc v is stored in row v - 1
    let parent: Vec<usize> = (0..nodes).map(|v| if v == 0 { 0 } else { rng.gen_range(0..v) }).collect();
    let upward: Vec<bool> = (0..nodes).map(|_| rng.gen()).collect();
    let depth = {
        let mut d = vec![0usize; nodes];
        for v in 1..nodes {
            d[v] = d[parent[v]] + 1;
        }
        d
    };
    let mut data = vec![0i64; rows * cols];
    for j in 0..cols {
        if nodes < 2 {
            break;
        }
        let u = rng.gen_range(0..nodes);
        let mut v = rng.gen_range(0..nodes - 1);
        if v >= u {
            v += 1;
        }
        // walk both ends up to the lowest common ancestor
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] >= depth[b] {
                // traversed from a towards its parent
                data[(a - 1) * cols + j] = if upward[a] { 1 } else { -1 };
                a = parent[a];
            } else {
                // traversed from parent[b] down to b
                data[(b - 1) * cols + j] = if upward[b] { -1 } else { 1 };
                b = parent[b];
            }
        }
    }
    let entries = data.into_iter().map(|v| BigRational::from_integer(BigInt::from(v))).collect();
    ExactMatrix::from_rationals(rows, cols, entries)
}

/// Random totally unimodular `rows x cols` matrix: a network matrix or the
/// transpose of one, with random row/column negations and possibly one
/// pivot on a nonzero entry.
pub fn random_tu(rng: &mut impl Rng, rows: usize, cols: usize) -> ExactMatrix {
    let mut a = if rng.gen_bool(0.5) {
        network_matrix(rng, rows, cols)
    } else {
        network_matrix(rng, cols, rows).transpose()
    };
    let rs: Vec<i8> = (0..rows).map(|_| if rng.gen() { 1 } else { -1 }).collect();
    let cs: Vec<i8> = (0..cols).map(|_| if rng.gen() { 1 } else { -1 }).collect();
    a = scale_rows_cols(&a, &SignVector::from_signs(&rs).unwrap(), &SignVector::from_signs(&cs).unwrap())
        .expect("matching lengths");
    if rng.gen_bool(0.5) {
        let nonzero: Vec<(usize, usize)> = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a.is_zero_at(i, j))
            .collect();
        if let Some(&(i, j)) = nonzero.choose(rng) {
            a = a.pivot(i, j).expect("nonzero pivot");
        }
    }
    a
}

/// GF(2) matrix with independent entries that are 1 with probability `density`.
pub fn random_gf2(rng: &mut impl Rng, rows: usize, cols: usize, density: f64) -> ExactMatrix {
    let bits = (0..rows * cols).map(|_| rng.gen_bool(density)).collect();
    ExactMatrix::from_bits(rows, cols, bits)
}

/// Rational matrix with entries `p/q`, `|p| <= 3`, `1 <= q <= 2`, about
/// half of them zero.
pub fn random_rational(rng: &mut impl Rng, rows: usize, cols: usize) -> ExactMatrix {
    let data = (0..rows * cols)
        .map(|_| {
            if rng.gen_bool(0.5) {
                BigRational::from_integer(BigInt::from(0))
            } else {
                BigRational::new(BigInt::from(rng.gen_range(-3i64..=3)), BigInt::from(rng.gen_range(1i64..=2)))
            }
        })
        .collect();
    ExactMatrix::from_rationals(rows, cols, data)
}

/// Regular GF(2) standard representation: the support of a random TU matrix.
pub fn random_regular(rng: &mut impl Rng, prefix: &str, rows: usize, cols: usize) -> StandardRepr {
    repr_with_prefix(prefix, random_tu(rng, rows, cols).support())
}

fn random_regular_sized(rng: &mut impl Rng, prefix: &str, lo: usize, hi: usize) -> StandardRepr {
    let rows = rng.gen_range(lo..=hi);
    let cols = rng.gen_range(lo..=hi);
    random_regular(rng, prefix, rows, cols)
}

/// Two summands and how they are glued.
#[derive(Debug, Clone)]
pub struct SumCase {
    pub left: StandardRepr,
    pub right: StandardRepr,
    pub glue: Glue,
}

impl SumCase {
    pub fn k(&self) -> u8 {
        self.glue.k()
    }
}

/// Regular summands with disjoint labels, sizes in `1..=max_dim`.
pub fn random_sum1_case(rng: &mut impl Rng, max_dim: usize) -> SumCase {
    SumCase {
        left: random_regular_sized(rng, "l", 1, max_dim),
        right: random_regular_sized(rng, "r", 1, max_dim),
        glue: Glue::One,
    }
}

fn rename(s: &StandardRepr, rows: &[(usize, &Label)], cols: &[(usize, &Label)]) -> StandardRepr {
    let mut x = s.x().to_vec();
    let mut y = s.y().to_vec();
    for (i, l) in rows {
        x[*i] = (*l).clone();
    }
    for (j, l) in cols {
        y[*j] = (*l).clone();
    }
    StandardRepr::new(x, y, s.b().body().clone()).expect("fresh shared labels")
}

/// Valid 2-sum of regular summands with sizes in `1..=max_dim`, by rejection.
pub fn random_sum2_case(rng: &mut impl Rng, max_dim: usize) -> SumCase {
    let (x, y) = (Label::from("x"), Label::from("y"));
    loop {
        let left = random_regular_sized(rng, "l", 1, max_dim);
        let right = random_regular_sized(rng, "r", 1, max_dim);
        let lx = rng.gen_range(0..left.x().len());
        let ly = rng.gen_range(0..left.y().len());
        let rx = rng.gen_range(0..right.x().len());
        let ry = rng.gen_range(0..right.y().len());
        let case = SumCase {
            left: rename(&left, &[(lx, &x)], &[(ly, &y)]),
            right: rename(&right, &[(rx, &x)], &[(ry, &y)]),
            glue: Glue::Two { x: x.clone(), y: y.clone() },
        };
        if standard_repr_sum(&case.left, &case.right, &case.glue).is_ok_and(|o| o.is_valid()) {
            return case;
        }
    }
}

/// Positions `(x0, x1, x2, y0, y1, y2)` in `b` meeting the left-summand
/// pattern: column `y2` is exactly `e_x0 + e_x1`, `b[x2][y0] = b[x2][y1] = 1`
/// and the `D0` block has the requested form.
fn left_slots(b: &ExactMatrix, form: Unit2x2Form) -> Vec<[usize; 6]> {
    let (m, n) = (b.n_rows(), b.n_cols());
    let mut out = Vec::new();
    for y2 in 0..n {
        let ones: Vec<usize> = (0..m).filter(|&i| b.is_one_at(i, y2)).collect();
        let [p, q] = ones[..] else { continue };
        for (x0, x1) in [(p, q), (q, p)] {
            for x2 in (0..m).filter(|&i| i != x0 && i != x1) {
                for y0 in (0..n).filter(|&j| j != y2 && b.is_one_at(x2, j)) {
                    for y1 in (0..n).filter(|&j| j != y2 && j != y0 && b.is_one_at(x2, j)) {
                        let d0 = b.submatrix(&[x0, x1], &[y0, y1]).expect("in range");
                        if is_unit_2x2(&d0).map(|u| u.form) == Some(form) {
                            out.push([x0, x1, x2, y0, y1, y2]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Positions in `b` meeting the right-summand pattern: row `x2` is exactly
/// `e_y0 + e_y1`, `b[x0][y2] = b[x1][y2] = 1` and the `D0` block equals `d0`.
fn right_slots(b: &ExactMatrix, d0: &ExactMatrix) -> Vec<[usize; 6]> {
    let (m, n) = (b.n_rows(), b.n_cols());
    let mut out = Vec::new();
    for x2 in 0..m {
        let ones: Vec<usize> = (0..n).filter(|&j| b.is_one_at(x2, j)).collect();
        let [p, q] = ones[..] else { continue };
        for (y0, y1) in [(p, q), (q, p)] {
            for y2 in (0..n).filter(|&j| j != y0 && j != y1) {
                for x0 in (0..m).filter(|&i| i != x2 && b.is_one_at(i, y2)) {
                    for x1 in (0..m).filter(|&i| i != x2 && i != x0 && b.is_one_at(i, y2)) {
                        if &b.submatrix(&[x0, x1], &[y0, y1]).expect("in range") == d0 {
                            out.push([x0, x1, x2, y0, y1, y2]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Valid 3-sum of regular summands whose `D0` has the given canonical form.
///
/// Summands are supports of random TU matrices with `3..=max_dim` rows and
/// columns; the overlap is placed wherever the required pattern occurs.
/// Gives up after `tries` candidate pairs.
pub fn random_sum3_case(rng: &mut impl Rng, form: Unit2x2Form, max_dim: usize, tries: usize) -> Option<SumCase> {
    let names = Sum3Labels::new(["x0", "x1", "x2"], ["y0", "y1", "y2"]).expect("literal labels");
    let shared_rows = [&names.x0, &names.x1, &names.x2];
    let shared_cols = [&names.y0, &names.y1, &names.y2];
    for _ in 0..tries {
        let left = random_regular_sized(rng, "l", 3, max_dim);
        let Some(&ls) = left_slots(left.b().body(), form).choose(rng) else { continue };
        let d0 = left.b().body().submatrix(&ls[..2], &ls[3..5]).expect("in range");
        let right = random_regular_sized(rng, "r", 3, max_dim);
        let Some(&rs) = right_slots(right.b().body(), &d0).choose(rng) else { continue };
        let relabel = |s: &StandardRepr, p: [usize; 6]| {
            let rows: Vec<(usize, &Label)> = (0..3).map(|k| (p[k], shared_rows[k])).collect();
            let cols: Vec<(usize, &Label)> = (0..3).map(|k| (p[3 + k], shared_cols[k])).collect();
            rename(s, &rows, &cols)
        };
        let case = SumCase {
            left: relabel(&left, ls),
            right: relabel(&right, rs),
            glue: Glue::Three(names.clone()),
        };
        if standard_repr_sum(&case.left, &case.right, &case.glue).is_ok_and(|o| o.is_valid()) {
            return Some(case);
        }
    }
    None
}
