//! Total unimodularity, signings of GF(2) matrices, and the search for
//! totally unimodular signings.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::combinatorics::combinations;
use crate::error::{Error, Result};
use crate::exactmat::{elim, ExactMatrix, ScalarKind};
use crate::exec::Execution;

/// Default bound on `min(rows, cols)` for the exhaustive TU check.
pub const DEFAULT_TU_MAX_DIM: usize = 8;
/// Default bound on the number of free signs the signing search enumerates.
pub const DEFAULT_SIGN_MAX_FREE: usize = 22;

/// One `±1` factor per row (or column).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn positive(len: usize) -> Self {
        SignVector(vec![1; len])
    }

    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        if let Some(bad) = signs.iter().find(|s| **s != 1 && **s != -1) {
            return Err(Error::InvalidEntry(format!("sign {bad} is not +1 or -1")));
        }
        Ok(SignVector(signs.to_vec()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i8 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }
}

/// A square submatrix (increasing row and column positions) whose
/// determinant is outside {-1, 0, 1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub det: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TuVerdict {
    TotallyUnimodular,
    Violated(TuWitness),
}

impl TuVerdict {
    pub fn is_tu(&self) -> bool {
        matches!(self, TuVerdict::TotallyUnimodular)
    }

    pub fn witness(&self) -> Option<&TuWitness> {
        match self {
            TuVerdict::TotallyUnimodular => None,
            TuVerdict::Violated(w) => Some(w),
        }
    }
}

/// Exhaustive total-unimodularity checker.
///
/// Entries are screened first (the 1x1 case); then square submatrices are
/// enumerated by increasing size, row list, column list. The first
/// violation in that order is reported, so the witness is minimal and does
/// not depend on the execution strategy.
#[derive(Debug, Clone, Copy)]
pub struct TuChecker {
    pub max_dim: usize,
    pub force: bool,
    pub execution: Execution,
}

impl Default for TuChecker {
    fn default() -> Self {
        TuChecker {
            max_dim: DEFAULT_TU_MAX_DIM,
            force: false,
            execution: Execution::default(),
        }
    }
}

impl TuChecker {
    pub fn forced() -> Self {
        TuChecker {
            force: true,
            ..Self::default()
        }
    }

    pub fn with_execution(self, execution: Execution) -> Self {
        TuChecker { execution, ..self }
    }

    pub fn check(&self, a: &ExactMatrix) -> Result<TuVerdict> {
        a.expect_kind(ScalarKind::Rational)?;
        let (m, n) = (a.n_rows(), a.n_cols());
        let dim = m.min(n);
        if dim > self.max_dim && !self.force {
            return Err(Error::Guard {
                what: "min(rows, cols)",
                size: dim,
                limit: self.max_dim,
            });
        }
        let q = a.rationals().expect("rational kind checked");
        if let Some(k) = q.iter().position(|v| !elim::abs_le_one(v)) {
            return Ok(TuVerdict::Violated(TuWitness {
                rows: vec![k / n],
                cols: vec![k % n],
                det: q[k].clone(),
            }));
        }
        let ints: Vec<i64> = a.to_i64_entries().expect("unit-range entries are integers");
        for k in 2..=dim {
            let row_sets = combinations(m, k);
            let col_sets = combinations(n, k);
            let hit = self.execution.find_map_first(&row_sets, |rows| {
                first_bad_minor(&ints, n, rows, &col_sets)
                    .map(|(cols, det)| (rows.clone(), cols, det))
            });
            if let Some((rows, cols, det)) = hit {
                return Ok(TuVerdict::Violated(TuWitness {
                    rows,
                    cols,
                    det: BigRational::from_integer(det),
                }));
            }
        }
        Ok(TuVerdict::TotallyUnimodular)
    }

    pub fn is_tu(&self, a: &ExactMatrix) -> Result<bool> {
        Ok(self.check(a)?.is_tu())
    }

    pub fn is_tu_signing_of(&self, a: &ExactMatrix, u: &ExactMatrix) -> Result<bool> {
        Ok(is_signing_of(a, u)? && self.is_tu(a)?)
    }
}

fn first_bad_minor(
    ints: &[i64],
    n: usize,
    rows: &[usize],
    col_sets: &[Vec<usize>],
) -> Option<(Vec<usize>, BigInt)> {
    let k = rows.len();
    let mut buf = vec![0i128; k * k];
    for cols in col_sets {
        for (a, &r) in rows.iter().enumerate() {
            for (b, &c) in cols.iter().enumerate() {
                buf[a * k + b] = ints[r * n + c] as i128;
            }
        }
        let det = match elim::det_i128(&mut buf, k) {
            Some(d) => BigInt::from(d),
            None => {
                let mut big: Vec<BigInt> = rows
                    .iter()
                    .flat_map(|&r| cols.iter().map(move |&c| BigInt::from(ints[r * n + c])))
                    .collect();
                elim::bareiss_det_big(&mut big, k)
            }
        };
        if det > BigInt::from(1) || det < BigInt::from(-1) {
            return Some((cols.clone(), det));
        }
    }
    None
}

/// TU check with the default guard.
pub fn is_totally_unimodular(a: &ExactMatrix) -> Result<TuVerdict> {
    TuChecker::default().check(a)
}

/// `|a[i][j]|` equals the 0/1 value of `u[i][j]` everywhere.
pub fn is_signing_of(a: &ExactMatrix, u: &ExactMatrix) -> Result<bool> {
    a.expect_kind(ScalarKind::Rational)?;
    u.expect_kind(ScalarKind::Gf2)?;
    if a.n_rows() != u.n_rows() || a.n_cols() != u.n_cols() {
        return Err(Error::dim("signing and pattern differ in shape"));
    }
    let q = a.rationals().expect("rational");
    let bits = u.bits().expect("gf2");
    Ok(q.iter().zip(bits).all(|(v, &b)| {
        if b {
            elim::abs_le_one(v) && !num_traits::Zero::is_zero(v)
        } else {
            num_traits::Zero::is_zero(v)
        }
    }))
}

pub fn is_tu_signing_of(a: &ExactMatrix, u: &ExactMatrix) -> Result<bool> {
    TuChecker::default().is_tu_signing_of(a, u)
}

/// `result[i][j] = rs[i] * cs[j] * a[i][j]`.
pub fn scale_rows_cols(a: &ExactMatrix, rs: &SignVector, cs: &SignVector) -> Result<ExactMatrix> {
    a.expect_kind(ScalarKind::Rational)?;
    if rs.len() != a.n_rows() || cs.len() != a.n_cols() {
        return Err(Error::dim(format!(
            "sign vectors of length {} and {} for a {}x{} matrix",
            rs.len(),
            cs.len(),
            a.n_rows(),
            a.n_cols()
        )));
    }
    Ok(a.negate_where(|i, j| rs.get(i) * cs.get(j) < 0))
}

/// Searches for a totally unimodular signing of a GF(2) matrix.
///
/// Signs on a spanning forest of the bipartite row/column support graph are
/// fixed to +1 (any signing can be brought to that form by row and column
/// negations, which preserve TU); the remaining signs are enumerated in
/// binary order and the first TU candidate is returned.
#[derive(Debug, Clone, Copy)]
pub struct SigningSearch {
    pub checker: TuChecker,
    pub max_free: usize,
}

impl Default for SigningSearch {
    fn default() -> Self {
        SigningSearch {
            checker: TuChecker::default(),
            max_free: DEFAULT_SIGN_MAX_FREE,
        }
    }
}

/// Nonzero positions of `u` split into spanning-forest edges and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportForest {
    pub forest: Vec<(usize, usize)>,
    pub free: Vec<(usize, usize)>,
}

pub fn support_forest(u: &ExactMatrix) -> SupportForest {
    let (m, n) = (u.n_rows(), u.n_cols());
    // vertices 0..m are rows, m..m+n are columns
    let mut seen = vec![false; m + n];
    let mut in_forest = vec![false; m * n];
    let mut forest = Vec::new();
    for start in 0..m + n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let neighbours: Vec<(usize, usize, usize)> = if v < m {
                (0..n)
                    .filter(|&j| !u.is_zero_at(v, j))
                    .map(|j| (v, j, m + j))
                    .collect()
            } else {
                let j = v - m;
                (0..m)
                    .filter(|&i| !u.is_zero_at(i, j))
                    .map(|i| (i, j, i))
                    .collect()
            };
            for (i, j, w) in neighbours {
                if !seen[w] {
                    seen[w] = true;
                    in_forest[i * n + j] = true;
                    forest.push((i, j));
                    queue.push_back(w);
                }
            }
        }
    }
    let free = (0..m)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !u.is_zero_at(i, j) && !in_forest[i * n + j])
        .collect();
    SupportForest { forest, free }
}

impl SigningSearch {
    pub fn find(&self, u: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        u.expect_kind(ScalarKind::Gf2)?;
        let dim = u.n_rows().min(u.n_cols());
        if dim > self.checker.max_dim && !self.checker.force {
            return Err(Error::Guard {
                what: "min(rows, cols)",
                size: dim,
                limit: self.checker.max_dim,
            });
        }
        let SupportForest { free, .. } = support_forest(u);
        if free.len() > self.max_free && !self.checker.force {
            return Err(Error::Guard {
                what: "free signs",
                size: free.len(),
                limit: self.max_free,
            });
        }
        if free.len() >= 63 {
            return Err(Error::Guard {
                what: "free signs",
                size: free.len(),
                limit: 62,
            });
        }
        let base = u.to_rational();
        let n = u.n_cols();
        let inner = TuChecker {
            execution: Execution::Sequential,
            force: true,
            ..self.checker
        };
        let found = self.checker.execution.find_map_first_in(0..1u64 << free.len(), |mask| {
            let negated: Vec<bool> = {
                let mut flags = vec![false; u.n_rows() * n];
                for (bit, &(i, j)) in free.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        flags[i * n + j] = true;
                    }
                }
                flags
            };
            let candidate = base.negate_where(|i, j| negated[i * n + j]);
            match inner.check(&candidate) {
                Ok(v) if v.is_tu() => Some(candidate),
                _ => None,
            }
        });
        Ok(found)
    }
}

/// TU signing search with default guards.
pub fn find_tu_signing(u: &ExactMatrix) -> Result<Option<ExactMatrix>> {
    SigningSearch::default().find(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_int_rows(rows).unwrap()
    }

    fn b(rows: &[&[u8]]) -> ExactMatrix {
        ExactMatrix::from_gf2_rows(rows).unwrap()
    }

    #[test]
    fn tu_examples() {
        assert!(is_totally_unimodular(&ExactMatrix::identity(ScalarKind::Rational, 4))
            .unwrap()
            .is_tu());
        let v = is_totally_unimodular(&q(&[&[1, 1], &[-1, 1]])).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.det, BigRational::from_integer(2.into()));
        assert_eq!((w.rows.clone(), w.cols.clone()), (vec![0, 1], vec![0, 1]));
        let fano = q(&[&[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]]);
        let v = is_totally_unimodular(&fano).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.rows.len(), 3);
        assert_eq!(w.det.numer().clone(), BigInt::from(-2));
    }

    #[test]
    fn large_entry_is_a_1x1_witness() {
        let v = is_totally_unimodular(&q(&[&[1, 0], &[0, 3]])).unwrap();
        let w = v.witness().unwrap();
        assert_eq!((w.rows.as_slice(), w.cols.as_slice()), (&[1][..], &[1][..]));
    }

    #[test]
    fn guard_and_kind() {
        let big = ExactMatrix::identity(ScalarKind::Rational, 9);
        assert!(matches!(
            is_totally_unimodular(&big),
            Err(Error::Guard { size: 9, limit: 8, .. })
        ));
        assert!(TuChecker::forced().check(&big).unwrap().is_tu());
        assert!(matches!(
            is_totally_unimodular(&b(&[&[1]])),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn signing_examples() {
        let u = b(&[&[1, 0], &[0, 1]]);
        assert!(is_signing_of(&u.to_rational(), &u).unwrap());
        assert!(is_signing_of(&q(&[&[-1]]), &b(&[&[1]])).unwrap());
        assert!(!is_signing_of(&q(&[&[2]]), &b(&[&[1]])).unwrap());
        assert!(!is_signing_of(&q(&[&[1]]), &b(&[&[0]])).unwrap());
        assert!(is_signing_of(&q(&[&[1]]), &b(&[&[1, 0]])).is_err());

        let i2 = ExactMatrix::identity(ScalarKind::Rational, 2);
        assert!(is_tu_signing_of(&i2, &i2.support()).unwrap());
        assert!(!is_tu_signing_of(&q(&[&[1, 1], &[-1, 1]]), &b(&[&[1, 1], &[1, 1]])).unwrap());
        assert!(is_tu_signing_of(&q(&[&[1, 1], &[0, 1]]), &b(&[&[1, 1], &[0, 1]])).unwrap());
    }

    #[test]
    fn signing_search_examples() {
        let id = ExactMatrix::identity(ScalarKind::Gf2, 3);
        assert_eq!(
            find_tu_signing(&id).unwrap(),
            Some(ExactMatrix::identity(ScalarKind::Rational, 3))
        );
        let fano = b(&[&[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]]);
        assert_eq!(find_tu_signing(&fano).unwrap(), None);
        let tri = b(&[&[1, 1], &[0, 1]]);
        let a = find_tu_signing(&tri).unwrap().unwrap();
        assert!(is_tu_signing_of(&a, &tri).unwrap());
    }

    #[test]
    fn forest_covers_every_component() {
        let u = b(&[&[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]]);
        let f = support_forest(&u);
        // 7 vertices, connected: 6 forest edges, 9 nonzeros
        assert_eq!(f.forest.len(), 6);
        assert_eq!(f.free.len(), 3);
        let empty_row = b(&[&[0, 0], &[1, 1]]);
        let f = support_forest(&empty_row);
        assert_eq!(f.forest.len(), 2);
        assert!(f.free.is_empty());
    }

    #[test]
    fn scale_examples() {
        let a = q(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            scale_rows_cols(&a, &SignVector::positive(2), &SignVector::positive(2)).unwrap(),
            a
        );
        let one = q(&[&[1]]);
        let neg = SignVector::from_signs(&[-1]).unwrap();
        assert_eq!(scale_rows_cols(&one, &neg, &neg).unwrap(), one);
        let rs = SignVector::from_signs(&[-1, 1]).unwrap();
        assert_eq!(
            scale_rows_cols(&a, &rs, &SignVector::positive(2)).unwrap(),
            q(&[&[-1, -1], &[0, 1]])
        );
        assert!(scale_rows_cols(&a, &neg, &SignVector::positive(2)).is_err());
        assert!(SignVector::from_signs(&[0]).is_err());
    }

    #[test]
    fn execution_strategies_pick_the_same_witness() {
        let m = q(&[
            &[1, 1, 0, 0, 1],
            &[1, -1, 1, 0, 0],
            &[0, 1, 1, 1, 0],
            &[0, 0, 1, -1, 1],
            &[1, 0, 0, 1, 1],
        ]);
        let seq = TuChecker::default().with_execution(Execution::Sequential).check(&m).unwrap();
        let par = TuChecker::default().with_execution(Execution::Parallel).check(&m).unwrap();
        assert_eq!(seq, par);
    }
}
