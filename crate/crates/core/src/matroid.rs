//! Finite matroids given by an independence oracle.
//!
//! A [`FiniteMatroid`] is backed by a column representation (vector
//! matroid), an explicit base family, or a disjoint sum of two matroids.
//! All comparisons between matroids are exhaustive over subsets of the
//! ground set and guarded by an explicit size limit.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinatorics::{combinations, mask_members};
use crate::error::{Error, Result};
use crate::exactmat::{elim, ScalarKind};
use crate::exec::Execution;
use crate::label::{check_distinct, Label, LabelSet, LabeledMatrix};

/// Default ground-set bound for exhaustive matroid comparison.
pub const DEFAULT_EQ_MAX_GROUND: usize = 18;
/// Ground-set bound for brute-force axiom verification.
pub const AXIOM_MAX_GROUND: usize = 16;
/// Bound on `n^|V|` for the Z_n coefficient enumeration.
pub const ZMOD_MAX_TUPLES: u64 = 1_000_000;

#[derive(Debug, Clone)]
enum ColumnOracle {
    /// Packed GF(2) columns.
    Gf2(Vec<Vec<u64>>),
    /// Rational columns scaled to integers (scaling a column keeps independence).
    Int { cols: Vec<Vec<BigInt>>, rows: usize },
}

impl ColumnOracle {
    fn new(a: &LabeledMatrix) -> Self {
        let body = a.body();
        let (m, n) = (body.n_rows(), body.n_cols());
        match body.kind() {
            ScalarKind::Gf2 => {
                let bits = body.bits().expect("gf2");
                ColumnOracle::Gf2(
                    (0..n)
                        .map(|j| elim::pack_bits((0..m).map(|i| bits[i * n + j])))
                        .collect(),
                )
            }
            ScalarKind::Rational => {
                let q = body.rationals().expect("rational");
                let cols = (0..n)
                    .map(|j| {
                        let l = (0..m).fold(BigInt::one(), |acc, i| acc.lcm(q[i * n + j].denom()));
                        (0..m)
                            .map(|i| {
                                let v = &q[i * n + j];
                                v.numer() * (&l / v.denom())
                            })
                            .collect()
                    })
                    .collect();
                ColumnOracle::Int { cols, rows: m }
            }
        }
    }

    fn independent(&self, idx: &[usize]) -> bool {
        match self {
            ColumnOracle::Gf2(cols) => {
                gf2_independent(idx.iter().map(|&j| cols[j].as_slice()), idx.len())
            }
            ColumnOracle::Int { cols, rows } => {
                if idx.len() > *rows {
                    return false;
                }
                if idx.iter().any(|&j| cols[j].iter().all(Zero::is_zero)) {
                    return false;
                }
                let vs: Vec<&[BigInt]> = idx.iter().map(|&j| cols[j].as_slice()).collect();
                elim::int_rank(&vs, *rows) == idx.len()
            }
        }
    }
}

fn gf2_independent<'a>(vs: impl Iterator<Item = &'a [u64]>, len: usize) -> bool {
    // single-word fast path: XOR basis keyed by lowest set bit
    let vs: Vec<&[u64]> = vs.collect();
    if vs.iter().all(|v| v.len() == 1) {
        let mut basis: Vec<u64> = Vec::with_capacity(len);
        for v in vs {
            let mut w = v[0];
            for b in &basis {
                let low = b & b.wrapping_neg();
                if w & low != 0 {
                    w ^= b;
                }
            }
            if w == 0 {
                return false;
            }
            basis.push(w);
        }
        return true;
    }
    elim::gf2_rank(vs.iter().copied()) == len
}

#[derive(Debug, Clone)]
enum Backing {
    Vector {
        matrix: LabeledMatrix,
        oracle: ColumnOracle,
    },
    Bases(Vec<Vec<usize>>),
    DisjointSum(Box<FiniteMatroid>, Box<FiniteMatroid>),
}

#[derive(Debug, Clone)]
pub struct FiniteMatroid {
    ground: Vec<Label>,
    index: BTreeMap<Label, usize>,
    backing: Backing,
}

impl FiniteMatroid {
    /// Vector matroid on the column labels of `a`.
    pub fn from_matrix(a: &LabeledMatrix) -> FiniteMatroid {
        let ground = a.col_labels().to_vec();
        let index = ground.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        FiniteMatroid {
            ground,
            index,
            backing: Backing::Vector {
                matrix: a.clone(),
                oracle: ColumnOracle::new(a),
            },
        }
    }

    /// Matroid given by its bases. The family must be nonempty, of equal
    /// cardinalities, inside the ground set, and satisfy base exchange.
    pub fn from_bases(ground: Vec<Label>, bases: Vec<LabelSet>) -> Result<FiniteMatroid> {
        let index = check_distinct("ground", &ground)?;
        if bases.is_empty() {
            return Err(Error::BaseFamily("family is empty".into()));
        }
        let mut family: Vec<Vec<usize>> = Vec::with_capacity(bases.len());
        for b in &bases {
            let mut idx = b
                .iter()
                .map(|l| index.get(l).copied().ok_or_else(|| Error::MissingLabel(l.clone())))
                .collect::<Result<Vec<_>>>()?;
            idx.sort_unstable();
            family.push(idx);
        }
        family.sort();
        family.dedup();
        let r = family[0].len();
        if family.iter().any(|b| b.len() != r) {
            return Err(Error::BaseFamily("bases differ in cardinality".into()));
        }
        for b1 in &family {
            for b2 in &family {
                for &x in b1.iter().filter(|x| !b2.contains(x)) {
                    let ok = b2.iter().filter(|y| !b1.contains(y)).any(|&y| {
                        let mut c: Vec<usize> =
                            b1.iter().copied().filter(|&e| e != x).chain([y]).collect();
                        c.sort_unstable();
                        family.binary_search(&c).is_ok()
                    });
                    if !ok {
                        return Err(Error::BaseFamily(format!(
                            "base exchange fails removing {} from a base",
                            ground[x]
                        )));
                    }
                }
            }
        }
        Ok(FiniteMatroid {
            ground,
            index,
            backing: Backing::Bases(family),
        })
    }

    pub fn ground(&self) -> &[Label] {
        &self.ground
    }

    pub fn ground_set(&self) -> LabelSet {
        self.ground.iter().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// The representing matrix, when this is a vector matroid.
    pub fn matrix(&self) -> Option<&LabeledMatrix> {
        match &self.backing {
            Backing::Vector { matrix, .. } => Some(matrix),
            _ => None,
        }
    }

    fn positions(&self, set: &LabelSet) -> Option<Vec<usize>> {
        let mut idx = set
            .iter()
            .map(|l| self.index.get(l).copied())
            .collect::<Option<Vec<_>>>()?;
        idx.sort_unstable();
        Some(idx)
    }

    fn labels_of(&self, idx: &[usize]) -> LabelSet {
        idx.iter().map(|&i| self.ground[i].clone()).collect()
    }

    /// Independence of ground positions (sorted, distinct).
    pub(crate) fn indep_positions(&self, idx: &[usize]) -> bool {
        match &self.backing {
            Backing::Vector { oracle, .. } => oracle.independent(idx),
            Backing::Bases(family) => family.iter().any(|b| is_sorted_subset(idx, b)),
            Backing::DisjointSum(left, right) => {
                let n1 = left.len();
                let split = idx.partition_point(|&i| i < n1);
                let right_idx: Vec<usize> = idx[split..].iter().map(|&i| i - n1).collect();
                left.indep_positions(&idx[..split]) && right.indep_positions(&right_idx)
            }
        }
    }

    /// False for sets that leave the ground set.
    pub fn indep(&self, set: &LabelSet) -> bool {
        self.positions(set).is_some_and(|idx| self.indep_positions(&idx))
    }

    fn greedy_rank(&self, idx: &[usize]) -> usize {
        let mut chosen: Vec<usize> = Vec::new();
        for &e in idx {
            let mut trial = chosen.clone();
            trial.push(e);
            trial.sort_unstable();
            if self.indep_positions(&trial) {
                chosen = trial;
            }
        }
        chosen.len()
    }

    pub fn rank_of(&self, set: &LabelSet) -> Result<usize> {
        let idx = self.positions(set).ok_or_else(|| {
            let missing = set.iter().find(|l| !self.index.contains_key(*l)).cloned();
            Error::MissingLabel(missing.expect("some label is outside the ground set"))
        })?;
        Ok(self.greedy_rank(&idx))
    }

    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.len()).collect();
        self.greedy_rank(&all)
    }

    /// Independent and not extendable inside the ground set.
    pub fn is_base(&self, set: &LabelSet) -> bool {
        let Some(idx) = self.positions(set) else {
            return false;
        };
        self.indep_positions(&idx) && idx.len() == self.rank()
    }

    /// All bases, each as a sorted label set, in lexicographic order.
    pub fn bases(&self) -> Vec<LabelSet> {
        self.bases_with(Execution::default())
    }

    pub fn bases_with(&self, execution: Execution) -> Vec<LabelSet> {
        let idx_bases: Vec<Vec<usize>> = match &self.backing {
            Backing::Bases(family) => family.clone(),
            _ => {
                let candidates = combinations(self.len(), self.rank());
                execution
                    .map(&candidates, |c| self.indep_positions(c))
                    .into_iter()
                    .zip(candidates)
                    .filter_map(|(ok, c)| ok.then_some(c))
                    .collect()
            }
        };
        let mut out: Vec<LabelSet> = idx_bases.iter().map(|b| self.labels_of(b)).collect();
        out.sort();
        out
    }
}

fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Vector matroid of a labeled matrix over GF(2) or the rationals.
pub fn to_matroid(a: &LabeledMatrix) -> FiniteMatroid {
    FiniteMatroid::from_matrix(a)
}

/// `I` is a subset of the column labels and those columns are independent.
pub fn indep_cols(a: &LabeledMatrix, set: &LabelSet) -> bool {
    let Some(idx) = set.iter().map(|l| a.col_of(l)).collect::<Option<Vec<_>>>() else {
        return false;
    };
    if idx.is_empty() {
        return true;
    }
    let sub = a
        .body()
        .submatrix(&(0..a.body().n_rows()).collect::<Vec<_>>(), &idx)
        .expect("column positions come from the label index");
    sub.rank() == idx.len()
}

/// Exhaustive matroid comparison over all subsets of the ground set.
#[derive(Debug, Clone, Copy)]
pub struct MatroidComparer {
    pub max_ground: usize,
    pub execution: Execution,
}

impl Default for MatroidComparer {
    fn default() -> Self {
        MatroidComparer {
            max_ground: DEFAULT_EQ_MAX_GROUND,
            execution: Execution::default(),
        }
    }
}

impl MatroidComparer {
    /// The first subset (in binary order over `m1`'s ground) on which the
    /// two independence predicates disagree; `Ok(None)` when equal.
    /// Differing ground sets are reported as the symmetric difference.
    pub fn first_difference(
        &self,
        m1: &FiniteMatroid,
        m2: &FiniteMatroid,
    ) -> Result<Option<LabelSet>> {
        let (g1, g2) = (m1.ground_set(), m2.ground_set());
        if g1 != g2 {
            return Ok(Some(g1.symmetric_difference(&g2).cloned().collect()));
        }
        let n = m1.len();
        if n > self.max_ground || n >= 64 {
            return Err(Error::Guard {
                what: "ground set",
                size: n,
                limit: self.max_ground.min(63),
            });
        }
        let to2: Vec<usize> = m1.ground.iter().map(|l| m2.index[l]).collect();
        let hit = self.execution.find_map_first_in(0..1u64 << n, |mask| {
            let idx1 = mask_members(mask);
            let mut idx2: Vec<usize> = idx1.iter().map(|&i| to2[i]).collect();
            idx2.sort_unstable();
            (m1.indep_positions(&idx1) != m2.indep_positions(&idx2)).then_some(idx1)
        });
        Ok(hit.map(|idx| m1.labels_of(&idx)))
    }

    pub fn equal(&self, m1: &FiniteMatroid, m2: &FiniteMatroid) -> Result<bool> {
        Ok(self.first_difference(m1, m2)?.is_none())
    }
}

pub fn matroids_equal(m1: &FiniteMatroid, m2: &FiniteMatroid) -> Result<bool> {
    MatroidComparer::default().equal(m1, m2)
}

/// Disjoint sum: a set is independent iff both of its traces are.
pub fn disjoint_sum(m1: &FiniteMatroid, m2: &FiniteMatroid) -> Result<FiniteMatroid> {
    if let Some(shared) = m1.ground.iter().find(|l| m2.index.contains_key(*l)) {
        return Err(Error::Labels(format!("grounds overlap in {shared}")));
    }
    let ground: Vec<Label> = m1.ground.iter().chain(&m2.ground).cloned().collect();
    let index = ground.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    Ok(FiniteMatroid {
        ground,
        index,
        backing: Backing::DisjointSum(Box::new(m1.clone()), Box::new(m2.clone())),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationFailure {
    /// Independent, not maximal.
    pub independent: LabelSet,
    /// Maximal independent; no element of it extends `independent`.
    pub maximal: LabelSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownwardFailure {
    pub set: LabelSet,
    pub dependent_subset: LabelSet,
}

/// Brute-force check of the independence axioms on a finite ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// Some independent set exists, hence a maximal one.
    pub base_nonempty: bool,
    pub augmentation: Option<AugmentationFailure>,
    pub downward: Option<DownwardFailure>,
}

impl AxiomReport {
    pub fn exchange_ok(&self) -> bool {
        self.augmentation.is_none()
    }

    /// Maximal-subset property; on a finite ground set it reduces to
    /// downward closure of the family.
    pub fn maximality_ok(&self) -> bool {
        self.downward.is_none()
    }

    pub fn is_matroid(&self) -> bool {
        self.base_nonempty && self.exchange_ok() && self.maximality_ok()
    }
}

fn indep_table<F>(ground: &[Label], pred: &F, execution: Execution) -> Result<Vec<bool>>
where
    F: Fn(&LabelSet) -> bool + Sync,
{
    let n = ground.len();
    if n > AXIOM_MAX_GROUND {
        return Err(Error::Guard {
            what: "ground set",
            size: n,
            limit: AXIOM_MAX_GROUND,
        });
    }
    check_distinct("ground", ground)?;
    let masks: Vec<u64> = (0..1u64 << n).collect();
    Ok(execution.map(&masks, |&mask| {
        let set: LabelSet = mask_members(mask).into_iter().map(|i| ground[i].clone()).collect();
        pred(&set)
    }))
}

fn maximal_flags(table: &[bool], n: usize) -> Vec<bool> {
    (0..table.len())
        .map(|mask| table[mask] && (0..n).all(|e| mask >> e & 1 == 1 || !table[mask | 1 << e]))
        .collect()
}

pub fn verify_matroid_axioms<F>(ground: &[Label], pred: F) -> Result<AxiomReport>
where
    F: Fn(&LabelSet) -> bool + Sync,
{
    let n = ground.len();
    let table = indep_table(ground, &pred, Execution::default())?;
    let to_set = |mask: usize| -> LabelSet {
        mask_members(mask as u64).into_iter().map(|i| ground[i].clone()).collect()
    };
    let base_nonempty = table.iter().any(|&b| b);

    let downward = (0..table.len())
        .filter(|&m| table[m])
        .find_map(|m| {
            (0..n)
                .filter(|&e| m >> e & 1 == 1)
                .map(|e| m & !(1 << e))
                .find(|&sub| !table[sub])
                .map(|sub| DownwardFailure {
                    set: to_set(m),
                    dependent_subset: to_set(sub),
                })
        });

    let maximal = maximal_flags(&table, n);
    let maximal_sets: Vec<usize> = (0..table.len()).filter(|&m| maximal[m]).collect();
    let augmentation = (0..table.len())
        .filter(|&i| table[i] && !maximal[i])
        .find_map(|i| {
            maximal_sets
                .iter()
                .find(|&&b| {
                    !(0..n).any(|x| b >> x & 1 == 1 && i >> x & 1 == 0 && table[i | 1 << x])
                })
                .map(|&b| AugmentationFailure {
                    independent: to_set(i),
                    maximal: to_set(b),
                })
        });

    Ok(AxiomReport {
        base_nonempty,
        augmentation,
        downward,
    })
}

/// Whether `(i, b)` violates augmentation: `i` independent and not maximal,
/// `b` maximal, and no `x` in `b \ i` keeps `i + x` independent.
pub fn is_augmentation_failure<F>(ground: &[Label], pred: F, i: &LabelSet, b: &LabelSet) -> Result<bool>
where
    F: Fn(&LabelSet) -> bool + Sync,
{
    let table = indep_table(ground, &pred, Execution::Sequential)?;
    let maximal = maximal_flags(&table, ground.len());
    let mask_of = |s: &LabelSet| -> Option<usize> {
        s.iter()
            .map(|l| ground.iter().position(|g| g == l))
            .try_fold(0usize, |acc, p| p.map(|p| acc | 1 << p))
    };
    let (Some(im), Some(bm)) = (mask_of(i), mask_of(b)) else {
        return Ok(false);
    };
    if !table[im] || maximal[im] || !maximal[bm] {
        return Ok(false);
    }
    Ok(!(0..ground.len()).any(|x| bm >> x & 1 == 1 && im >> x & 1 == 0 && table[im | 1 << x]))
}

/// Linear independence over `Z_n` by exhaustive search over coefficient
/// tuples: true iff the only tuple `c` with `sum c_k v_k = 0 (mod n)` is zero.
pub fn zmod_linear_independent(modulus: u64, vectors: &[Vec<i64>]) -> Result<bool> {
    if modulus < 2 {
        return Err(Error::InvalidEntry(format!("modulus {modulus} is below 2")));
    }
    let Some(len) = vectors.first().map(Vec::len) else {
        return Ok(true);
    };
    if vectors.iter().any(|v| v.len() != len) {
        return Err(Error::dim("vectors differ in length"));
    }
    let k = vectors.len();
    let tuples = (modulus as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if tuples > ZMOD_MAX_TUPLES as u128 {
        return Err(Error::Guard {
            what: "coefficient tuples",
            size: tuples.min(usize::MAX as u128) as usize,
            limit: ZMOD_MAX_TUPLES as usize,
        });
    }
    let m = modulus as i128;
    let reduced: Vec<Vec<i128>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| (x as i128).rem_euclid(m)).collect())
        .collect();
    let mut coeffs = vec![0i128; k];
    loop {
        // advance the odometer; the all-zero tuple is skipped
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(true);
            }
            coeffs[pos] += 1;
            if coeffs[pos] == m {
                coeffs[pos] = 0;
                pos += 1;
            } else {
                break;
            }
        }
        let vanishes = (0..len).all(|r| {
            reduced
                .iter()
                .zip(&coeffs)
                .map(|(v, c)| v[r] * c)
                .sum::<i128>()
                .rem_euclid(m)
                == 0
        });
        if vanishes {
            return Ok(false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::ExactMatrix;
    use crate::label::{label_set, labels};

    fn labeled(rows: &[&str], cols: &[&str], body: ExactMatrix) -> LabeledMatrix {
        LabeledMatrix::new(labels(rows), labels(cols), body).unwrap()
    }

    fn fano() -> LabeledMatrix {
        labeled(
            &["r0", "r1", "r2"],
            &["a", "b", "c", "d", "e", "f", "g"],
            ExactMatrix::from_gf2_rows(&[
                [1, 0, 0, 1, 1, 0, 1],
                [0, 1, 0, 1, 0, 1, 1],
                [0, 0, 1, 0, 1, 1, 1],
            ])
            .unwrap(),
        )
    }

    #[test]
    fn indep_cols_examples() {
        let f = fano();
        assert!(indep_cols(&f, &LabelSet::new()));
        assert!(indep_cols(&f, &label_set(&["a", "b", "c"])));
        assert!(!indep_cols(&f, &label_set(&["a", "zz"])));
        let q = labeled(
            &["r", "s"],
            &["a", "b"],
            ExactMatrix::from_int_rows(&[[1, 2], [2, 4]]).unwrap(),
        );
        assert!(!indep_cols(&q, &label_set(&["a", "b"])));
        assert!(!to_matroid(&q).indep(&label_set(&["a", "b"])));
    }

    #[test]
    fn to_matroid_examples() {
        let loops = labeled(&[], &["a", "b", "c"], ExactMatrix::zeros(ScalarKind::Gf2, 0, 3));
        let m = to_matroid(&loops);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.bases(), vec![LabelSet::new()]);
        assert!(!m.indep(&label_set(&["a"])));

        let free = labeled(&["1", "2", "3"], &["a", "b", "c"], ExactMatrix::identity(ScalarKind::Gf2, 3));
        let m = to_matroid(&free);
        assert!(m.indep(&m.ground_set()));

        let m = to_matroid(&fano());
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bases().len(), 28);
    }

    #[test]
    fn query_examples() {
        let m = to_matroid(&fano());
        assert!(m.indep(&LabelSet::new()));
        assert!(m.is_base(&label_set(&["a", "b", "c"])));
        assert!(!m.is_base(&label_set(&["a", "b", "d"])));
        assert!(!m.is_base(&label_set(&["a", "b"])));
        assert_eq!(m.rank_of(&label_set(&["a", "b", "d"])).unwrap(), 2);
        assert!(m.rank_of(&label_set(&["nope"])).is_err());

        let u = labeled(
            &["1", "2"],
            &["a", "b", "c"],
            ExactMatrix::from_int_rows(&[[1, 0, 1], [0, 1, 1]]).unwrap(),
        );
        let m = to_matroid(&u);
        assert_eq!(
            m.bases(),
            vec![label_set(&["a", "b"]), label_set(&["a", "c"]), label_set(&["b", "c"])]
        );
        let free5 = labeled(
            &["1", "2", "3", "4", "5"],
            &["a", "b", "c", "d", "e"],
            ExactMatrix::identity(ScalarKind::Rational, 5),
        );
        let m = to_matroid(&free5);
        assert_eq!(m.rank_of(&m.ground_set()).unwrap(), 5);
    }

    #[test]
    fn equality_examples() {
        let m = to_matroid(&fano());
        assert!(matroids_equal(&m, &m).unwrap());
        let free_a = labeled(&["1"], &["a"], ExactMatrix::identity(ScalarKind::Gf2, 1));
        let loop_a = labeled(&["1"], &["a"], ExactMatrix::zeros(ScalarKind::Gf2, 1, 1));
        assert!(!matroids_equal(&to_matroid(&free_a), &to_matroid(&loop_a)).unwrap());
        let other = labeled(&["1"], &["b"], ExactMatrix::identity(ScalarKind::Gf2, 1));
        assert!(!matroids_equal(&to_matroid(&free_a), &to_matroid(&other)).unwrap());

        // [I | B] over GF(2) vs a TU signing over Q
        let bin = labeled(
            &["1", "2"],
            &["x1", "x2", "y1", "y2"],
            ExactMatrix::from_gf2_rows(&[[1, 0, 1, 1], [0, 1, 1, 0]]).unwrap(),
        );
        let signed = labeled(
            &["1", "2"],
            &["x1", "x2", "y1", "y2"],
            ExactMatrix::from_int_rows(&[[1, 0, 1, -1], [0, 1, 1, 0]]).unwrap(),
        );
        assert!(matroids_equal(&to_matroid(&bin), &to_matroid(&signed)).unwrap());
    }

    #[test]
    fn equality_guard() {
        let names: Vec<String> = (0..19).map(|i| format!("e{i}")).collect();
        let big = LabeledMatrix::new(
            labels(&names),
            labels(&names),
            ExactMatrix::identity(ScalarKind::Gf2, 19),
        )
        .unwrap();
        let m = to_matroid(&big);
        assert!(matches!(matroids_equal(&m, &m), Err(Error::Guard { size: 19, .. })));
    }

    #[test]
    fn explicit_bases() {
        let g = labels(&["a", "b", "c"]);
        let m = FiniteMatroid::from_bases(
            g.clone(),
            vec![label_set(&["a", "b"]), label_set(&["a", "c"]), label_set(&["b", "c"])],
        )
        .unwrap();
        assert_eq!(m.rank(), 2);
        assert!(m.indep(&label_set(&["c"])));
        assert!(FiniteMatroid::from_bases(g.clone(), vec![]).is_err());
        assert!(FiniteMatroid::from_bases(g.clone(), vec![label_set(&["a"]), label_set(&["b", "c"])]).is_err());
        let bad = FiniteMatroid::from_bases(
            labels(&["a", "b", "c", "d"]),
            vec![label_set(&["a", "b"]), label_set(&["c", "d"])],
        );
        assert!(matches!(bad, Err(Error::BaseFamily(_))));
    }

    #[test]
    fn disjoint_sum_examples() {
        let free_a = to_matroid(&labeled(&["1"], &["a"], ExactMatrix::identity(ScalarKind::Gf2, 1)));
        let free_b = to_matroid(&labeled(&["1"], &["b"], ExactMatrix::identity(ScalarKind::Gf2, 1)));
        let free_ab = to_matroid(&labeled(&["1", "2"], &["a", "b"], ExactMatrix::identity(ScalarKind::Gf2, 2)));
        let s = disjoint_sum(&free_a, &free_b).unwrap();
        assert!(matroids_equal(&s, &free_ab).unwrap());
        let empty = to_matroid(&labeled(&[], &[], ExactMatrix::zeros(ScalarKind::Gf2, 0, 0)));
        assert!(matroids_equal(&disjoint_sum(&free_a, &empty).unwrap(), &free_a).unwrap());
        assert!(disjoint_sum(&free_a, &free_a).is_err());
    }

    #[test]
    fn axiom_examples() {
        let g = labels(&["a", "b", "c"]);
        let r = verify_matroid_axioms(&g, |_| true).unwrap();
        assert!(r.is_matroid());

        let g = labels(&["a", "b", "c", "d"]);
        let cd = label_set(&["c", "d"]);
        let pred = |s: &LabelSet| s.len() <= 1 || *s == cd;
        let r = verify_matroid_axioms(&g, pred).unwrap();
        assert!(r.base_nonempty);
        assert!(r.maximality_ok());
        let f = r.augmentation.clone().expect("augmentation must fail");
        assert!(is_augmentation_failure(&g, pred, &f.independent, &f.maximal).unwrap());

        let not_closed = |s: &LabelSet| s.len() == 2;
        let r = verify_matroid_axioms(&labels(&["a", "b"]), not_closed).unwrap();
        assert!(!r.maximality_ok());
    }

    #[test]
    fn zmod_examples() {
        assert!(zmod_linear_independent(6, &[vec![0, 1]]).unwrap());
        assert!(zmod_linear_independent(6, &[vec![2, 3], vec![3, 2]]).unwrap());
        assert!(!zmod_linear_independent(6, &[vec![2, 0]]).unwrap());
        assert!(zmod_linear_independent(6, &[]).unwrap());
        assert!(zmod_linear_independent(1, &[vec![1]]).is_err());
        assert!(zmod_linear_independent(6, &[vec![1], vec![1, 2]]).is_err());
        let many = vec![vec![1]; 8];
        assert!(matches!(
            zmod_linear_independent(6, &many),
            Err(Error::Guard { .. })
        ));
    }
}
