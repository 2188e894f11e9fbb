//! Standard representations `[1 | B]` of vector matroids.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactmat::{ExactMatrix, ScalarKind};
use crate::label::{Label, LabelSet, LabeledMatrix};
use crate::matroid::{to_matroid, FiniteMatroid, MatroidComparer};
use crate::tumod::{SigningSearch, TuChecker};

/// Disjoint label lists `X`, `Y` and a matrix `B` indexed by `X x Y`.
///
/// The represented matroid lives on `X ∪ Y`; its full representation is
/// `[1 | B]` with the identity on the `X` columns.
#[derive(Clone, PartialEq, Eq)]
pub struct StandardRepr {
    b: LabeledMatrix,
}

impl fmt::Debug for StandardRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StandardRepr")
            .field("x", &self.x())
            .field("y", &self.y())
            .field("b", self.b.body())
            .finish()
    }
}

impl StandardRepr {
    pub fn new(x: Vec<Label>, y: Vec<Label>, b: ExactMatrix) -> Result<Self> {
        Self::from_labeled(LabeledMatrix::new(x, y, b)?)
    }

    pub fn from_labeled(b: LabeledMatrix) -> Result<Self> {
        if let Some(shared) = b.row_labels().iter().find(|l| b.col_of(l).is_some()) {
            return Err(Error::Labels(format!("{shared} is both in X and in Y")));
        }
        Ok(StandardRepr { b })
    }

    pub fn x(&self) -> &[Label] {
        self.b.row_labels()
    }

    pub fn y(&self) -> &[Label] {
        self.b.col_labels()
    }

    pub fn x_set(&self) -> LabelSet {
        self.x().iter().cloned().collect()
    }

    pub fn y_set(&self) -> LabelSet {
        self.y().iter().cloned().collect()
    }

    pub fn b(&self) -> &LabeledMatrix {
        &self.b
    }

    pub fn kind(&self) -> ScalarKind {
        self.b.kind()
    }

    /// Same labels, different body (e.g. a rational signing of `B`).
    pub fn with_body(&self, body: ExactMatrix) -> Result<StandardRepr> {
        StandardRepr::from_labeled(self.b.map_body(body)?)
    }

    /// `[1 | B]`: rows labeled by `X`, columns by `X` then `Y`.
    pub fn to_full(&self) -> LabeledMatrix {
        let kind = self.kind();
        let body = ExactMatrix::from_cols(&ExactMatrix::identity(kind, self.x().len()), self.b.body())
            .expect("identity has one row per X label");
        let cols: Vec<Label> = self.x().iter().chain(self.y()).cloned().collect();
        LabeledMatrix::new(self.x().to_vec(), cols, body).expect("X and Y are disjoint")
    }

    pub fn to_matroid(&self) -> FiniteMatroid {
        to_matroid(&self.to_full())
    }
}

fn require_base(a: &LabeledMatrix, g: &LabelSet) -> Result<(Vec<usize>, Vec<usize>)> {
    let m = to_matroid(a);
    if !m.is_base(g) {
        return Err(Error::NotABase(format!(
            "{{{}}} is not a base of the column matroid",
            g.iter().map(Label::as_str).collect::<Vec<_>>().join(", ")
        )));
    }
    let (base_cols, other_cols): (Vec<usize>, Vec<usize>) =
        (0..a.col_labels().len()).partition(|&j| g.contains(&a.col_labels()[j]));
    Ok((base_cols, other_cols))
}

fn labels_at(all: &[Label], idx: &[usize]) -> Vec<Label> {
    idx.iter().map(|&i| all[i].clone()).collect()
}

/// Standard representation with `X = G`, computed by solving for the
/// coordinates of every other column in the basis of `G`-columns.
///
/// `X` keeps the column order of `a`, and so does `Y`.
pub fn standardize(a: &LabeledMatrix, g: &LabelSet) -> Result<StandardRepr> {
    let (base_cols, other_cols) = require_base(a, g)?;
    let body = a.body();
    let all_rows: Vec<usize> = (0..body.n_rows()).collect();
    let basis = body.submatrix(&all_rows, &base_cols)?;
    // rows on which the basis columns are already independent
    let mut rows: Vec<usize> = Vec::new();
    for i in 0..body.n_rows() {
        let mut trial = rows.clone();
        trial.push(i);
        if basis.submatrix(&trial, &(0..base_cols.len()).collect::<Vec<_>>())?.rank() == trial.len() {
            rows = trial;
        }
    }
    if rows.len() != base_cols.len() {
        return Err(Error::Singular);
    }
    let square = body.submatrix(&rows, &base_cols)?;
    let rhs = body.submatrix(&rows, &other_cols)?;
    let coords = square.inverse()?.mul(&rhs)?;
    StandardRepr::new(
        labels_at(a.col_labels(), &base_cols),
        labels_at(a.col_labels(), &other_cols),
        coords,
    )
}

/// Standard representation with `X = G` obtained by pivoting on `G`-columns
/// of a totally unimodular `a`; every pivot is on a ±1 entry, so the
/// resulting `B` is again totally unimodular.
pub fn standardize_tu(a: &LabeledMatrix, g: &LabelSet) -> Result<StandardRepr> {
    standardize_tu_with(a, g, &TuChecker::default())
}

pub fn standardize_tu_with(
    a: &LabeledMatrix,
    g: &LabelSet,
    checker: &TuChecker,
) -> Result<StandardRepr> {
    a.body().expect_kind(ScalarKind::Rational)?;
    let (base_cols, other_cols) = require_base(a, g)?;
    if !checker.is_tu(a.body())? {
        return Err(Error::NotTotallyUnimodular);
    }
    let mut work = a.body().clone();
    let mut used = vec![false; work.n_rows()];
    let mut pivot_row = Vec::with_capacity(base_cols.len());
    for &c in &base_cols {
        let r = (0..work.n_rows())
            .find(|&r| !used[r] && !work.is_zero_at(r, c))
            .ok_or(Error::Singular)?;
        work = work.pivot(r, c)?;
        used[r] = true;
        pivot_row.push(r);
    }
    let b = work.submatrix(&pivot_row, &other_cols)?;
    StandardRepr::new(
        labels_at(a.col_labels(), &base_cols),
        labels_at(a.col_labels(), &other_cols),
        b,
    )
}

/// GF(2) representation read off the matroid: `B[x][y] = 1` iff
/// `(X - x) + y` is independent, i.e. `x` lies in the fundamental circuit
/// of `y`. `X` and `Y` follow the ground order of `m`.
pub fn fundamental_repr(m: &FiniteMatroid, x: &LabelSet) -> Result<StandardRepr> {
    if !m.is_base(x) {
        return Err(Error::NotABase("X is not a base of the matroid".into()));
    }
    let (xs, ys): (Vec<Label>, Vec<Label>) = m.ground().iter().cloned().partition(|l| x.contains(l));
    let mut bits = Vec::with_capacity(xs.len() * ys.len());
    for xi in &xs {
        for yj in &ys {
            let mut s = x.clone();
            s.remove(xi);
            s.insert(yj.clone());
            bits.push(m.indep(&s));
        }
    }
    let body = ExactMatrix::from_bits(xs.len(), ys.len(), bits);
    StandardRepr::new(xs, ys, body)
}

/// Nonzero pattern of `b` as a GF(2) matrix with the same labels.
pub fn support(b: &LabeledMatrix) -> LabeledMatrix {
    b.map_body(b.body().support()).expect("same shape")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularity {
    /// Carries a TU signing of `B`.
    Regular(ExactMatrix),
    NotRegular,
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular(_))
    }

    pub fn signing(&self) -> Option<&ExactMatrix> {
        match self {
            Regularity::Regular(a) => Some(a),
            Regularity::NotRegular => None,
        }
    }
}

/// A GF(2) standard representation is regular iff `B` has a TU signing.
pub fn is_regular(s: &StandardRepr) -> Result<Regularity> {
    is_regular_with(s, &SigningSearch::default())
}

pub fn is_regular_with(s: &StandardRepr, search: &SigningSearch) -> Result<Regularity> {
    s.b().body().expect_kind(ScalarKind::Gf2)?;
    Ok(match search.find(s.b().body())? {
        Some(a) => Regularity::Regular(a),
        None => Regularity::NotRegular,
    })
}

/// `a` is totally unimodular and its column matroid equals `m`.
pub fn is_regular_witness(a: &LabeledMatrix, m: &FiniteMatroid) -> Result<bool> {
    is_regular_witness_with(a, m, &TuChecker::default(), &MatroidComparer::default())
}

pub fn is_regular_witness_with(
    a: &LabeledMatrix,
    m: &FiniteMatroid,
    checker: &TuChecker,
    comparer: &MatroidComparer,
) -> Result<bool> {
    a.body().expect_kind(ScalarKind::Rational)?;
    if !checker.is_tu(a.body())? {
        return Ok(false);
    }
    comparer.equal(&to_matroid(a), m)
}

/// Binary matrix with the same column matroid as a TU rational matrix.
pub fn to_binary(a: &LabeledMatrix) -> Result<LabeledMatrix> {
    to_binary_with(a, &TuChecker::default())
}

pub fn to_binary_with(a: &LabeledMatrix, checker: &TuChecker) -> Result<LabeledMatrix> {
    a.body().expect_kind(ScalarKind::Rational)?;
    if !checker.is_tu(a.body())? {
        return Err(Error::NotTotallyUnimodular);
    }
    Ok(support(a))
}
