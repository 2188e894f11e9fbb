//! 1-, 2- and 3-sums of matrices and standard representations, and the
//! signings that certify the sums of regular matroids are regular.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactmat::{ExactMatrix, ScalarKind};
use crate::label::{Label, LabelSet, LabeledMatrix};
use crate::matroid::{FiniteMatroid, MatroidComparer};
use crate::stdrepr::StandardRepr;
use crate::tumod::{scale_rows_cols, SignVector, TuChecker};

/// Why a sum is not defined even though the label shapes fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvalidReason {
    XOverlap,
    YOverlap,
    ZeroRow,
    ZeroColumn,
    NonDistinctLabels,
    D0Mismatch,
    D0Singular,
    MissingOneEntry,
    NonzeroOutsidePattern,
}

impl InvalidReason {
    pub fn as_str(self) -> &'static str {
        match self {
            InvalidReason::XOverlap => "X overlap",
            InvalidReason::YOverlap => "Y overlap",
            InvalidReason::ZeroRow => "zero row r",
            InvalidReason::ZeroColumn => "zero column c",
            InvalidReason::NonDistinctLabels => "non-distinct labels",
            InvalidReason::D0Mismatch => "D0 mismatch",
            InvalidReason::D0Singular => "D0 singular",
            InvalidReason::MissingOneEntry => "missing 1-entry",
            InvalidReason::NonzeroOutsidePattern => "nonzero outside pattern",
        }
    }
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SumOutcome {
    Valid(StandardRepr),
    Invalid { reason: InvalidReason, detail: String },
}

impl SumOutcome {
    fn invalid(reason: InvalidReason, detail: impl Into<String>) -> Self {
        SumOutcome::Invalid {
            reason,
            detail: detail.into(),
        }
    }

    pub fn is_valid(&self) -> bool {
        matches!(self, SumOutcome::Valid(_))
    }

    pub fn valid(&self) -> Option<&StandardRepr> {
        match self {
            SumOutcome::Valid(s) => Some(s),
            SumOutcome::Invalid { .. } => None,
        }
    }

    pub fn into_valid(self) -> Option<StandardRepr> {
        match self {
            SumOutcome::Valid(s) => Some(s),
            SumOutcome::Invalid { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<InvalidReason> {
        match self {
            SumOutcome::Valid(_) => None,
            SumOutcome::Invalid { reason, .. } => Some(*reason),
        }
    }
}

fn show(set: &LabelSet) -> String {
    let names: Vec<&str> = set.iter().map(Label::as_str).collect();
    format!("{{{}}}", names.join(", "))
}

fn without(labels: &[Label], drop: &[&Label]) -> Vec<Label> {
    labels.iter().filter(|l| !drop.contains(l)).cloned().collect()
}

fn require_disjoint(a: &LabelSet, b: &LabelSet, what: &str) -> Result<()> {
    let common: LabelSet = a.intersection(b).cloned().collect();
    if common.is_empty() {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!("{what} must be disjoint, share {}", show(&common))))
    }
}

fn require_intersection(a: &LabelSet, b: &LabelSet, expected: LabelSet, what: &str) -> Result<()> {
    let common: LabelSet = a.intersection(b).cloned().collect();
    if common == expected {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!(
            "{what} must intersect in exactly {}, found {}",
            show(&expected),
            show(&common)
        )))
    }
}

fn require_gf2(s: &StandardRepr) -> Result<()> {
    s.b().body().expect_kind(ScalarKind::Gf2)
}

/// `[[a_l, 0], [0, a_r]]`.
pub fn matrix_sum_1(a_l: &ExactMatrix, a_r: &ExactMatrix) -> Result<ExactMatrix> {
    a_l.same_kind(a_r)?;
    let kind = a_l.kind();
    ExactMatrix::from_blocks(
        a_l,
        &ExactMatrix::zeros(kind, a_l.n_rows(), a_r.n_cols()),
        &ExactMatrix::zeros(kind, a_r.n_rows(), a_l.n_cols()),
        a_r,
    )
}

/// `[[a_l, 0], [c r, a_r]]` with `r` a `1 x cols(a_l)` row and `c` a
/// `rows(a_r) x 1` column.
pub fn matrix_sum_2(
    a_l: &ExactMatrix,
    r: &ExactMatrix,
    a_r: &ExactMatrix,
    c: &ExactMatrix,
) -> Result<ExactMatrix> {
    if r.n_rows() != 1 || r.n_cols() != a_l.n_cols() {
        return Err(Error::dim(format!(
            "r must be 1x{}, got {}x{}",
            a_l.n_cols(),
            r.n_rows(),
            r.n_cols()
        )));
    }
    if c.n_cols() != 1 || c.n_rows() != a_r.n_rows() {
        return Err(Error::dim(format!(
            "c must be {}x1, got {}x{}",
            a_r.n_rows(),
            c.n_rows(),
            c.n_cols()
        )));
    }
    a_l.same_kind(a_r)?;
    let outer = c.mul(r)?;
    ExactMatrix::from_blocks(
        a_l,
        &ExactMatrix::zeros(a_l.kind(), a_l.n_rows(), a_r.n_cols()),
        &outer,
        a_r,
    )
}

/// Overlap labels of a 3-sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sum3Labels {
    pub x0: Label,
    pub x1: Label,
    pub x2: Label,
    pub y0: Label,
    pub y1: Label,
    pub y2: Label,
}

impl Sum3Labels {
    pub fn new<S: AsRef<str>>(x: [S; 3], y: [S; 3]) -> Result<Self> {
        let [x0, x1, x2] = x;
        let [y0, y1, y2] = y;
        Ok(Sum3Labels {
            x0: Label::new(x0)?,
            x1: Label::new(x1)?,
            x2: Label::new(x2)?,
            y0: Label::new(y0)?,
            y1: Label::new(y1)?,
            y2: Label::new(y2)?,
        })
    }

    fn xs(&self) -> [&Label; 3] {
        [&self.x0, &self.x1, &self.x2]
    }

    fn ys(&self) -> [&Label; 3] {
        [&self.y0, &self.y1, &self.y2]
    }

    fn distinct(&self) -> bool {
        let d = |[a, b, c]: [&Label; 3]| a != b && a != c && b != c;
        d(self.xs()) && d(self.ys())
    }

    fn x01(&self) -> [Label; 2] {
        [self.x0.clone(), self.x1.clone()]
    }

    fn y01(&self) -> [Label; 2] {
        [self.y0.clone(), self.y1.clone()]
    }
}

/// The six blocks of a 3-sum.
///
/// Rows of `a_l` are `X'l` then `x2`, its columns `Y'l` then `y0, y1`.
/// `d_l` has rows `x0, x1` and columns `Y'l`; both `d0` blocks are indexed by
/// `x0, x1` and `y0, y1`; `d_r` has rows `X'r` and columns `y0, y1`; `a_r` has
/// rows `x0, x1` then `X'r` and columns `y2` then `Y'r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSum3Blocks {
    pub a_l: ExactMatrix,
    pub d_l: ExactMatrix,
    pub d0_l: ExactMatrix,
    pub d0_r: ExactMatrix,
    pub d_r: ExactMatrix,
    pub a_r: ExactMatrix,
}

/// Labels of the non-shared rows and columns of each summand, in stored order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sum3Frame {
    pub x_l: Vec<Label>,
    pub y_l: Vec<Label>,
    pub x_r: Vec<Label>,
    pub y_r: Vec<Label>,
}

impl Sum3Frame {
    /// Row labels of [`matrix_sum_3`]: `X'l, x2, x0, x1, X'r`.
    pub fn rows(&self, l: &Sum3Labels) -> Vec<Label> {
        let mut out = self.x_l.clone();
        out.extend([l.x2.clone(), l.x0.clone(), l.x1.clone()]);
        out.extend(self.x_r.iter().cloned());
        out
    }

    /// Column labels of [`matrix_sum_3`]: `Y'l, y0, y1, y2, Y'r`.
    pub fn cols(&self, l: &Sum3Labels) -> Vec<Label> {
        let mut out = self.y_l.clone();
        out.extend([l.y0.clone(), l.y1.clone(), l.y2.clone()]);
        out.extend(self.y_r.iter().cloned());
        out
    }
}

/// Cuts `b_l` and `b_r` into the six 3-sum blocks by label.
pub fn blocks_from_summands(
    b_l: &LabeledMatrix,
    b_r: &LabeledMatrix,
    l: &Sum3Labels,
) -> Result<(MatrixSum3Blocks, Sum3Frame)> {
    let frame = Sum3Frame {
        x_l: without(b_l.row_labels(), &l.xs()),
        y_l: without(b_l.col_labels(), &l.ys()),
        x_r: without(b_r.row_labels(), &l.xs()),
        y_r: without(b_r.col_labels(), &l.ys()),
    };
    let x01 = l.x01();
    let y01 = l.y01();
    let mut a_l_rows = frame.x_l.clone();
    a_l_rows.push(l.x2.clone());
    let mut a_l_cols = frame.y_l.clone();
    a_l_cols.extend(y01.iter().cloned());
    let mut a_r_rows = x01.to_vec();
    a_r_rows.extend(frame.x_r.iter().cloned());
    let mut a_r_cols = vec![l.y2.clone()];
    a_r_cols.extend(frame.y_r.iter().cloned());

    let blocks = MatrixSum3Blocks {
        a_l: b_l.block(&a_l_rows, &a_l_cols)?,
        d_l: b_l.block(&x01, &frame.y_l)?,
        d0_l: b_l.block(&x01, &y01)?,
        d0_r: b_r.block(&x01, &y01)?,
        d_r: b_r.block(&frame.x_r, &y01)?,
        a_r: b_r.block(&a_r_rows, &a_r_cols)?,
    };
    Ok((blocks, frame))
}

/// `[[a_l, 0], [[d_l, d0_l], [d_r d0_l^-1 d_l, d_r]], a_r]]`.
pub fn matrix_sum_3(blocks: &MatrixSum3Blocks) -> Result<ExactMatrix> {
    let MatrixSum3Blocks {
        a_l,
        d_l,
        d0_l,
        d0_r,
        d_r,
        a_r,
    } = blocks;
    for m in [d_l, d0_l, d0_r, d_r, a_r] {
        a_l.same_kind(m)?;
    }
    if d0_l.n_rows() != 2 || d0_l.n_cols() != 2 || d0_r.n_rows() != 2 || d0_r.n_cols() != 2 {
        return Err(Error::dim("D0 blocks must be 2x2"));
    }
    let d_lr = d_r.mul(&d0_l.inverse()?)?.mul(d_l)?;
    let bottom_left = ExactMatrix::from_blocks(d_l, d0_l, &d_lr, d_r)?;
    ExactMatrix::from_blocks(
        a_l,
        &ExactMatrix::zeros(a_l.kind(), a_l.n_rows(), a_r.n_cols()),
        &bottom_left,
        a_r,
    )
}

/// 1-sum of GF(2) standard representations.
///
/// Errors if `Sl.X` meets `Sr.Y` or `Sl.Y` meets `Sr.X`.
pub fn standard_repr_sum_1(s_l: &StandardRepr, s_r: &StandardRepr) -> Result<SumOutcome> {
    require_gf2(s_l)?;
    require_gf2(s_r)?;
    let (xl, yl, xr, yr) = (s_l.x_set(), s_l.y_set(), s_r.x_set(), s_r.y_set());
    require_disjoint(&xl, &yr, "Sl.X and Sr.Y")?;
    require_disjoint(&yl, &xr, "Sl.Y and Sr.X")?;
    let xs: LabelSet = xl.intersection(&xr).cloned().collect();
    if !xs.is_empty() {
        return Ok(SumOutcome::invalid(InvalidReason::XOverlap, format!("shared X labels {}", show(&xs))));
    }
    let ys: LabelSet = yl.intersection(&yr).cloned().collect();
    if !ys.is_empty() {
        return Ok(SumOutcome::invalid(InvalidReason::YOverlap, format!("shared Y labels {}", show(&ys))));
    }
    let b = matrix_sum_1(s_l.b().body(), s_r.b().body())?;
    let x = s_l.x().iter().chain(s_r.x()).cloned().collect();
    let y = s_l.y().iter().chain(s_r.y()).cloned().collect();
    Ok(SumOutcome::Valid(StandardRepr::new(x, y, b)?))
}

fn check_sum_2_shape(s_l: &StandardRepr, s_r: &StandardRepr, x: &Label, y: &Label) -> Result<()> {
    let (xl, yl, xr, yr) = (s_l.x_set(), s_l.y_set(), s_r.x_set(), s_r.y_set());
    require_intersection(&xl, &xr, LabelSet::from([x.clone()]), "Sl.X and Sr.X")?;
    require_intersection(&yl, &yr, LabelSet::from([y.clone()]), "Sl.Y and Sr.Y")?;
    require_disjoint(&xl, &yr, "Sl.X and Sr.Y")?;
    require_disjoint(&yl, &xr, "Sl.Y and Sr.X")
}

/// Pieces of a 2-sum: `Sl.B = [a_l / r]`, `Sr.B = [c | a_r]`.
struct Sum2Parts {
    a_l: ExactMatrix,
    r: ExactMatrix,
    a_r: ExactMatrix,
    c: ExactMatrix,
    x: Vec<Label>,
    y: Vec<Label>,
}

fn sum_2_parts(
    l: &LabeledMatrix,
    r: &LabeledMatrix,
    x: &Label,
    y: &Label,
) -> Result<Sum2Parts> {
    let xl = without(l.row_labels(), &[x]);
    let yr = without(r.col_labels(), &[y]);
    let parts = Sum2Parts {
        a_l: l.block(&xl, l.col_labels())?,
        r: l.block(std::slice::from_ref(x), l.col_labels())?,
        a_r: r.block(r.row_labels(), &yr)?,
        c: r.block(r.row_labels(), std::slice::from_ref(y))?,
        x: xl.into_iter().chain(r.row_labels().iter().cloned()).collect(),
        y: l.col_labels().iter().cloned().chain(yr).collect(),
    };
    Ok(parts)
}

/// 2-sum of GF(2) standard representations along row label `x` of `Sl`
/// and column label `y` of `Sr`.
pub fn standard_repr_sum_2(
    s_l: &StandardRepr,
    s_r: &StandardRepr,
    x: &Label,
    y: &Label,
) -> Result<SumOutcome> {
    require_gf2(s_l)?;
    require_gf2(s_r)?;
    check_sum_2_shape(s_l, s_r, x, y)?;
    let p = sum_2_parts(s_l.b(), s_r.b(), x, y)?;
    if p.r.is_zero() {
        return Ok(SumOutcome::invalid(InvalidReason::ZeroRow, format!("row {x} of Sl.B is zero")));
    }
    if p.c.is_zero() {
        return Ok(SumOutcome::invalid(InvalidReason::ZeroColumn, format!("column {y} of Sr.B is zero")));
    }
    let b = matrix_sum_2(&p.a_l, &p.r, &p.a_r, &p.c)?;
    Ok(SumOutcome::Valid(StandardRepr::new(p.x, p.y, b)?))
}

fn check_sum_3_shape(s_l: &StandardRepr, s_r: &StandardRepr, l: &Sum3Labels) -> Result<()> {
    let (xl, yl, xr, yr) = (s_l.x_set(), s_l.y_set(), s_r.x_set(), s_r.y_set());
    let xs: LabelSet = l.xs().into_iter().cloned().collect();
    let ys: LabelSet = l.ys().into_iter().cloned().collect();
    require_intersection(&xl, &xr, xs, "Sl.X and Sr.X")?;
    require_intersection(&yl, &yr, ys, "Sl.Y and Sr.Y")?;
    require_disjoint(&xl, &yr, "Sl.X and Sr.Y")?;
    require_disjoint(&yl, &xr, "Sl.Y and Sr.X")
}

/// First failing validity conjunct of a 3-sum, if any.
fn sum_3_violation(b_l: &LabeledMatrix, b_r: &LabeledMatrix, l: &Sum3Labels) -> Result<Option<SumOutcome>> {
    use InvalidReason::*;
    if !l.distinct() {
        return Ok(Some(SumOutcome::invalid(NonDistinctLabels, "x0, x1, x2 and y0, y1, y2 must be pairwise distinct")));
    }
    let (x01, y01) = (l.x01(), l.y01());
    let d0 = b_l.block(&x01, &y01)?;
    if d0 != b_r.block(&x01, &y01)? {
        return Ok(Some(SumOutcome::invalid(D0Mismatch, "the D0 blocks of Sl.B and Sr.B differ")));
    }
    if is_unit_2x2(&d0).is_none() {
        return Ok(Some(SumOutcome::invalid(D0Singular, "D0 is not invertible")));
    }
    let ones = [(&l.x0, &l.y2), (&l.x1, &l.y2), (&l.x2, &l.y0), (&l.x2, &l.y1)];
    for (side, b) in [("Sl", b_l), ("Sr", b_r)] {
        for (x, y) in ones {
            if !b.is_one_at(x, y)? {
                return Ok(Some(SumOutcome::invalid(MissingOneEntry, format!("{side}.B[{x}][{y}] is not 1"))));
            }
        }
        if side == "Sl" {
            let j = b.require_col(&l.y2)?;
            if let Some(i) = (0..b.row_labels().len())
                .find(|&i| !b.body().is_zero_at(i, j) && b.row_labels()[i] != l.x0 && b.row_labels()[i] != l.x1)
            {
                return Ok(Some(SumOutcome::invalid(
                    NonzeroOutsidePattern,
                    format!("Sl.B[{}][{}] is nonzero outside rows x0, x1", b.row_labels()[i], l.y2),
                )));
            }
        } else {
            let i = b.require_row(&l.x2)?;
            if let Some(j) = (0..b.col_labels().len())
                .find(|&j| !b.body().is_zero_at(i, j) && b.col_labels()[j] != l.y0 && b.col_labels()[j] != l.y1)
            {
                return Ok(Some(SumOutcome::invalid(
                    NonzeroOutsidePattern,
                    format!("Sr.B[{}][{}] is nonzero outside columns y0, y1", l.x2, b.col_labels()[j]),
                )));
            }
        }
    }
    Ok(None)
}

/// Assembles `matrix_sum_3` of labeled summands and orders rows and columns
/// as `Sl` labels then `Sr` labels, each in stored order.
fn assemble_sum_3(b_l: &LabeledMatrix, b_r: &LabeledMatrix, l: &Sum3Labels) -> Result<LabeledMatrix> {
    let (blocks, frame) = blocks_from_summands(b_l, b_r, l)?;
    let body = matrix_sum_3(&blocks)?;
    let raw = LabeledMatrix::new(frame.rows(l), frame.cols(l), body)?;
    let x: Vec<Label> = without(b_l.row_labels(), &[&l.x0, &l.x1])
        .into_iter()
        .chain(without(b_r.row_labels(), &[&l.x2]))
        .collect();
    let y: Vec<Label> = without(b_l.col_labels(), &[&l.y2])
        .into_iter()
        .chain(without(b_r.col_labels(), &[&l.y0, &l.y1]))
        .collect();
    raw.select(&x, &y)
}

/// 3-sum of GF(2) standard representations overlapping in `x0, x1, x2`
/// and `y0, y1, y2`.
pub fn standard_repr_sum_3(s_l: &StandardRepr, s_r: &StandardRepr, l: &Sum3Labels) -> Result<SumOutcome> {
    require_gf2(s_l)?;
    require_gf2(s_r)?;
    check_sum_3_shape(s_l, s_r, l)?;
    if let Some(bad) = sum_3_violation(s_l.b(), s_r.b(), l)? {
        return Ok(bad);
    }
    let b = assemble_sum_3(s_l.b(), s_r.b(), l)?;
    Ok(SumOutcome::Valid(StandardRepr::from_labeled(b)?))
}

/// Canonical forms of an invertible GF(2) 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit2x2Form {
    /// `[[1, 0], [0, 1]]`
    Identity,
    /// `[[1, 1], [0, 1]]`
    UpperTriangular11,
}

impl Unit2x2Form {
    pub fn matrix(self) -> ExactMatrix {
        let rows: [[u8; 2]; 2] = match self {
            Unit2x2Form::Identity => [[1, 0], [0, 1]],
            Unit2x2Form::UpperTriangular11 => [[1, 1], [0, 1]],
        };
        ExactMatrix::from_gf2_rows(&rows).expect("2x2 literal")
    }

    /// Signed 3x3 pattern shared by both summands after re-signing.
    pub fn target(self) -> ExactMatrix {
        let rows: [[i64; 3]; 3] = match self {
            Unit2x2Form::Identity => [[1, 1, 0], [1, 0, 1], [0, -1, 1]],
            Unit2x2Form::UpperTriangular11 => [[1, 1, 0], [1, 1, 1], [0, 1, 1]],
        };
        ExactMatrix::from_int_rows(&rows).expect("3x3 literal")
    }
}

/// `a.submatrix(rows, cols) == form.matrix()`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Unit2x2 {
    pub rows: [usize; 2],
    pub cols: [usize; 2],
    pub form: Unit2x2Form,
}

/// Brings an invertible GF(2) 2x2 matrix to canonical form by permuting rows
/// and columns; `None` if it is singular (or not a GF(2) 2x2 matrix).
pub fn is_unit_2x2(a: &ExactMatrix) -> Option<Unit2x2> {
    if a.kind() != ScalarKind::Gf2 || a.n_rows() != 2 || a.n_cols() != 2 {
        return None;
    }
    const ID: [usize; 2] = [0, 1];
    const SWAP: [usize; 2] = [1, 0];
    for form in [Unit2x2Form::Identity, Unit2x2Form::UpperTriangular11] {
        let want = form.matrix();
        for cols in [ID, SWAP] {
            for rows in [ID, SWAP] {
                if a.submatrix(&rows, &cols).ok()? == want {
                    return Some(Unit2x2 { rows, cols, form });
                }
            }
        }
    }
    None
}

fn require_tu(checker: &TuChecker, a: &ExactMatrix, what: &str) -> Result<()> {
    a.expect_kind(ScalarKind::Rational)?;
    if checker.is_tu(a)? {
        Ok(())
    } else {
        Err(Error::Resign(format!("{what} is not totally unimodular")))
    }
}

/// Signed 1-sum of two TU matrices.
pub fn sign_sum_1(a_l: &ExactMatrix, a_r: &ExactMatrix) -> Result<ExactMatrix> {
    sign_sum_1_with(a_l, a_r, &TuChecker::default())
}

pub fn sign_sum_1_with(a_l: &ExactMatrix, a_r: &ExactMatrix, checker: &TuChecker) -> Result<ExactMatrix> {
    require_tu(checker, a_l, "left signing")?;
    require_tu(checker, a_r, "right signing")?;
    matrix_sum_1(a_l, a_r)
}

/// Signed 2-sum; `[a_l / r]` and `[c | a_r]` must be TU.
pub fn sign_sum_2(a_l: &ExactMatrix, r: &ExactMatrix, a_r: &ExactMatrix, c: &ExactMatrix) -> Result<ExactMatrix> {
    sign_sum_2_with(a_l, r, a_r, c, &TuChecker::default())
}

pub fn sign_sum_2_with(
    a_l: &ExactMatrix,
    r: &ExactMatrix,
    a_r: &ExactMatrix,
    c: &ExactMatrix,
    checker: &TuChecker,
) -> Result<ExactMatrix> {
    require_tu(checker, &ExactMatrix::from_rows(a_l, r)?, "[A'l / r']")?;
    require_tu(checker, &ExactMatrix::from_cols(c, a_r)?, "[c' | A'r]")?;
    matrix_sum_2(a_l, r, a_r, c)
}

/// Negates rows and columns of `a` so that `a[rows][cols]` equals `target`.
///
/// Signs are propagated breadth-first over the support of the designated
/// 3x3 submatrix and then checked entry by entry; rows and columns outside
/// the designated ones keep their sign.
pub fn resign_to_target(
    a: &ExactMatrix,
    rows: [usize; 3],
    cols: [usize; 3],
    target: &ExactMatrix,
) -> Result<ExactMatrix> {
    a.expect_kind(ScalarKind::Rational)?;
    target.expect_kind(ScalarKind::Rational)?;
    if target.n_rows() != 3 || target.n_cols() != 3 {
        return Err(Error::dim("target must be 3x3"));
    }
    let distinct = |p: [usize; 3]| p[0] != p[1] && p[0] != p[2] && p[1] != p[2];
    if !distinct(rows) || !distinct(cols) {
        return Err(Error::dim("designated rows and columns must be distinct"));
    }
    let sub = a.submatrix(&rows, &cols)?;
    if sub.support() != target.support() {
        return Err(Error::Resign("support of the designated submatrix differs from the target".into()));
    }
    let sign = |i: usize, j: usize| -> i8 {
        // both entries are ±1 here
        if sub.get(i, j) == target.get(i, j) {
            1
        } else {
            -1
        }
    };
    // nodes 0..3 are rows, 3..6 columns
    let mut s: [i8; 6] = [0; 6];
    for start in 0..6 {
        if s[start] != 0 {
            continue;
        }
        s[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in 0..6 {
                if (v < 3) == (w < 3) || s[w] != 0 {
                    continue;
                }
                let (i, j) = if v < 3 { (v, w - 3) } else { (w, v - 3) };
                if !sub.is_zero_at(i, j) {
                    // rs[i] * cs[j] must equal the needed flip
                    s[w] = s[v] * sign(i, j);
                    queue.push_back(w);
                }
            }
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            if !sub.is_zero_at(i, j) && s[i] * s[3 + j] != sign(i, j) {
                return Err(Error::Resign(format!(
                    "sign pattern around entry ({i}, {j}) cannot be matched by scaling"
                )));
            }
        }
    }
    let mut rs = vec![1i8; a.n_rows()];
    let mut cs = vec![1i8; a.n_cols()];
    for k in 0..3 {
        rs[rows[k]] = s[k];
        cs[cols[k]] = s[3 + k];
    }
    scale_rows_cols(a, &SignVector::from_signs(&rs)?, &SignVector::from_signs(&cs)?)
}

/// The canonical TU signing of a 3-sum, labeled like the body of
/// [`standard_repr_sum_3`]'s output.
///
/// `a_l` and `a_r` are TU signings of `Sl.B` and `Sr.B` carrying their
/// labels. Both are re-signed so that their 3x3 pattern on rows `x2, x0, x1`
/// and columns `y0, y1, y2` (permuted to bring `D0` to canonical form)
/// equals a common target; the bottom-left block is then `D'r D'0^-1 D'l`.
pub fn canonical_signing_sum3(a_l: &LabeledMatrix, a_r: &LabeledMatrix, l: &Sum3Labels) -> Result<LabeledMatrix> {
    a_l.body().expect_kind(ScalarKind::Rational)?;
    a_r.body().expect_kind(ScalarKind::Rational)?;
    let (x01, y01) = (l.x01(), l.y01());
    let d0 = a_l.block(&x01, &y01)?.support();
    let unit = is_unit_2x2(&d0).ok_or_else(|| Error::Resign("D0 is not invertible over GF(2)".into()))?;
    let target = unit.form.target();
    let resign = |a: &LabeledMatrix| -> Result<LabeledMatrix> {
        let rows = [
            a.require_row(&l.x2)?,
            a.require_row(&x01[unit.rows[0]])?,
            a.require_row(&x01[unit.rows[1]])?,
        ];
        let cols = [
            a.require_col(&y01[unit.cols[0]])?,
            a.require_col(&y01[unit.cols[1]])?,
            a.require_col(&l.y2)?,
        ];
        a.map_body(resign_to_target(a.body(), rows, cols, &target)?)
    };
    assemble_sum_3(&resign(a_l)?, &resign(a_r)?, l)
}

/// How two summands are glued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Glue {
    One,
    Two { x: Label, y: Label },
    Three(Sum3Labels),
}

impl Glue {
    pub fn k(&self) -> u8 {
        match self {
            Glue::One => 1,
            Glue::Two { .. } => 2,
            Glue::Three(_) => 3,
        }
    }
}

/// Standard representations of two summands and their overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumWitness {
    pub left: StandardRepr,
    pub right: StandardRepr,
    pub glue: Glue,
}

/// Dispatches to the 1-, 2- or 3-sum constructor.
pub fn standard_repr_sum(s_l: &StandardRepr, s_r: &StandardRepr, glue: &Glue) -> Result<SumOutcome> {
    match glue {
        Glue::One => standard_repr_sum_1(s_l, s_r),
        Glue::Two { x, y } => standard_repr_sum_2(s_l, s_r, x, y),
        Glue::Three(l) => standard_repr_sum_3(s_l, s_r, l),
    }
}

/// TU signing of the sum of `s_l` and `s_r`, given TU signings of their
/// `B` matrices. Rows and columns follow the sum's `X` and `Y`.
pub fn sum_signing(
    s_l: &StandardRepr,
    sign_l: &ExactMatrix,
    s_r: &StandardRepr,
    sign_r: &ExactMatrix,
    glue: &Glue,
    checker: &TuChecker,
) -> Result<LabeledMatrix> {
    let a_l = s_l.b().map_body(sign_l.clone())?;
    let a_r = s_r.b().map_body(sign_r.clone())?;
    match glue {
        Glue::One => {
            let body = sign_sum_1_with(sign_l, sign_r, checker)?;
            let x = s_l.x().iter().chain(s_r.x()).cloned().collect();
            let y = s_l.y().iter().chain(s_r.y()).cloned().collect();
            LabeledMatrix::new(x, y, body)
        }
        Glue::Two { x, y } => {
            let p = sum_2_parts(&a_l, &a_r, x, y)?;
            let body = sign_sum_2_with(&p.a_l, &p.r, &p.a_r, &p.c, checker)?;
            LabeledMatrix::new(p.x, p.y, body)
        }
        Glue::Three(l) => {
            require_tu(checker, sign_l, "left signing")?;
            require_tu(checker, sign_r, "right signing")?;
            canonical_signing_sum3(&a_l, &a_r, l)
        }
    }
}

/// Checks that `m` is the `k`-sum of `m_l` and `m_r` as witnessed by the
/// given standard representations: the sum must be valid and all three
/// matroids must match exhaustively.
pub fn verify_is_sum_k_of(
    k: u8,
    m: &FiniteMatroid,
    m_l: &FiniteMatroid,
    m_r: &FiniteMatroid,
    witness: &SumWitness,
) -> Result<bool> {
    verify_is_sum_k_of_with(k, m, m_l, m_r, witness, &MatroidComparer::default())
}

pub fn verify_is_sum_k_of_with(
    k: u8,
    m: &FiniteMatroid,
    m_l: &FiniteMatroid,
    m_r: &FiniteMatroid,
    witness: &SumWitness,
    comparer: &MatroidComparer,
) -> Result<bool> {
    if witness.glue.k() != k {
        return Err(Error::Hypothesis(format!(
            "witness describes a {}-sum, not a {k}-sum",
            witness.glue.k()
        )));
    }
    let Some(s) = standard_repr_sum(&witness.left, &witness.right, &witness.glue)?.into_valid() else {
        return Ok(false);
    };
    Ok(comparer.equal(&s.to_matroid(), m)?
        && comparer.equal(&witness.left.to_matroid(), m_l)?
        && comparer.equal(&witness.right.to_matroid(), m_r)?)
}
