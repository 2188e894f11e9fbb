//! Opaque element labels and label-indexed matrices.
//!
//! All re-indexing of matrices (block unions, dropped rows and columns) is
//! expressed through label lists: a [`LabeledMatrix`] carries one distinct
//! label per row and per column, and sub-blocks are selected by label.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmat::{ExactMatrix, ScalarKind};

/// Ground-set element. Compares by value; ordering is lexicographic by bytes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Arc<str>);

pub type LabelSet = BTreeSet<Label>;

impl Label {
    pub fn new(s: impl AsRef<str>) -> Result<Self> {
        let s = s.as_ref();
        if s.is_empty() {
            return Err(Error::Labels("labels must be non-empty".into()));
        }
        Ok(Label(Arc::from(s)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(Arc::from(s))
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label(Arc::from(s))
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Convenience for building label lists from string literals.
pub fn labels<S: AsRef<str>>(names: &[S]) -> Vec<Label> {
    names.iter().map(|s| Label::from(s.as_ref())).collect()
}

pub fn label_set<S: AsRef<str>>(names: &[S]) -> LabelSet {
    names.iter().map(|s| Label::from(s.as_ref())).collect()
}

pub(crate) fn check_distinct(side: &str, list: &[Label]) -> Result<BTreeMap<Label, usize>> {
    let mut index = BTreeMap::new();
    for (i, l) in list.iter().enumerate() {
        if l.as_str().is_empty() {
            return Err(Error::Labels(format!("empty {side} label")));
        }
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::Labels(format!("duplicate {side} label {l}")));
        }
    }
    Ok(index)
}

/// An [`ExactMatrix`] with distinct row labels and distinct column labels.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledMatrix {
    rows: Vec<Label>,
    cols: Vec<Label>,
    row_index: BTreeMap<Label, usize>,
    col_index: BTreeMap<Label, usize>,
    body: ExactMatrix,
}

impl fmt::Debug for LabeledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LabeledMatrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("body", &self.body)
            .finish()
    }
}

impl LabeledMatrix {
    pub fn new(rows: Vec<Label>, cols: Vec<Label>, body: ExactMatrix) -> Result<Self> {
        if rows.len() != body.n_rows() || cols.len() != body.n_cols() {
            return Err(Error::dim(format!(
                "{} row labels and {} column labels for a {}x{} matrix",
                rows.len(),
                cols.len(),
                body.n_rows(),
                body.n_cols()
            )));
        }
        let row_index = check_distinct("row", &rows)?;
        let col_index = check_distinct("column", &cols)?;
        Ok(LabeledMatrix {
            rows,
            cols,
            row_index,
            col_index,
            body,
        })
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.cols
    }

    pub fn body(&self) -> &ExactMatrix {
        &self.body
    }

    pub fn into_body(self) -> ExactMatrix {
        self.body
    }

    pub fn kind(&self) -> ScalarKind {
        self.body.kind()
    }

    pub fn row_of(&self, l: &Label) -> Option<usize> {
        self.row_index.get(l).copied()
    }

    pub fn col_of(&self, l: &Label) -> Option<usize> {
        self.col_index.get(l).copied()
    }

    pub fn require_row(&self, l: &Label) -> Result<usize> {
        self.row_of(l).ok_or_else(|| Error::MissingLabel(l.clone()))
    }

    pub fn require_col(&self, l: &Label) -> Result<usize> {
        self.col_of(l).ok_or_else(|| Error::MissingLabel(l.clone()))
    }

    pub fn is_zero_at(&self, row: &Label, col: &Label) -> Result<bool> {
        Ok(self.body.is_zero_at(self.require_row(row)?, self.require_col(col)?))
    }

    pub fn is_one_at(&self, row: &Label, col: &Label) -> Result<bool> {
        Ok(self.body.is_one_at(self.require_row(row)?, self.require_col(col)?))
    }

    /// Selects rows and columns by label, in the given order.
    pub fn select(&self, rows: &[Label], cols: &[Label]) -> Result<LabeledMatrix> {
        let f = rows
            .iter()
            .map(|l| self.require_row(l))
            .collect::<Result<Vec<_>>>()?;
        let g = cols
            .iter()
            .map(|l| self.require_col(l))
            .collect::<Result<Vec<_>>>()?;
        LabeledMatrix::new(rows.to_vec(), cols.to_vec(), self.body.submatrix(&f, &g)?)
    }

    /// Body restricted to the given labels (no labels attached).
    pub fn block(&self, rows: &[Label], cols: &[Label]) -> Result<ExactMatrix> {
        Ok(self.select(rows, cols)?.body)
    }

    pub fn map_body(&self, body: ExactMatrix) -> Result<LabeledMatrix> {
        LabeledMatrix::new(self.rows.clone(), self.cols.clone(), body)
    }
}
