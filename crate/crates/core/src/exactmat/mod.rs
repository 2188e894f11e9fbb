//! Exact dense matrices over GF(2) and the rationals.
//!
//! A matrix never mixes scalar kinds. Empty matrices (zero rows or zero
//! columns) are legal everywhere and the 0x0 determinant is 1.

pub(crate) mod elim;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScalarKind {
    Gf2,
    Rational,
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarKind::Gf2 => "gf2",
            ScalarKind::Rational => "rational",
        })
    }
}

impl FromStr for ScalarKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gf2" => Ok(ScalarKind::Gf2),
            "rational" => Ok(ScalarKind::Rational),
            other => Err(Error::InvalidEntry(format!("unknown field {other:?}"))),
        }
    }
}

/// A single matrix entry. Rationals are always kept in reduced form with a
/// positive denominator (guaranteed by [`BigRational`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Gf2(bool),
    Rational(BigRational),
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Gf2(_) => ScalarKind::Gf2,
            Scalar::Rational(_) => ScalarKind::Rational,
        }
    }

    pub fn zero(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Gf2 => Scalar::Gf2(false),
            ScalarKind::Rational => Scalar::Rational(BigRational::zero()),
        }
    }

    pub fn one(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Gf2 => Scalar::Gf2(true),
            ScalarKind::Rational => Scalar::Rational(BigRational::one()),
        }
    }

    pub fn int(v: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(v.into()))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Gf2(b) => !b,
            Scalar::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Gf2(b) => *b,
            Scalar::Rational(q) => q.is_one(),
        }
    }

    /// The integer value when this is an integral rational or a GF(2) bit.
    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        match self {
            Scalar::Gf2(b) => Some(*b as i64),
            Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Rational(_) => None,
        }
    }

    /// Parses `"0"`/`"1"` for GF(2), or an integer or `"p/q"` for rationals.
    pub fn parse(kind: ScalarKind, s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidEntry(format!("{s:?} is not a valid {kind} entry"));
        match kind {
            ScalarKind::Gf2 => match s {
                "0" => Ok(Scalar::Gf2(false)),
                "1" => Ok(Scalar::Gf2(true)),
                _ => Err(bad()),
            },
            ScalarKind::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Gf2(b) => write!(f, "{}", *b as u8),
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Entries {
    Gf2(Vec<bool>),
    Rational(Vec<BigRational>),
}

/// Dense row-major matrix whose entries all share one [`ScalarKind`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Entries,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.kind())?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

impl ExactMatrix {
    pub fn zeros(kind: ScalarKind, rows: usize, cols: usize) -> Self {
        let entries = match kind {
            ScalarKind::Gf2 => Entries::Gf2(vec![false; rows * cols]),
            ScalarKind::Rational => Entries::Rational(vec![BigRational::zero(); rows * cols]),
        };
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(kind: ScalarKind, n: usize) -> Self {
        let mut m = Self::zeros(kind, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(kind));
        }
        m
    }

    /// Rational matrix from integer rows.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::dim("ragged rows"));
            }
            data.extend(r.iter().map(|&v| BigRational::from_integer(v.into())));
        }
        Ok(Self::from_rationals(rows.len(), cols, data))
    }

    /// GF(2) matrix from rows of 0/1 values.
    pub fn from_gf2_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::dim("ragged rows"));
            }
            for &v in r {
                match v {
                    0 => data.push(false),
                    1 => data.push(true),
                    other => return Err(Error::InvalidEntry(format!("{other} is not in GF(2)"))),
                }
            }
        }
        Ok(Self::from_bits(rows.len(), cols, data))
    }

    pub fn from_scalars(
        kind: ScalarKind,
        rows: usize,
        cols: usize,
        scalars: Vec<Scalar>,
    ) -> Result<Self> {
        if scalars.len() != rows * cols {
            return Err(Error::dim(format!(
                "{} entries for a {rows}x{cols} matrix",
                scalars.len()
            )));
        }
        let mut m = Self::zeros(kind, rows, cols);
        for (k, s) in scalars.into_iter().enumerate() {
            if s.kind() != kind {
                return Err(Error::KindMismatch {
                    expected: kind,
                    found: s.kind(),
                });
            }
            m.set(k / cols.max(1), k % cols.max(1), s);
        }
        Ok(m)
    }

    pub(crate) fn from_rationals(rows: usize, cols: usize, data: Vec<BigRational>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        ExactMatrix {
            rows,
            cols,
            entries: Entries::Rational(data),
        }
    }

    pub(crate) fn from_bits(rows: usize, cols: usize, data: Vec<bool>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        ExactMatrix {
            rows,
            cols,
            entries: Entries::Gf2(data),
        }
    }

    pub(crate) fn from_fn(
        kind: ScalarKind,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Self::zeros(kind, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn kind(&self) -> ScalarKind {
        match self.entries {
            Entries::Gf2(_) => ScalarKind::Gf2,
            Entries::Rational(_) => ScalarKind::Rational,
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of range");
        let k = i * self.cols + j;
        match &self.entries {
            Entries::Gf2(d) => Scalar::Gf2(d[k]),
            Entries::Rational(d) => Scalar::Rational(d[k].clone()),
        }
    }

    /// Panics if `s` has a different kind; internal builders only.
    pub(crate) fn set(&mut self, i: usize, j: usize, s: Scalar) {
        let k = i * self.cols + j;
        match (&mut self.entries, s) {
            (Entries::Gf2(d), Scalar::Gf2(b)) => d[k] = b,
            (Entries::Rational(d), Scalar::Rational(q)) => d[k] = q,
            _ => panic!("scalar kind mismatch in set"),
        }
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        let k = i * self.cols + j;
        match &self.entries {
            Entries::Gf2(d) => !d[k],
            Entries::Rational(d) => d[k].is_zero(),
        }
    }

    pub fn is_one_at(&self, i: usize, j: usize) -> bool {
        let k = i * self.cols + j;
        match &self.entries {
            Entries::Gf2(d) => d[k],
            Entries::Rational(d) => d[k].is_one(),
        }
    }

    /// Row-major rational entries, if this is a rational matrix.
    pub fn rationals(&self) -> Option<&[BigRational]> {
        match &self.entries {
            Entries::Rational(d) => Some(d),
            Entries::Gf2(_) => None,
        }
    }

    /// Row-major GF(2) entries, if this is a GF(2) matrix.
    pub fn bits(&self) -> Option<&[bool]> {
        match &self.entries {
            Entries::Gf2(d) => Some(d),
            Entries::Rational(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| self.is_zero_at(i, j)))
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        (0..self.cols).all(|j| self.is_zero_at(i, j))
    }

    pub fn col_is_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.is_zero_at(i, j))
    }

    /// 0/1 pattern of the nonzero entries, as a GF(2) matrix.
    pub fn support(&self) -> ExactMatrix {
        let bits = (0..self.rows * self.cols)
            .map(|k| !self.is_zero_at(k / self.cols, k % self.cols))
            .collect();
        Self::from_bits(self.rows, self.cols, bits)
    }

    /// Reads GF(2) entries as the rationals 0 and 1; rationals pass through.
    pub fn to_rational(&self) -> ExactMatrix {
        match &self.entries {
            Entries::Rational(_) => self.clone(),
            Entries::Gf2(d) => Self::from_rationals(
                self.rows,
                self.cols,
                d.iter().map(|&b| BigRational::from_integer((b as i64).into())).collect(),
            ),
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        Self::from_fn(self.kind(), self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub(crate) fn same_kind(&self, other: &ExactMatrix) -> Result<()> {
        if self.kind() != other.kind() {
            return Err(Error::KindMismatch {
                expected: self.kind(),
                found: other.kind(),
            });
        }
        Ok(())
    }

    pub(crate) fn expect_kind(&self, kind: ScalarKind) -> Result<()> {
        if self.kind() != kind {
            return Err(Error::KindMismatch {
                expected: kind,
                found: self.kind(),
            });
        }
        Ok(())
    }

    /// `result[i][j] = self[f[i]][g[j]]`; indices may repeat or reorder.
    pub fn submatrix(&self, f: &[usize], g: &[usize]) -> Result<ExactMatrix> {
        for &i in f {
            if i >= self.rows {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    bound: self.rows,
                });
            }
        }
        for &j in g {
            if j >= self.cols {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    bound: self.cols,
                });
            }
        }
        Ok(Self::from_fn(self.kind(), f.len(), g.len(), |i, j| {
            self.get(f[i], g[j])
        }))
    }

    /// Contiguous block `rows x cols`.
    pub fn block(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> Result<ExactMatrix> {
        let f: Vec<usize> = rows.collect();
        let g: Vec<usize> = cols.collect();
        self.submatrix(&f, &g)
    }

    /// 2x2 block composition `[[a11, a12], [a21, a22]]`.
    pub fn from_blocks(
        a11: &ExactMatrix,
        a12: &ExactMatrix,
        a21: &ExactMatrix,
        a22: &ExactMatrix,
    ) -> Result<ExactMatrix> {
        a11.same_kind(a12)?;
        a11.same_kind(a21)?;
        a11.same_kind(a22)?;
        if a11.rows != a12.rows || a21.rows != a22.rows {
            return Err(Error::dim("blocks in one block-row differ in row count"));
        }
        if a11.cols != a21.cols || a12.cols != a22.cols {
            return Err(Error::dim("blocks in one block-column differ in column count"));
        }
        let (r1, c1) = (a11.rows, a11.cols);
        Ok(Self::from_fn(
            a11.kind(),
            r1 + a21.rows,
            c1 + a12.cols,
            |i, j| match (i < r1, j < c1) {
                (true, true) => a11.get(i, j),
                (true, false) => a12.get(i, j - c1),
                (false, true) => a21.get(i - r1, j),
                (false, false) => a22.get(i - r1, j - c1),
            },
        ))
    }

    /// Vertical stacking.
    pub fn from_rows(top: &ExactMatrix, bottom: &ExactMatrix) -> Result<ExactMatrix> {
        top.same_kind(bottom)?;
        if top.cols != bottom.cols {
            return Err(Error::dim("stacked blocks differ in column count"));
        }
        let r1 = top.rows;
        Ok(Self::from_fn(top.kind(), r1 + bottom.rows, top.cols, |i, j| {
            if i < r1 {
                top.get(i, j)
            } else {
                bottom.get(i - r1, j)
            }
        }))
    }

    /// Horizontal stacking.
    pub fn from_cols(left: &ExactMatrix, right: &ExactMatrix) -> Result<ExactMatrix> {
        left.same_kind(right)?;
        if left.rows != right.rows {
            return Err(Error::dim("side-by-side blocks differ in row count"));
        }
        let c1 = left.cols;
        Ok(Self::from_fn(left.kind(), left.rows, c1 + right.cols, |i, j| {
            if j < c1 {
                left.get(i, j)
            } else {
                right.get(i, j - c1)
            }
        }))
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.same_kind(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let out = match (&self.entries, &rhs.entries) {
            (Entries::Gf2(a), Entries::Gf2(b)) => {
                let mut c = vec![false; self.rows * rhs.cols];
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        if a[i * self.cols + k] {
                            for j in 0..rhs.cols {
                                c[i * rhs.cols + j] ^= b[k * rhs.cols + j];
                            }
                        }
                    }
                }
                Self::from_bits(self.rows, rhs.cols, c)
            }
            (Entries::Rational(a), Entries::Rational(b)) => {
                let mut c = vec![BigRational::zero(); self.rows * rhs.cols];
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        let aik = &a[i * self.cols + k];
                        if aik.is_zero() {
                            continue;
                        }
                        for j in 0..rhs.cols {
                            c[i * rhs.cols + j] += aik * &b[k * rhs.cols + j];
                        }
                    }
                }
                Self::from_rationals(self.rows, rhs.cols, c)
            }
            _ => unreachable!(),
        };
        Ok(out)
    }

    /// Exact determinant; Bareiss over integers for rationals, Gaussian
    /// elimination for GF(2).
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        Ok(match &self.entries {
            Entries::Gf2(_) => Scalar::Gf2(self.rank() == n),
            Entries::Rational(d) => {
                let (ints, factors) = elim::integerize_rows(d, n, n);
                let det = match elim::to_i128(&ints)
                    .and_then(|mut small| elim::det_i128(&mut small, n))
                {
                    Some(v) => BigInt::from(v),
                    None => elim::bareiss_det_big(&mut ints.clone(), n),
                };
                let scale = factors.iter().fold(BigInt::one(), |acc, f| acc * f);
                Scalar::Rational(BigRational::new(det, scale))
            }
        })
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match &self.entries {
            Entries::Gf2(d) => {
                let rows: Vec<Vec<u64>> = (0..self.rows)
                    .map(|i| elim::pack_bits(d[i * self.cols..(i + 1) * self.cols].iter().copied()))
                    .collect();
                elim::gf2_rank(rows.iter().map(|r| r.as_slice()))
            }
            Entries::Rational(d) => {
                let (ints, _) = elim::integerize_rows(d, self.rows, self.cols);
                let rows: Vec<&[BigInt]> = ints.chunks(self.cols).collect();
                elim::int_rank(&rows, self.cols)
            }
        }
    }

    /// Gaussian pivot on `(i, j)`: row `i` is divided by the pivot and the
    /// pivot column is cleared in every other row, so column `j` becomes the
    /// `i`-th unit column. Row and column positions are preserved.
    pub fn pivot(&self, i: usize, j: usize) -> Result<ExactMatrix> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.rows,
            });
        }
        if j >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.cols,
            });
        }
        if self.is_zero_at(i, j) {
            return Err(Error::ZeroPivot { row: i, col: j });
        }
        let (m, n) = (self.rows, self.cols);
        Ok(match &self.entries {
            Entries::Gf2(d) => {
                let mut out = d.clone();
                for k in (0..m).filter(|&k| k != i && d[k * n + j]) {
                    for c in 0..n {
                        out[k * n + c] ^= d[i * n + c];
                    }
                }
                Self::from_bits(m, n, out)
            }
            Entries::Rational(d) => {
                let p = &d[i * n + j];
                let pivot_row: Vec<BigRational> =
                    d[i * n..(i + 1) * n].iter().map(|v| v / p).collect();
                let mut out = d.clone();
                out[i * n..(i + 1) * n].clone_from_slice(&pivot_row);
                for k in (0..m).filter(|&k| k != i) {
                    let factor = d[k * n + j].clone();
                    if factor.is_zero() {
                        continue;
                    }
                    for c in 0..n {
                        out[k * n + c] = &d[k * n + c] - &factor * &pivot_row[c];
                    }
                }
                Self::from_rationals(m, n, out)
            }
        })
    }

    /// Inverse by Gauss-Jordan pivoting on `[self | I]`.
    pub fn inverse(&self) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::from_cols(self, &Self::identity(self.kind(), n))?;
        for c in 0..n {
            let p = (c..n).find(|&r| !aug.is_zero_at(r, c)).ok_or(Error::Singular)?;
            if p != c {
                let mut order: Vec<usize> = (0..n).collect();
                order.swap(p, c);
                let all: Vec<usize> = (0..2 * n).collect();
                aug = aug.submatrix(&order, &all)?;
            }
            aug = aug.pivot(c, c)?;
        }
        aug.block(0..n, n..2 * n)
    }

    /// Entrywise negation where `neg(i, j)` holds (rationals only).
    pub(crate) fn negate_where(&self, neg: impl Fn(usize, usize) -> bool) -> ExactMatrix {
        match &self.entries {
            Entries::Gf2(_) => self.clone(),
            Entries::Rational(d) => {
                let n = self.cols;
                let data = d
                    .iter()
                    .enumerate()
                    .map(|(k, v)| if neg(k / n, k % n) { -v } else { v.clone() })
                    .collect();
                Self::from_rationals(self.rows, self.cols, data)
            }
        }
    }

    /// True when every entry is an integer in {-1, 0, 1}.
    pub fn entries_in_unit_range(&self) -> bool {
        match &self.entries {
            Entries::Gf2(_) => true,
            Entries::Rational(d) => d.iter().all(elim::abs_le_one),
        }
    }

    /// Integer entries as `i64`, if every entry is an integer that fits.
    pub(crate) fn to_i64_entries(&self) -> Option<Vec<i64>> {
        match &self.entries {
            Entries::Gf2(d) => Some(d.iter().map(|&b| b as i64).collect()),
            Entries::Rational(d) => d
                .iter()
                .map(|q| Scalar::Rational(q.clone()).to_i64())
                .collect(),
        }
    }

    /// Absolute value of each rational entry.
    pub fn abs(&self) -> ExactMatrix {
        match &self.entries {
            Entries::Gf2(_) => self.clone(),
            Entries::Rational(d) => {
                Self::from_rationals(self.rows, self.cols, d.iter().map(|v| v.abs()).collect())
            }
        }
    }
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
    fn from_blocks_examples() {
        let one = b(&[&[1]]);
        let zero = b(&[&[0]]);
        assert_eq!(
            ExactMatrix::from_blocks(&one, &zero, &zero, &one).unwrap(),
            ExactMatrix::identity(ScalarKind::Gf2, 2)
        );
        let z = |r, c| ExactMatrix::zeros(ScalarKind::Rational, r, c);
        assert_eq!(
            ExactMatrix::from_blocks(&z(2, 2), &z(2, 1), &z(1, 2), &z(1, 1)).unwrap(),
            z(3, 3)
        );
        let al = q(&[&[1]]);
        let ar = q(&[&[1, 1]]);
        let got = ExactMatrix::from_blocks(&al, &z(1, 2), &z(1, 1), &ar).unwrap();
        assert_eq!(got, q(&[&[1, 0, 0], &[0, 1, 1]]));
        // entrywise cross-check against the block covering each position
        for i in 0..2 {
            for j in 0..3 {
                let expect = match (i, j) {
                    (0, 0) => al.get(0, 0),
                    (1, j) if j >= 1 => ar.get(0, j - 1),
                    _ => Scalar::int(0),
                };
                assert_eq!(got.get(i, j), expect);
            }
        }
    }

    #[test]
    fn from_blocks_rejects_mismatch() {
        let a = q(&[&[1]]);
        let wide = q(&[&[1, 1]]);
        assert!(matches!(
            ExactMatrix::from_blocks(&a, &a, &wide, &a),
            Err(Error::Dimension(_))
        ));
        let g = b(&[&[1]]);
        assert!(matches!(
            ExactMatrix::from_blocks(&a, &a, &a, &g),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn stacking_examples() {
        assert_eq!(
            ExactMatrix::from_rows(&b(&[&[1, 0]]), &b(&[&[0, 1]])).unwrap(),
            ExactMatrix::identity(ScalarKind::Gf2, 2)
        );
        let i2 = ExactMatrix::identity(ScalarKind::Gf2, 2);
        assert_eq!(
            ExactMatrix::from_cols(&i2, &b(&[&[1], &[1]])).unwrap(),
            b(&[&[1, 0, 1], &[0, 1, 1]])
        );
        let empty = ExactMatrix::zeros(ScalarKind::Gf2, 0, 2);
        assert_eq!(
            ExactMatrix::from_rows(&empty, &b(&[&[1, 1]])).unwrap(),
            b(&[&[1, 1]])
        );
        assert!(ExactMatrix::from_rows(&b(&[&[1]]), &b(&[&[1, 1]])).is_err());
        assert!(ExactMatrix::from_cols(&b(&[&[1]]), &b(&[&[1], &[1]])).is_err());
    }

    #[test]
    fn submatrix_examples() {
        let a = q(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(a.submatrix(&[0], &[2, 2, 0, 0]).unwrap(), q(&[&[3, 3, 1, 1]]));
        assert_eq!(a.submatrix(&[0, 1, 2], &[0, 1, 2]).unwrap(), a);
        let small = q(&[&[1, 2], &[3, 4]]);
        assert_eq!(small.submatrix(&[1, 0], &[1, 0]).unwrap(), q(&[&[4, 3], &[2, 1]]));
        assert!(matches!(
            a.submatrix(&[3], &[0]),
            Err(Error::IndexOutOfRange { index: 3, bound: 3 })
        ));
    }

    #[test]
    fn determinant_examples() {
        for n in 0..5 {
            assert!(ExactMatrix::identity(ScalarKind::Rational, n).determinant().unwrap().is_one());
            assert!(ExactMatrix::identity(ScalarKind::Gf2, n).determinant().unwrap().is_one());
        }
        assert_eq!(q(&[&[1, 2], &[3, 4]]).determinant().unwrap(), Scalar::int(-2));
        assert_eq!(b(&[&[1, 1], &[1, 1]]).determinant().unwrap(), Scalar::Gf2(false));
        assert!(matches!(
            q(&[&[1, 2]]).determinant(),
            Err(Error::NotSquare { rows: 1, cols: 2 })
        ));
        let half = ExactMatrix::from_scalars(
            ScalarKind::Rational,
            2,
            2,
            ["1/2", "1/3", "0", "3"]
                .iter()
                .map(|s| Scalar::parse(ScalarKind::Rational, s).unwrap())
                .collect(),
        )
        .unwrap();
        assert_eq!(half.determinant().unwrap(), Scalar::parse(ScalarKind::Rational, "3/2").unwrap());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::zeros(ScalarKind::Rational, 3, 4).rank(), 0);
        assert_eq!(ExactMatrix::identity(ScalarKind::Gf2, 5).rank(), 5);
        assert_eq!(b(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).rank(), 2);
        // the same pattern has full rank over the rationals
        assert_eq!(q(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).rank(), 3);
        assert_eq!(ExactMatrix::zeros(ScalarKind::Gf2, 0, 3).rank(), 0);
    }

    #[test]
    fn pivot_examples() {
        let i2 = ExactMatrix::identity(ScalarKind::Rational, 2);
        assert_eq!(i2.pivot(0, 0).unwrap(), i2);
        assert_eq!(b(&[&[1, 1], &[1, 0]]).pivot(0, 0).unwrap(), b(&[&[1, 1], &[0, 1]]));
        assert_eq!(q(&[&[-1, 1], &[1, 1]]).pivot(0, 0).unwrap(), q(&[&[1, -1], &[0, 2]]));
        assert!(matches!(
            q(&[&[0, 1], &[1, 1]]).pivot(0, 0),
            Err(Error::ZeroPivot { row: 0, col: 0 })
        ));
    }

    #[test]
    fn inverse_and_mul() {
        let d0 = b(&[&[1, 1], &[0, 1]]);
        let inv = d0.inverse().unwrap();
        assert_eq!(inv, d0);
        assert_eq!(d0.mul(&inv).unwrap(), ExactMatrix::identity(ScalarKind::Gf2, 2));
        let a = q(&[&[0, 2], &[1, 1]]);
        let ai = a.inverse().unwrap();
        assert_eq!(a.mul(&ai).unwrap(), ExactMatrix::identity(ScalarKind::Rational, 2));
        assert!(matches!(b(&[&[1, 1], &[1, 1]]).inverse(), Err(Error::Singular)));
    }

    #[test]
    fn scalar_parse_and_display() {
        let k = ScalarKind::Rational;
        assert_eq!(Scalar::parse(k, "6/4").unwrap().to_string(), "3/2");
        assert_eq!(Scalar::parse(k, "-4/2").unwrap().to_string(), "-2");
        assert_eq!(Scalar::parse(k, "3/-6").unwrap().to_string(), "-1/2");
        assert!(Scalar::parse(k, "1/0").is_err());
        assert!(Scalar::parse(k, "x").is_err());
        assert!(Scalar::parse(ScalarKind::Gf2, "2").is_err());
        assert_eq!(Scalar::parse(ScalarKind::Gf2, "1").unwrap(), Scalar::Gf2(true));
    }
}
