//! JSON documents for labeled matrices and standard representations.
//!
//! Parsing is strict (unknown fields are rejected, grids must match the
//! label lists) and printing is byte-stable: fixed field order, one matrix
//! row per line, entries as canonical strings.

use serde::Deserialize;
use serde_json::Value;
use tumatroid::{ExactMatrix, Label, LabeledMatrix, Scalar, ScalarKind, StandardRepr};

use crate::error::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDocument {
    field: String,
    rows: Vec<String>,
    cols: Vec<String>,
    data: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StandardReprDocument {
    field: String,
    #[serde(rename = "X")]
    x: Vec<String>,
    #[serde(rename = "Y")]
    y: Vec<String>,
    #[serde(rename = "B")]
    b: Vec<Vec<String>>,
}

/// Either kind of document, told apart by its fields.
#[derive(Debug, Clone)]
pub enum Document {
    Matrix(LabeledMatrix),
    Repr(StandardRepr),
}

fn labels(names: Vec<String>) -> Result<Vec<Label>, CliError> {
    names
        .into_iter()
        .map(|s| Label::new(s).map_err(CliError::from))
        .collect()
}

fn body(field: &str, grid: Vec<Vec<String>>, rows: usize, cols: usize) -> Result<ExactMatrix, CliError> {
    let kind: ScalarKind = field
        .parse()
        .map_err(|_| CliError::Parse(format!("unknown field {field:?}, expected \"gf2\" or \"rational\"")))?;
    if grid.len() != rows {
        return Err(CliError::Parse(format!("{} data rows for {rows} row labels", grid.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in grid.into_iter().enumerate() {
        if row.len() != cols {
            return Err(CliError::Parse(format!(
                "data row {i} has {} entries for {cols} column labels",
                row.len()
            )));
        }
        for s in row {
            entries.push(Scalar::parse(kind, &s)?);
        }
    }
    Ok(ExactMatrix::from_scalars(kind, rows, cols, entries)?)
}

fn json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("malformed JSON: {e}")))
}

fn decode<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn parse_matrix(text: &str) -> Result<LabeledMatrix, CliError> {
    let doc: MatrixDocument = decode(json(text)?)?;
    let (rows, cols) = (doc.rows.len(), doc.cols.len());
    let b = body(&doc.field, doc.data, rows, cols)?;
    Ok(LabeledMatrix::new(labels(doc.rows)?, labels(doc.cols)?, b)?)
}

pub fn parse_repr(text: &str) -> Result<StandardRepr, CliError> {
    let doc: StandardReprDocument = decode(json(text)?)?;
    let (rows, cols) = (doc.x.len(), doc.y.len());
    let b = body(&doc.field, doc.b, rows, cols)?;
    Ok(StandardRepr::new(labels(doc.x)?, labels(doc.y)?, b)?)
}

pub fn parse_any(text: &str) -> Result<Document, CliError> {
    let v = json(text)?;
    let has = |k: &str| v.get(k).is_some();
    if has("data") {
        let doc: MatrixDocument = decode(v)?;
        let (rows, cols) = (doc.rows.len(), doc.cols.len());
        let b = body(&doc.field, doc.data, rows, cols)?;
        Ok(Document::Matrix(LabeledMatrix::new(labels(doc.rows)?, labels(doc.cols)?, b)?))
    } else if has("B") {
        Ok(Document::Repr(parse_repr(&v.to_string())?))
    } else {
        Err(CliError::Parse("document has neither \"data\" nor \"B\"".into()))
    }
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn label_list(ls: &[Label]) -> String {
    let items: Vec<String> = ls.iter().map(|l| quoted(l.as_str())).collect();
    format!("[{}]", items.join(", "))
}

fn grid(m: &ExactMatrix) -> String {
    if m.n_rows() == 0 {
        return "[]".into();
    }
    let rows: Vec<String> = (0..m.n_rows())
        .map(|i| {
            let cells: Vec<String> = (0..m.n_cols()).map(|j| quoted(&m.get(i, j).to_string())).collect();
            format!("    [{}]", cells.join(", "))
        })
        .collect();
    format!("[\n{}\n  ]", rows.join(",\n"))
}

pub fn print_matrix(a: &LabeledMatrix) -> String {
    format!(
        "{{\n  \"field\": {},\n  \"rows\": {},\n  \"cols\": {},\n  \"data\": {}\n}}\n",
        quoted(&a.kind().to_string()),
        label_list(a.row_labels()),
        label_list(a.col_labels()),
        grid(a.body())
    )
}

pub fn print_repr(s: &StandardRepr) -> String {
    format!(
        "{{\n  \"field\": {},\n  \"X\": {},\n  \"Y\": {},\n  \"B\": {}\n}}\n",
        quoted(&s.kind().to_string()),
        label_list(s.x()),
        label_list(s.y()),
        grid(s.b().body())
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const REPR: &str = r#"{
  "field": "gf2",
  "X": ["a", "b"],
  "Y": ["c"],
  "B": [
    ["1"],
    ["0"]
  ]
}
"#;

    #[test]
    fn repr_round_trip_is_byte_stable() {
        let s = parse_repr(REPR).unwrap();
        assert_eq!(print_repr(&s), REPR);
    }

    #[test]
    fn rationals_are_canonical() {
        let text = r#"{"field": "rational", "rows": ["r"], "cols": ["a", "b"], "data": [["2/4", "-3"]]}"#;
        let m = parse_matrix(text).unwrap();
        assert!(print_matrix(&m).contains(r#"["1/2", "-3"]"#));
        assert_eq!(parse_matrix(&print_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn rejects_bad_documents() {
        for bad in [
            r#"{"field": "rational", "rows": ["r"], "cols": ["a"], "data": [["1/0"]]}"#,
            r#"{"field": "gf2", "rows": ["r"], "cols": ["a"], "data": [["2"]]}"#,
            r#"{"field": "gf2", "rows": ["r"], "cols": ["a"], "data": []}"#,
            r#"{"field": "gf2", "rows": ["r", "r"], "cols": ["a"], "data": [["1"], ["1"]]}"#,
            r#"{"field": "gf2", "rows": ["r"], "cols": ["a"], "data": [["1"]], "extra": 1}"#,
            r#"{"field": "gf3", "rows": [], "cols": [], "data": []}"#,
            r#"{"field": "gf2", "X": ["a"], "Y": ["a"], "B": [["1"]]}"#,
            "not json",
        ] {
            assert!(parse_any(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn empty_shapes() {
        let text = r#"{"field": "gf2", "X": ["a", "b"], "Y": [], "B": [[], []]}"#;
        let s = parse_repr(text).unwrap();
        assert_eq!(parse_repr(&print_repr(&s)).unwrap(), s);
        let text = r#"{"field": "gf2", "X": [], "Y": ["c"], "B": []}"#;
        let s = parse_repr(text).unwrap();
        assert_eq!(parse_repr(&print_repr(&s)).unwrap(), s);
    }

    proptest::proptest! {
        #[test]
        fn print_parse_round_trip(
            rows in 0usize..4,
            cols in 0usize..4,
            seed in proptest::collection::vec((-6i64..6, 1i64..5), 16),
            gf2_bits in proptest::collection::vec(proptest::bool::ANY, 16),
        ) {
            let x: Vec<Label> = (0..rows).map(|i| Label::from(format!("r\"{i}"))).collect();
            let y: Vec<Label> = (0..cols).map(|j| Label::from(format!("c {j}"))).collect();
            let q: Vec<Scalar> = seed[..rows * cols]
                .iter()
                .map(|(p, d)| Scalar::parse(ScalarKind::Rational, &format!("{p}/{d}")).unwrap())
                .collect();
            let a = LabeledMatrix::new(
                x.clone(),
                y.clone(),
                ExactMatrix::from_scalars(ScalarKind::Rational, rows, cols, q).unwrap(),
            )
            .unwrap();
            let printed = print_matrix(&a);
            let back = parse_matrix(&printed).unwrap();
            proptest::prop_assert_eq!(&back, &a);
            proptest::prop_assert_eq!(print_matrix(&back), printed);

            let bits: Vec<Scalar> = gf2_bits[..rows * cols].iter().map(|&b| Scalar::Gf2(b)).collect();
            let s = StandardRepr::new(x, y, ExactMatrix::from_scalars(ScalarKind::Gf2, rows, cols, bits).unwrap()).unwrap();
            let printed = print_repr(&s);
            proptest::prop_assert_eq!(parse_repr(&printed).unwrap(), s);
        }
    }
}
