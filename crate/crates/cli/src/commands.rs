//! Subcommand implementations. Each returns the text for stdout and the
//! exit code: 0 success, 1 negative verdict or invalid sum; errors (2 and
//! 3) are reported through [`CliError`].

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use tumatroid::matroid::MatroidComparer;
use tumatroid::stdrepr::{is_regular_with, Regularity};
use tumatroid::sums::{standard_repr_sum, sum_signing, verify_is_sum_k_of_with, Glue, Sum3Labels, SumOutcome, SumWitness};
use tumatroid::tumod::{is_signing_of, SigningSearch, TuChecker, TuVerdict};
use tumatroid::{Execution, Label, LabelSet, LabeledMatrix, ScalarKind, StandardRepr};

use crate::doc::{parse_any, parse_matrix, parse_repr, print_matrix, print_repr, Document};
use crate::error::CliError;

/// Size guards and execution strategy shared by all commands.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub tu: TuChecker,
    pub search: SigningSearch,
    pub eq: MatroidComparer,
}

impl Limits {
    pub fn new(
        force: bool,
        execution: Execution,
        tu_max_dim: Option<usize>,
        sign_max_free: Option<usize>,
        eq_max_ground: Option<usize>,
    ) -> Self {
        let mut tu = TuChecker::default().with_execution(execution);
        tu.force = force;
        if let Some(d) = tu_max_dim {
            tu.max_dim = d;
        }
        let mut search = SigningSearch { checker: tu, ..SigningSearch::default() };
        if let Some(f) = sign_max_free {
            search.max_free = f;
        }
        let mut eq = MatroidComparer { execution, ..MatroidComparer::default() };
        if let Some(g) = eq_max_ground {
            eq.max_ground = g;
        }
        if force {
            eq.max_ground = 63;
        }
        Limits { tu, search, eq }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub code: u8,
    pub stdout: String,
}

impl Report {
    fn ok(stdout: impl Into<String>) -> Self {
        Report { code: 0, stdout: stdout.into() }
    }

    fn negative(stdout: impl Into<String>) -> Self {
        Report { code: 1, stdout: stdout.into() }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn require_kind(kind: ScalarKind, want: ScalarKind, what: &str) -> Result<(), CliError> {
    if kind == want {
        Ok(())
    } else {
        Err(CliError::Parse(format!("{what} must be a {want} document, found {kind}")))
    }
}

fn join(labels: impl IntoIterator<Item = Label>) -> String {
    labels.into_iter().map(|l| l.as_str().to_owned()).collect::<Vec<_>>().join(", ")
}

fn show_set(s: &LabelSet) -> String {
    format!("{{{}}}", join(s.iter().cloned()))
}

/// Emits a document either to `out` (with a one-line note) or as stdout.
fn emit(doc: String, out: Option<&Path>, note: &str) -> Result<String, CliError> {
    match out {
        Some(path) => {
            write(path, &doc)?;
            Ok(format!("{note} written to {}\n", path.display()))
        }
        None => Ok(doc),
    }
}

pub fn tu_check(limits: &Limits, input: &Path) -> Result<Report, CliError> {
    let a = parse_matrix(&read(input)?)?;
    require_kind(a.kind(), ScalarKind::Rational, "input")?;
    Ok(match limits.tu.check(a.body())? {
        TuVerdict::TotallyUnimodular => Report::ok("TU\n"),
        TuVerdict::Violated(w) => {
            let rows = w.rows.iter().map(|&i| a.row_labels()[i].clone());
            let cols = w.cols.iter().map(|&j| a.col_labels()[j].clone());
            Report::negative(format!(
                "not TU\nwitness rows: {}\nwitness cols: {}\ndeterminant: {}\n",
                join(rows),
                join(cols),
                w.det
            ))
        }
    })
}

pub fn tu_sign(limits: &Limits, input: &Path, out: Option<&Path>) -> Result<Report, CliError> {
    let u = parse_matrix(&read(input)?)?;
    require_kind(u.kind(), ScalarKind::Gf2, "input")?;
    let Some(signing) = limits.search.find(u.body())? else {
        return Ok(Report::negative("no TU signing\n"));
    };
    let checker = TuChecker { force: true, ..limits.tu };
    if !checker.is_tu_signing_of(&signing, u.body())? {
        return Ok(Report::negative("signing failed verification\n"));
    }
    let doc = print_matrix(&u.map_body(signing)?);
    Ok(Report::ok(emit(doc, out, "TU signing")?))
}

/// Overlap labels given on the command line.
#[derive(Debug, Clone, Default)]
pub struct GlueArgs {
    pub x: Option<String>,
    pub y: Option<String>,
    pub x0: Option<String>,
    pub x1: Option<String>,
    pub x2: Option<String>,
    pub y0: Option<String>,
    pub y1: Option<String>,
    pub y2: Option<String>,
}

impl GlueArgs {
    pub fn glue(&self, k: u8) -> Result<Glue, CliError> {
        let need = |v: &Option<String>, flag: &str| -> Result<Label, CliError> {
            let s = v.as_deref().ok_or_else(|| CliError::Usage(format!("--k {k} needs {flag}")))?;
            Ok(Label::new(s)?)
        };
        match k {
            1 => Ok(Glue::One),
            2 => Ok(Glue::Two { x: need(&self.x, "--x")?, y: need(&self.y, "--y")? }),
            3 => Ok(Glue::Three(Sum3Labels {
                x0: need(&self.x0, "--x0")?,
                x1: need(&self.x1, "--x1")?,
                x2: need(&self.x2, "--x2")?,
                y0: need(&self.y0, "--y0")?,
                y1: need(&self.y1, "--y1")?,
                y2: need(&self.y2, "--y2")?,
            })),
            _ => Err(CliError::Usage(format!("--k must be 1, 2 or 3, got {k}"))),
        }
    }
}

fn read_summand(path: &Path, side: &str) -> Result<StandardRepr, CliError> {
    let s = parse_repr(&read(path)?)?;
    require_kind(s.kind(), ScalarKind::Gf2, &format!("{side} summand"))?;
    Ok(s)
}

fn invalid_line(outcome: &SumOutcome) -> Option<String> {
    match outcome {
        SumOutcome::Valid(_) => None,
        SumOutcome::Invalid { reason, detail } => Some(format!("invalid: {reason} ({detail})\n")),
    }
}

pub fn sum(
    k: u8,
    left: &Path,
    right: &Path,
    glue: &GlueArgs,
    out: Option<&Path>,
) -> Result<Report, CliError> {
    let glue = glue.glue(k)?;
    let (s_l, s_r) = (read_summand(left, "left")?, read_summand(right, "right")?);
    let outcome = standard_repr_sum(&s_l, &s_r, &glue)?;
    if let Some(line) = invalid_line(&outcome) {
        return Ok(Report::negative(line));
    }
    let s = outcome.into_valid().expect("valid outcome");
    Ok(Report::ok(emit(print_repr(&s), out, &format!("{k}-sum"))?))
}

pub fn regular_check(limits: &Limits, input: &Path, witness: Option<&Path>) -> Result<Report, CliError> {
    let s = read_summand(input, "input")?;
    Ok(match is_regular_with(&s, &limits.search)? {
        Regularity::Regular(a) => {
            let mut text = String::from("regular\n");
            if let Some(path) = witness {
                text.push_str(&emit(print_matrix(&s.b().map_body(a)?), Some(path), "TU signing")?);
            }
            Report::ok(text)
        }
        Regularity::NotRegular => Report::negative("not regular\n"),
    })
}

fn matroid_of(doc: Document) -> tumatroid::FiniteMatroid {
    match doc {
        Document::Matrix(a) => tumatroid::matroid::to_matroid(&a),
        Document::Repr(s) => s.to_matroid(),
    }
}

pub fn matroid_info(input: &Path, max_bases: usize) -> Result<Report, CliError> {
    let m = matroid_of(parse_any(&read(input)?)?);
    let bases = m.bases();
    let mut text = format!("elements: {}\nrank: {}\nbases: {}\n", m.len(), m.rank(), bases.len());
    if bases.len() <= max_bases {
        for b in &bases {
            let _ = writeln!(text, "  {}", show_set(b));
        }
    }
    Ok(Report::ok(text))
}

pub fn matroid_eq(limits: &Limits, a: &Path, b: &Path) -> Result<Report, CliError> {
    let m1 = matroid_of(parse_any(&read(a)?)?);
    let m2 = matroid_of(parse_any(&read(b)?)?);
    if m1.ground_set() != m2.ground_set() {
        let diff: LabelSet = m1.ground_set().symmetric_difference(&m2.ground_set()).cloned().collect();
        return Ok(Report::negative(format!("different: ground sets differ in {}\n", show_set(&diff))));
    }
    Ok(match limits.eq.first_difference(&m1, &m2)? {
        None => Report::ok("equal\n"),
        Some(s) => Report::negative(format!("different: {} is independent in exactly one\n", show_set(&s))),
    })
}

pub fn verify_composition(
    limits: &Limits,
    k: u8,
    left: &Path,
    right: &Path,
    glue: &GlueArgs,
    out_dir: Option<&Path>,
) -> Result<Report, CliError> {
    let glue = glue.glue(k)?;
    let (s_l, s_r) = (read_summand(left, "left")?, read_summand(right, "right")?);
    let mut text = String::new();
    let mut signings = Vec::new();
    for (side, s) in [("left", &s_l), ("right", &s_r)] {
        match is_regular_with(s, &limits.search)? {
            Regularity::Regular(a) => {
                let _ = writeln!(text, "{side} summand: regular");
                signings.push(a);
            }
            Regularity::NotRegular => {
                let _ = writeln!(text, "{side} summand not regular");
                return Ok(Report::negative(text));
            }
        }
    }
    let outcome = standard_repr_sum(&s_l, &s_r, &glue)?;
    if let Some(line) = invalid_line(&outcome) {
        text.push_str(&line);
        return Ok(Report::negative(text));
    }
    let s = outcome.into_valid().expect("valid outcome");
    let _ = writeln!(text, "sum: valid, {} x {}", s.x().len(), s.y().len());

    let signed = sum_signing(&s_l, &signings[0], &s_r, &signings[1], &glue, &limits.tu)?;
    let tu = limits.tu.is_tu(signed.body())?;
    let signs = is_signing_of(signed.body(), s.b().body())?;
    let witness = SumWitness { left: s_l.clone(), right: s_r.clone(), glue };
    let matroids = verify_is_sum_k_of_with(k, &s.to_matroid(), &s_l.to_matroid(), &s_r.to_matroid(), &witness, &limits.eq)?;
    let _ = writeln!(text, "witness signing TU: {}", yes(tu));
    let _ = writeln!(text, "witness signs the sum: {}", yes(signs));
    let _ = writeln!(text, "matroid sum check: {}", yes(matroids));

    if let Some(dir) = out_dir {
        write_artifacts(dir, &s, &s_l, &signings[0], &s_r, &signings[1], &signed)?;
        let _ = writeln!(text, "artifacts written to {}", dir.display());
    }
    if tu && signs && matroids {
        text.push_str("composition verified\n");
        Ok(Report::ok(text))
    } else {
        text.push_str("composition failed: the constructed signing does not certify the sum\n");
        Ok(Report::negative(text))
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_artifacts(
    dir: &Path,
    s: &StandardRepr,
    s_l: &StandardRepr,
    a_l: &tumatroid::ExactMatrix,
    s_r: &StandardRepr,
    a_r: &tumatroid::ExactMatrix,
    signed: &LabeledMatrix,
) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.display().to_string(),
        source,
    })?;
    let file = |name: &str| -> PathBuf { dir.join(name) };
    write(&file("sum.json"), &print_repr(s))?;
    write(&file("left_signing.json"), &print_matrix(&s_l.b().map_body(a_l.clone())?))?;
    write(&file("right_signing.json"), &print_matrix(&s_r.b().map_body(a_r.clone())?))?;
    write(&file("sum_signing.json"), &print_matrix(signed))
}
