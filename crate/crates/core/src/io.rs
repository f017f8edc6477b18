//! JSON file formats for algebras, Cayley tables and reports.
//!
//! Rationals are written as `"num/den"` strings (just `"num"` for integers).
//! Saved files are pretty-printed with a trailing newline, so saving a loaded
//! canonical file reproduces it byte for byte.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element, LinearMap};
use crate::constructors::CayleyTable;
use crate::derivation::DerivationKind;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Matrix, Rational};
use crate::verify::{
    AlgebraInfo, CheckId, CheckResult, Status, Totals, VerificationReport, VerifyOptions, Witness,
};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    dim: usize,
    basis: Vec<String>,
    structure: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Triple {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CayleyFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    order: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportFile {
    version: String,
    settings: SettingsFile,
    algebras: Vec<AlgebraInfoFile>,
    results: Vec<ResultFile>,
    totals: TotalsFile,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum CapFile {
    Fixed(usize),
    /// The literal `"dim+1"`.
    Auto(String),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SettingsFile {
    seed: u64,
    degree_cap: usize,
    retries: usize,
    nilpotency_cap: CapFile,
    leibniz_max_n: usize,
    samples: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraInfoFile {
    name: String,
    dim: usize,
    note: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResultFile {
    check: String,
    algebra: String,
    kind: Option<String>,
    status: String,
    witness: Option<WitnessFile>,
    details: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessFile {
    map_index: Option<usize>,
    map: Option<Vec<Vec<String>>>,
    element: Option<Vec<String>>,
    note: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TotalsFile {
    pass: usize,
    fail: usize,
    skipped: usize,
}

const AUTO_CAP: &str = "dim+1";

fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("file structs always serialize");
    out.push('\n');
    out
}

fn field_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn rational_field(text: &str, location: impl Into<String>) -> Result<Rational> {
    parse_rational(text).map_err(|m| field_error(location, m))
}

fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

pub fn algebra_to_json(a: &Algebra) -> String {
    let file = AlgebraFile {
        name: a.name().to_string(),
        dim: a.dim(),
        basis: a.basis_labels().to_vec(),
        structure: a
            .nonzero_triples()
            .into_iter()
            .map(|(i, j, k, c)| Triple {
                i,
                j,
                k,
                c: format_rational(&c),
            })
            .collect(),
        note: a.note().map(str::to_string),
    };
    to_json(&file)
}

/// Parse and validate an algebra file. Repeated `(i, j, k)` entries are
/// rejected; associativity is checked.
pub fn algebra_from_json(text: &str) -> Result<Algebra> {
    let file: AlgebraFile = parse_json(text)?;
    if file.basis.len() != file.dim {
        return Err(field_error(
            "basis",
            format!("{} labels for dim {}", file.basis.len(), file.dim),
        ));
    }
    let mut triples = Vec::with_capacity(file.structure.len());
    let mut seen = std::collections::BTreeSet::new();
    for (idx, t) in file.structure.iter().enumerate() {
        let location = format!("structure[{idx}]");
        if !seen.insert((t.i, t.j, t.k)) {
            return Err(field_error(
                location,
                format!("repeated entry ({}, {}, {})", t.i, t.j, t.k),
            ));
        }
        triples.push((t.i, t.j, t.k, rational_field(&t.c, location)?));
    }
    let algebra = Algebra::from_triples(file.name, file.basis, &triples)?;
    Ok(match file.note {
        Some(note) => algebra.with_note(note),
        None => algebra,
    })
}

pub fn cayley_to_json(t: &CayleyTable) -> String {
    to_json(&CayleyFile {
        name: Some(t.name().to_string()),
        order: t.order(),
        identity: t.identity(),
        table: t.table().to_vec(),
    })
}

/// Parse a Cayley table; `default_name` is used when the file has none.
pub fn cayley_from_json(text: &str, default_name: &str) -> Result<CayleyTable> {
    let file: CayleyFile = parse_json(text)?;
    if file.table.len() != file.order {
        return Err(field_error(
            "table",
            format!("{} rows for order {}", file.table.len(), file.order),
        ));
    }
    CayleyTable::new(
        file.name.unwrap_or_else(|| default_name.to_string()),
        file.table,
        file.identity,
    )
}

fn witness_file(w: &Witness) -> WitnessFile {
    WitnessFile {
        map_index: w.map_index,
        map: w.map.as_ref().map(|m| {
            m.matrix()
                .row_vectors()
                .iter()
                .map(|r| rationals(r))
                .collect()
        }),
        element: w.element.as_ref().map(|e| rationals(e.coords())),
        note: w.note.clone(),
    }
}

pub fn report_to_json(r: &VerificationReport) -> String {
    let o = &r.options;
    let file = ReportFile {
        version: r.version.clone(),
        settings: SettingsFile {
            seed: o.seed,
            degree_cap: o.degree_cap,
            retries: o.retries,
            nilpotency_cap: match o.nilpotency_cap {
                Some(c) => CapFile::Fixed(c),
                None => CapFile::Auto(AUTO_CAP.into()),
            },
            leibniz_max_n: o.leibniz_max_n,
            samples: o.samples,
        },
        algebras: r
            .algebras
            .iter()
            .map(|a| AlgebraInfoFile {
                name: a.name.clone(),
                dim: a.dim,
                note: a.note.clone(),
            })
            .collect(),
        results: r
            .results
            .iter()
            .map(|c| ResultFile {
                check: c.check.as_str().to_string(),
                algebra: c.algebra.clone(),
                kind: c.kind.map(|k| k.to_string()),
                status: c.status.label().to_string(),
                witness: c.witness.as_ref().map(witness_file),
                details: c.details.clone(),
            })
            .collect(),
        totals: TotalsFile {
            pass: r.totals.pass,
            fail: r.totals.fail,
            skipped: r.totals.skipped,
        },
    };
    to_json(&file)
}

fn parse_witness(w: WitnessFile, location: &str) -> Result<Witness> {
    let map = match w.map {
        Some(rows) => {
            let n = rows.len();
            let mut entries = Vec::with_capacity(n * n);
            for row in &rows {
                if row.len() != n {
                    return Err(field_error(location, "witness map is not square"));
                }
                for x in row {
                    entries.push(rational_field(x, location)?);
                }
            }
            Some(LinearMap::new(Matrix::from_entries(n, n, entries))?)
        }
        None => None,
    };
    let element = match w.element {
        Some(xs) => Some(Element::new(
            xs.iter()
                .map(|x| rational_field(x, location))
                .collect::<Result<_>>()?,
        )),
        None => None,
    };
    Ok(Witness {
        map_index: w.map_index,
        map,
        element,
        note: w.note,
    })
}

/// Parse a report; the stored totals must match the results.
pub fn report_from_json(text: &str) -> Result<VerificationReport> {
    let file: ReportFile = parse_json(text)?;
    let s = file.settings;
    let nilpotency_cap = match s.nilpotency_cap {
        CapFile::Fixed(c) => Some(c),
        CapFile::Auto(ref t) if t == AUTO_CAP => None,
        CapFile::Auto(t) => {
            return Err(field_error(
                "settings.nilpotency_cap",
                format!("unexpected value {t:?}"),
            ))
        }
    };
    let options = VerifyOptions {
        seed: s.seed,
        degree_cap: s.degree_cap,
        retries: s.retries,
        nilpotency_cap,
        leibniz_max_n: s.leibniz_max_n,
        samples: s.samples,
    };
    let mut results = Vec::with_capacity(file.results.len());
    for (idx, r) in file.results.into_iter().enumerate() {
        let location = format!("results[{idx}]");
        let check: CheckId = r
            .check
            .parse()
            .map_err(|e: Error| field_error(&location, e.to_string()))?;
        let kind = match r.kind {
            Some(k) => Some(
                k.parse::<DerivationKind>()
                    .map_err(|e| field_error(&location, e.to_string()))?,
            ),
            None => None,
        };
        let status = match r.status.as_str() {
            "pass" => Status::Pass,
            "fail" => Status::Fail,
            "skipped" => Status::Skipped(r.details.clone()),
            other => return Err(field_error(location, format!("unknown status {other:?}"))),
        };
        let witness = r.witness.map(|w| parse_witness(w, &location)).transpose()?;
        if status == Status::Fail && witness.is_none() {
            return Err(field_error(
                location,
                "a failing result must carry a witness",
            ));
        }
        results.push(CheckResult {
            check,
            algebra: r.algebra,
            kind,
            status,
            witness,
            details: r.details,
        });
    }
    let algebras = file
        .algebras
        .into_iter()
        .map(|a| AlgebraInfo {
            name: a.name,
            dim: a.dim,
            note: a.note,
        })
        .collect();
    let mut report = VerificationReport::new(options, algebras, results);
    report.version = file.version;
    let stored = Totals {
        pass: file.totals.pass,
        fail: file.totals.fail,
        skipped: file.totals.skipped,
    };
    if stored != report.totals {
        return Err(field_error("totals", "totals disagree with the results"));
    }
    Ok(report)
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_error(path, e))
}

/// Write to a temporary file in the target directory, then rename over
/// `path`.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| io_error(path, e))?;
    tmp.write_all(contents.as_bytes())
        .map_err(|e| io_error(path, e))?;
    tmp.as_file().sync_all().map_err(|e| io_error(path, e))?;
    tmp.persist(path).map_err(|e| io_error(path, e.error))?;
    Ok(())
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "G".into())
}

pub fn load_algebra(path: &Path) -> Result<Algebra> {
    algebra_from_json(&read_file(path)?)
}

pub fn save_algebra(path: &Path, a: &Algebra) -> Result<()> {
    write_atomic(path, &algebra_to_json(a))
}

pub fn load_cayley(path: &Path) -> Result<CayleyTable> {
    cayley_from_json(&read_file(path)?, &file_stem(path))
}

pub fn save_cayley(path: &Path, t: &CayleyTable) -> Result<()> {
    write_atomic(path, &cayley_to_json(t))
}

pub fn load_report(path: &Path) -> Result<VerificationReport> {
    report_from_json(&read_file(path)?)
}

pub fn save_report(path: &Path, r: &VerificationReport) -> Result<()> {
    write_atomic(path, &report_to_json(r))
}
