//! CSV, JSON, Markdown and b-file encodings.
//!
//! Integers are written in plain decimal with no separators and may exceed
//! 64 bits; JSON carries them as numbers of arbitrary length. JSON objects
//! use the CSV header names as keys, in the same order.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};
use crate::families::{FamilyId, FamilyRow};
use crate::identities::{AlphaRoot, Branch, CubeSumRecord};
use crate::oracle::RepresentationSet;

pub const RECORD_COLUMNS: [&str; 7] = ["n", "a", "b", "root", "N", "x", "y"];
pub const FAMILY_COLUMNS: [&str; 7] = ["family", "i", "n", "x", "y", "eta", "N"];
pub const REPRESENTATION_COLUMNS: [&str; 2] = ["x", "y"];
pub const ALPHA_COLUMNS: [&str; 3] = ["alpha", "root", "n"];
pub const MULTI_COLUMNS: [&str; 4] = ["n", "N", "x", "y"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Markdown,
    Bfile,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            "bfile" => Ok(OutputFormat::Bfile),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Int(BigInt),
    Text(String),
    Null,
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Null => String::new(),
        }
    }

    fn json(&self) -> Result<Value> {
        Ok(match self {
            Cell::Int(v) => Value::Number(
                Number::from_str(&v.to_string()).map_err(|e| Error::Parse(e.to_string()))?,
            ),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Null => Value::Null,
        })
    }
}

impl From<&BigInt> for Cell {
    fn from(v: &BigInt) -> Self {
        Cell::Int(v.clone())
    }
}

fn root_cell(root: Option<Branch>) -> Cell {
    match root {
        Some(b) => Cell::Text(b.symbol().to_string()),
        None => Cell::Null,
    }
}

/// A rectangular table of named columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let io_err = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(&self.columns).map_err(io_err)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::text)).map_err(io_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        let mut items = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut obj = Map::new();
            for (name, cell) in self.columns.iter().zip(row) {
                obj.insert(name.clone(), cell.json()?);
            }
            items.push(Value::Object(obj));
        }
        let mut out = serde_json::to_string_pretty(&Value::Array(items))
            .map_err(|e| Error::Parse(e.to_string()))?;
        out.push('\n');
        Ok(out)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        markdown_line(&mut out, self.columns.iter().cloned());
        markdown_line(&mut out, self.columns.iter().map(|_| "---".to_string()));
        for row in &self.rows {
            markdown_line(&mut out, row.iter().map(Cell::text));
        }
        out
    }

    /// `<index> <value>` lines for one integer column, indexed from 1.
    pub fn to_bfile(&self, column: &str) -> Result<String> {
        let idx = self
            .column_index(column)
            .ok_or_else(|| Error::invalid(format!("no column named {column:?}")))?;
        let mut out = String::new();
        for (k, row) in self.rows.iter().enumerate() {
            match &row[idx] {
                Cell::Int(v) => writeln!(out, "{} {}", k + 1, v).unwrap(),
                _ => {
                    return Err(Error::invalid(format!(
                        "column {column:?} is not an integer column"
                    )))
                }
            }
        }
        Ok(out)
    }

    /// Encodes with the generic layout of `format`; `column` selects the b-file column.
    pub fn encode(&self, format: OutputFormat, column: &str) -> Result<String> {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
            OutputFormat::Markdown => Ok(self.to_markdown()),
            OutputFormat::Bfile => self.to_bfile(column),
        }
    }
}

fn markdown_line(out: &mut String, cells: impl Iterator<Item = String>) {
    out.push('|');
    for c in cells {
        out.push(' ');
        out.push_str(&c);
        out.push_str(" |");
    }
    out.push('\n');
}

pub fn records_table(records: &[CubeSumRecord]) -> Table {
    let mut t = Table::new(&RECORD_COLUMNS);
    for r in records {
        t.push(vec![
            (&r.n).into(),
            (&r.a).into(),
            (&r.b).into(),
            root_cell(r.root),
            (&r.sum).into(),
            (&r.x).into(),
            (&r.y).into(),
        ]);
    }
    t
}

pub fn family_table(rows: &[FamilyRow]) -> Table {
    let mut t = Table::new(&FAMILY_COLUMNS);
    for r in rows {
        t.push(vec![
            Cell::Int(r.family.number().into()),
            Cell::Int(r.i.into()),
            (&r.n).into(),
            (&r.x).into(),
            (&r.y).into(),
            (&r.eta).into(),
            (&r.sum).into(),
        ]);
    }
    t
}

pub fn representation_table(set: &RepresentationSet) -> Table {
    let mut t = Table::new(&REPRESENTATION_COLUMNS);
    for r in &set.reps {
        t.push(vec![(&r.x).into(), (&r.y).into()]);
    }
    t
}

pub fn alpha_table(found: &[AlphaRoot]) -> Table {
    let mut t = Table::new(&ALPHA_COLUMNS);
    for f in found {
        t.push(vec![
            Cell::Int(f.alpha.into()),
            root_cell(Some(f.root)),
            (&f.n).into(),
        ]);
    }
    t
}

pub fn multi_table(found: &[(BigInt, RepresentationSet)]) -> Table {
    let mut t = Table::new(&MULTI_COLUMNS);
    for (n, set) in found {
        for r in &set.reps {
            t.push(vec![n.into(), (&set.value).into(), (&r.x).into(), (&r.y).into()]);
        }
    }
    t
}

fn signed_cube(v: &BigInt) -> String {
    if v.sign() == num_bigint::Sign::Minus {
        format!("({v})^3")
    } else {
        format!("{v}^3")
    }
}

/// Records laid out like the published solution table: `a | b | n+ | n- | identity`.
pub fn records_markdown(records: &[CubeSumRecord]) -> String {
    let mut out = String::new();
    markdown_line(
        &mut out,
        ["a", "b", "n+", "n-", "N = n^3+(n+1)^3 = (n+a)^3+(n+b)^3"]
            .iter()
            .map(|s| s.to_string()),
    );
    markdown_line(&mut out, (0..5).map(|_| "---".to_string()));
    for r in records {
        let n = r.n.to_string();
        let (plus, minus) = match r.root {
            Some(Branch::Plus) => (n.as_str(), "--"),
            Some(Branch::Minus) => ("--", n.as_str()),
            None => ("--", "--"),
        };
        let identity = format!(
            "{}={}+{}={}+{}",
            r.sum,
            signed_cube(&r.n),
            signed_cube(&(&r.n + 1)),
            signed_cube(&r.x),
            signed_cube(&r.y)
        );
        markdown_line(
            &mut out,
            [r.a.to_string(), r.b.to_string(), plus.to_string(), minus.to_string(), identity].into_iter(),
        );
    }
    out
}

/// Family rows laid out like the published family table.
///
/// When both families are present for the same indices they are shown side by side.
pub fn families_markdown(rows: &[FamilyRow]) -> String {
    let one: Vec<&FamilyRow> = rows.iter().filter(|r| r.family == FamilyId::One).collect();
    let two: Vec<&FamilyRow> = rows.iter().filter(|r| r.family == FamilyId::Two).collect();
    let paired = !one.is_empty()
        && one.len() == two.len()
        && one.iter().zip(&two).all(|(l, r)| l.i == r.i);
    let mut out = String::new();
    let cells = |r: &FamilyRow| [r.n.to_string(), r.x.to_string(), r.y.to_string(), r.eta.to_string()];
    if paired {
        markdown_line(
            &mut out,
            [
                "i", "n (1)", "n+a (1)", "n+b (1)", "eta (1)", "n (2)", "n+a (2)", "n+b (2)", "eta (2)",
            ]
            .iter()
            .map(|s| s.to_string()),
        );
        markdown_line(&mut out, (0..9).map(|_| "---".to_string()));
        for (l, r) in one.iter().zip(&two) {
            let line = std::iter::once(l.i.to_string()).chain(cells(l)).chain(cells(r));
            markdown_line(&mut out, line);
        }
    } else {
        markdown_line(
            &mut out,
            ["family", "i", "n", "n+a", "n+b", "eta"].iter().map(|s| s.to_string()),
        );
        markdown_line(&mut out, (0..6).map(|_| "---".to_string()));
        for r in rows {
            let line = [r.family.to_string(), r.i.to_string()].into_iter().chain(cells(r));
            markdown_line(&mut out, line);
        }
    }
    out
}

// Decoding.

/// A table of raw string cells read back from CSV or JSON.
struct RawTable {
    columns: Vec<String>,
    rows: Vec<Vec<Option<String>>>,
}

impl RawTable {
    fn from_csv(text: &str) -> Result<Self> {
        let mut rd = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(text.as_bytes());
        let columns = rd
            .headers()
            .map_err(|e| Error::Parse(e.to_string()))?
            .iter()
            .map(|h| h.trim().to_string())
            .collect();
        let mut rows = Vec::new();
        for rec in rd.records() {
            let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
            rows.push(
                rec.iter()
                    .map(|s| {
                        let s = s.trim();
                        (!s.is_empty()).then(|| s.to_string())
                    })
                    .collect(),
            );
        }
        Ok(RawTable { columns, rows })
    }

    fn from_json(text: &str, expected: &[&str]) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse("expected a JSON array of objects".into()))?;
        let mut rows = Vec::with_capacity(items.len());
        for (k, item) in items.iter().enumerate() {
            let obj = item
                .as_object()
                .ok_or_else(|| Error::Parse(format!("entry {} is not an object", k + 1)))?;
            let mut row = Vec::with_capacity(expected.len());
            for name in expected {
                let cell = match obj.get(*name) {
                    None => return Err(Error::Parse(format!("entry {} lacks field {name:?}", k + 1))),
                    Some(Value::Null) => None,
                    Some(Value::Number(num)) => Some(num.to_string()),
                    Some(Value::String(s)) if s.is_empty() => None,
                    Some(Value::String(s)) => Some(s.clone()),
                    Some(other) => {
                        return Err(Error::Parse(format!(
                            "entry {} field {name:?} has unexpected value {other}",
                            k + 1
                        )))
                    }
                };
                row.push(cell);
            }
            rows.push(row);
        }
        Ok(RawTable {
            columns: expected.iter().map(|s| s.to_string()).collect(),
            rows,
        })
    }

    fn expect_columns(&self, expected: &[&str]) -> Result<()> {
        if self.columns.iter().map(String::as_str).ne(expected.iter().copied()) {
            return Err(Error::Parse(format!(
                "unexpected header {:?}, expected {:?}",
                self.columns.join(","),
                expected.join(",")
            )));
        }
        Ok(())
    }
}

fn parse_int(cell: &Option<String>, column: &str, row: usize) -> Result<BigInt> {
    let s = cell
        .as_deref()
        .ok_or_else(|| Error::Parse(format!("row {row}: column {column:?} is empty")))?;
    BigInt::from_str(s).map_err(|_| Error::Parse(format!("row {row}: {column:?} is not an integer: {s:?}")))
}

fn parse_root(cell: &Option<String>) -> Result<Option<Branch>> {
    cell.as_deref().map(Branch::from_str).transpose()
}

fn records_from_raw(raw: RawTable) -> Result<Vec<CubeSumRecord>> {
    raw.expect_columns(&RECORD_COLUMNS)?;
    raw.rows
        .iter()
        .enumerate()
        .map(|(k, row)| {
            if row.len() != RECORD_COLUMNS.len() {
                return Err(Error::Parse(format!("row {}: wrong number of fields", k + 1)));
            }
            let int = |i: usize| parse_int(&row[i], RECORD_COLUMNS[i], k + 1);
            Ok(CubeSumRecord {
                n: int(0)?,
                a: int(1)?,
                b: int(2)?,
                root: parse_root(&row[3])?,
                sum: int(4)?,
                x: int(5)?,
                y: int(6)?,
            })
        })
        .collect()
}

fn family_rows_from_raw(raw: RawTable) -> Result<Vec<FamilyRow>> {
    raw.expect_columns(&FAMILY_COLUMNS)?;
    raw.rows
        .iter()
        .enumerate()
        .map(|(k, row)| {
            if row.len() != FAMILY_COLUMNS.len() {
                return Err(Error::Parse(format!("row {}: wrong number of fields", k + 1)));
            }
            let int = |i: usize| parse_int(&row[i], FAMILY_COLUMNS[i], k + 1);
            let family = FamilyId::from_str(row[0].as_deref().unwrap_or(""))?;
            let i = u64::try_from(int(1)?)
                .map_err(|_| Error::Parse(format!("row {}: bad index", k + 1)))?;
            Ok(FamilyRow {
                family,
                i,
                n: int(2)?,
                x: int(3)?,
                y: int(4)?,
                eta: int(5)?,
                sum: int(6)?,
                beta: family.beta(i),
            })
        })
        .collect()
}

pub fn records_from_csv(text: &str) -> Result<Vec<CubeSumRecord>> {
    records_from_raw(RawTable::from_csv(text)?)
}

pub fn records_from_json(text: &str) -> Result<Vec<CubeSumRecord>> {
    records_from_raw(RawTable::from_json(text, &RECORD_COLUMNS)?)
}

pub fn family_rows_from_csv(text: &str) -> Result<Vec<FamilyRow>> {
    family_rows_from_raw(RawTable::from_csv(text)?)
}

pub fn family_rows_from_json(text: &str) -> Result<Vec<FamilyRow>> {
    family_rows_from_raw(RawTable::from_json(text, &FAMILY_COLUMNS)?)
}

/// Rows read by `verify`: either solution records or family rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyInput {
    Records(Vec<CubeSumRecord>),
    Families(Vec<FamilyRow>),
}

/// Decodes `text` as JSON when `is_json`, CSV otherwise, picking the row
/// kind from the header (CSV) or the fields of the first entry (JSON).
pub fn decode_verify_input(text: &str, is_json: bool) -> Result<VerifyInput> {
    let family_like = if is_json {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        v.as_array()
            .and_then(|a| a.first())
            .and_then(Value::as_object)
            .is_some_and(|o| o.contains_key("family"))
    } else {
        text.lines()
            .next()
            .is_some_and(|h| h.trim().starts_with("family"))
    };
    Ok(match (family_like, is_json) {
        (true, true) => VerifyInput::Families(family_rows_from_json(text)?),
        (true, false) => VerifyInput::Families(family_rows_from_csv(text)?),
        (false, true) => VerifyInput::Records(records_from_json(text)?),
        (false, false) => VerifyInput::Records(records_from_csv(text)?),
    })
}
