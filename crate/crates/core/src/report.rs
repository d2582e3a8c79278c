//! Deterministic CSV/JSON rendering of tabular results.
//!
//! CSV floats carry 6 significant digits; JSON carries the shortest
//! representation that round-trips the `f64`. Column order is fixed by
//! the row type, so identical input always yields identical bytes.

use std::str::FromStr;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Float(f64),
    Bool(bool),
    Missing,
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(i64::from(v))
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Missing, Into::into)
    }
}

/// A row type that can be rendered into a report.
pub trait Tabular {
    fn headers() -> Vec<&'static str>;
    fn cells(&self) -> Vec<Cell>;
}

/// A materialized table: fixed headers and rows of cells.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Self {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn from_rows<T: Tabular>(rows: &[T]) -> Self {
        Self {
            headers: T::headers().into_iter().map(String::from).collect(),
            rows: rows.iter().map(Tabular::cells).collect(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Csv,
    Json,
}

impl ReportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ReportFormat::Csv => "csv",
            ReportFormat::Json => "json",
        }
    }
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Formats a float with `digits` significant digits, `%g` style.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "NaN".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let digits = digits.max(1);
    // Rounding first settles the decimal exponent (e.g. 999999.7 -> 1e6).
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn csv_cell(cell: &Cell) -> String {
    match cell {
        Cell::Text(s) => s.clone(),
        Cell::Int(i) => i.to_string(),
        Cell::Float(f) => format_significant(*f, 6),
        Cell::Bool(b) => b.to_string(),
        Cell::Missing => String::new(),
    }
}

struct JsonCell<'a>(&'a Cell);

impl Serialize for JsonCell<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Cell::Text(t) => s.serialize_str(t),
            Cell::Int(i) => s.serialize_i64(*i),
            Cell::Float(f) if f.is_finite() => s.serialize_f64(*f),
            Cell::Float(_) | Cell::Missing => s.serialize_none(),
            Cell::Bool(b) => s.serialize_bool(*b),
        }
    }
}

struct JsonRow<'a> {
    headers: &'a [String],
    cells: &'a [Cell],
}

impl Serialize for JsonRow<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.headers.len()))?;
        for (h, c) in self.headers.iter().zip(self.cells) {
            map.serialize_entry(h, &JsonCell(c))?;
        }
        map.end()
    }
}

struct JsonTable<'a>(&'a Table);

impl Serialize for JsonTable<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.rows.len()))?;
        for row in &self.0.rows {
            seq.serialize_element(&JsonRow {
                headers: &self.0.headers,
                cells: row,
            })?;
        }
        seq.end()
    }
}

/// Renders a table in the requested format.
pub fn write_table(table: &Table, format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(&table.headers).map_err(|e| Error::Io(e.to_string()))?;
            for row in &table.rows {
                w.write_record(row.iter().map(csv_cell))
                    .map_err(|e| Error::Io(e.to_string()))?;
            }
            w.into_inner().map_err(|e| Error::Io(e.to_string()))
        }
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(&JsonTable(table)).map_err(|e| Error::Io(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
    }
}

struct JsonSections<'a>(&'a [(String, Table)]);

impl Serialize for JsonSections<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (name, table) in self.0 {
            map.serialize_entry(name, &JsonTable(table))?;
        }
        map.end()
    }
}

/// Renders named tables into one document. CSV sections are introduced by
/// a `# name` line and separated by a blank line; JSON becomes an object
/// keyed by section name, in the given order.
pub fn write_sections(sections: &[(String, Table)], format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Csv => {
            let mut out = Vec::new();
            for (i, (name, table)) in sections.iter().enumerate() {
                if i > 0 {
                    out.push(b'\n');
                }
                out.extend_from_slice(format!("# {name}\n").as_bytes());
                out.extend(write_table(table, format)?);
            }
            Ok(out)
        }
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(&JsonSections(sections)).map_err(|e| Error::Io(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
    }
}

/// Renders any slice of [`Tabular`] rows.
pub fn write_report<T: Tabular>(rows: &[T], format: ReportFormat) -> Result<Vec<u8>> {
    write_table(&Table::from_rows(rows), format)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_keep_order() {
        let mut a = Table::new(&["x"]);
        a.push(vec![Cell::Float(1.5)]);
        let b = Table::new(&["y"]);
        let sections = vec![("zeta".to_string(), a), ("alpha".to_string(), b)];
        let csv = String::from_utf8(write_sections(&sections, ReportFormat::Csv).unwrap()).unwrap();
        assert_eq!(csv, "# zeta\nx\n1.5\n\n# alpha\ny\n");
        let json = String::from_utf8(write_sections(&sections, ReportFormat::Json).unwrap()).unwrap();
        assert!(json.find("zeta").unwrap() < json.find("alpha").unwrap());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["zeta"][0]["x"], 1.5);
    }

    struct Pair(&'static str, f64);

    impl Tabular for Pair {
        fn headers() -> Vec<&'static str> {
            vec!["name", "value"]
        }
        fn cells(&self) -> Vec<Cell> {
            vec![self.0.into(), self.1.into()]
        }
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(0.03153671, 6), "0.0315367");
        assert_eq!(format_significant(262.898, 6), "262.898");
        assert_eq!(format_significant(482.7249, 6), "482.725");
        assert_eq!(format_significant(3.815856e8, 6), "3.81586e+08");
        assert_eq!(format_significant(1.0, 6), "1");
        assert_eq!(format_significant(-16.77427, 6), "-16.7743");
        assert_eq!(format_significant(999999.7, 6), "1e+06");
        assert_eq!(format_significant(1.5e-5, 6), "1.5e-05");
        assert_eq!(format_significant(0.0, 6), "0");
    }

    #[test]
    fn single_row_csv() {
        let out = write_report(&[Pair("He-4", 28.2937)], ReportFormat::Csv).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "name,value\nHe-4,28.2937\n");
    }

    #[test]
    fn empty_csv_is_header_only() {
        let out = write_report::<Pair>(&[], ReportFormat::Csv).unwrap();
        assert_eq!(out, b"name,value\n");
    }

    #[test]
    fn json_keeps_full_precision_and_key_order() {
        let out = write_report(&[Pair("x", 0.1 + 0.2)], ReportFormat::Json).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("0.30000000000000004"), "{text}");
        assert!(text.find("\"name\"").unwrap() < text.find("\"value\"").unwrap());
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed[0]["name"], "x");
    }

    #[test]
    fn unsupported_format_token() {
        assert_eq!(
            "xml".parse::<ReportFormat>().unwrap_err(),
            Error::UnsupportedFormat("xml".into())
        );
    }

    #[test]
    fn missing_cells_render_empty_and_null() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec![Cell::Missing, Cell::Float(f64::NAN)]);
        assert_eq!(write_table(&t, ReportFormat::Csv).unwrap(), b"a,b\n,NaN\n");
        let json = String::from_utf8(write_table(&t, ReportFormat::Json).unwrap()).unwrap();
        assert!(json.contains("\"a\": null"));
        assert!(json.contains("\"b\": null"));
    }
}
