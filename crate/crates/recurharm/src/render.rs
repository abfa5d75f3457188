//! Deterministic text output: plain aligned tables, CSV, JSON, and LaTeX,
//! plus the parsers that take CSV/JSON tables back in. Identical inputs
//! always produce byte-identical output.
//!
//! Rationals travel as the canonical "p/q" text everywhere a machine
//! reads them; only the human-facing formats (plain, LaTeX) drop "/1".
//! Big integers go into JSON as decimal digit strings, never as numbers:
//! the denominators outgrow 64-bit consumers almost immediately.

use std::fmt;
use std::str::FromStr;

use crate::analysis::{BenchReport, ErrorReport};
use crate::error::Error;
use crate::exact::ExactRational;
use crate::harmonic::HarmonicTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RenderFormat {
    Plain,
    Csv,
    Json,
    Latex,
}

impl fmt::Display for RenderFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RenderFormat::Plain => "plain",
            RenderFormat::Csv => "csv",
            RenderFormat::Json => "json",
            RenderFormat::Latex => "latex",
        };
        f.write_str(name)
    }
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "plain" => Ok(RenderFormat::Plain),
            "csv" => Ok(RenderFormat::Csv),
            "json" => Ok(RenderFormat::Json),
            "latex" => Ok(RenderFormat::Latex),
            _ => Err(Error::Parse(format!(
                "unknown format {s:?} (expected plain|csv|json|latex)"
            ))),
        }
    }
}

/// Floats are pinned to 17 significant digits so every binary64 value
/// round-trips and output stays byte-stable across library versions.
fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn latex_cell(v: &ExactRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", v.numer(), v.denom())
    }
}

/// One rational in the requested format.
pub fn render_value(v: &ExactRational, format: RenderFormat) -> String {
    match format {
        RenderFormat::Plain => v.to_string(),
        RenderFormat::Csv => v.canonical(),
        RenderFormat::Json => format!(
            "{{\"num\":\"{}\",\"den\":\"{}\"}}",
            v.numer(),
            v.denom()
        ),
        RenderFormat::Latex => latex_cell(v),
    }
}

/// A whole table, rows by n ascending and columns by m ascending from 0,
/// mirroring the layout the values are usually shown in.
pub fn render_table(table: &HarmonicTable, format: RenderFormat) -> String {
    match format {
        RenderFormat::Plain => render_table_plain(table),
        RenderFormat::Csv => render_table_csv(table),
        RenderFormat::Json => render_table_json(table),
        RenderFormat::Latex => render_table_latex(table),
    }
}

fn render_table_plain(table: &HarmonicTable) -> String {
    let cols = table.m_max() as usize + 2;
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(table.n_max() as usize + 1);
    let mut header = vec!["n\\m".to_string()];
    header.extend((0..=table.m_max()).map(|m| m.to_string()));
    grid.push(header);
    for n in 1..=table.n_max() {
        let mut row = vec![n.to_string()];
        row.extend((0..=table.m_max()).map(|m| table.get(n, m).expect("in range").to_string()));
        grid.push(row);
    }

    let mut widths = vec![0usize; cols];
    for row in &grid {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let lines: Vec<String> = grid
        .iter()
        .map(|row| {
            row.iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect();
    lines.join("\n")
}

fn render_table_csv(table: &HarmonicTable) -> String {
    let mut lines = Vec::with_capacity(table.n_max() as usize + 1);
    let mut header = vec!["n".to_string()];
    header.extend((0..=table.m_max()).map(|m| format!("m={m}")));
    lines.push(header.join(","));
    for n in 1..=table.n_max() {
        let mut row = vec![n.to_string()];
        row.extend((0..=table.m_max()).map(|m| table.get(n, m).expect("in range").canonical()));
        lines.push(row.join(","));
    }
    lines.join("\n")
}

fn render_table_json(table: &HarmonicTable) -> String {
    let cells: Vec<String> = table
        .cells()
        .map(|(_, _, v)| format!("\"{}\"", v.canonical()))
        .collect();
    format!(
        "{{\"n_max\":{},\"m_max\":{},\"values\":[{}]}}",
        table.n_max(),
        table.m_max(),
        cells.join(",")
    )
}

fn render_table_latex(table: &HarmonicTable) -> String {
    let mut lines = Vec::with_capacity(table.n_max() as usize);
    for n in 1..=table.n_max() {
        let mut row = vec![n.to_string()];
        row.extend((0..=table.m_max()).map(|m| latex_cell(table.get(n, m).expect("in range"))));
        lines.push(format!("{} \\\\", row.join(" & ")));
    }
    lines.join("\n")
}

/// Reads back what [`render_table`] wrote as CSV.
pub fn parse_table_csv(text: &str) -> Result<HarmonicTable, Error> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty CSV table".into()))?;
    let mut fields = header.split(',');
    if fields.next() != Some("n") {
        return Err(Error::Parse(format!("bad CSV header {header:?}")));
    }
    let mut m_max: Option<u32> = None;
    for (i, field) in fields.enumerate() {
        if field != format!("m={i}") {
            return Err(Error::Parse(format!("bad CSV header column {field:?}")));
        }
        m_max = Some(i as u32);
    }
    let m_max = m_max.ok_or_else(|| Error::Parse("CSV header has no m columns".into()))?;

    let mut values = Vec::new();
    let mut n_max = 0u32;
    for (i, line) in lines.enumerate() {
        let mut fields = line.split(',');
        let label = fields.next().unwrap_or_default();
        if label.parse::<u32>() != Ok(i as u32 + 1) {
            return Err(Error::Parse(format!("bad CSV row label {label:?}")));
        }
        let row: Vec<ExactRational> = fields.map(str::parse).collect::<Result<_, _>>()?;
        if row.len() != m_max as usize + 1 {
            return Err(Error::Parse(format!(
                "CSV row {} has {} cells, expected {}",
                i + 1,
                row.len(),
                m_max + 1
            )));
        }
        values.extend(row);
        n_max = i as u32 + 1;
    }
    HarmonicTable::from_values(n_max, m_max, values)
}

/// Reads back what [`render_table`] wrote as JSON.
pub fn parse_table_json(text: &str) -> Result<HarmonicTable, Error> {
    let doc: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON table: {e}")))?;
    let bound = |key: &str| -> Result<u32, Error> {
        doc.get(key)
            .and_then(serde_json::Value::as_u64)
            .and_then(|v| u32::try_from(v).ok())
            .ok_or_else(|| Error::Parse(format!("JSON table is missing {key}")))
    };
    let n_max = bound("n_max")?;
    let m_max = bound("m_max")?;
    let values = doc
        .get("values")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(|| Error::Parse("JSON table is missing values".into()))?
        .iter()
        .map(|cell| {
            cell.as_str()
                .ok_or_else(|| Error::Parse(format!("non-string table cell {cell}")))?
                .parse()
        })
        .collect::<Result<Vec<ExactRational>, Error>>()?;
    HarmonicTable::from_values(n_max, m_max, values)
}

/// Report records that know how to lay themselves out as CSV rows and
/// JSON objects. Field order is fixed per type.
pub trait TabularReport {
    fn csv_header() -> &'static str;
    fn csv_row(&self) -> String;
    fn json_object(&self) -> String;
}

impl TabularReport for ErrorReport {
    fn csv_header() -> &'static str {
        "n,m,exact,float_value,abs_error,rel_error,largest_term_magnitude"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.exact.canonical(),
            format_f64(self.float_value),
            format_f64(self.abs_error),
            format_f64(self.rel_error),
            format_f64(self.largest_term_magnitude)
        )
    }

    fn json_object(&self) -> String {
        format!(
            "{{\"n\":{},\"m\":{},\"exact\":\"{}\",\"float_value\":{},\"abs_error\":{},\"rel_error\":{},\"largest_term_magnitude\":{}}}",
            self.n,
            self.m,
            self.exact.canonical(),
            format_f64(self.float_value),
            format_f64(self.abs_error),
            format_f64(self.rel_error),
            format_f64(self.largest_term_magnitude)
        )
    }
}

impl TabularReport for BenchReport {
    fn csv_header() -> &'static str {
        "strategy,n,m,wall_time_ns,peak_live_rationals,max_numerator_bits,max_denominator_bits"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.strategy,
            self.n,
            self.m,
            self.wall_time.as_nanos(),
            self.peak_live_rationals,
            self.max_numerator_bits,
            self.max_denominator_bits
        )
    }

    fn json_object(&self) -> String {
        format!(
            "{{\"strategy\":\"{}\",\"n\":{},\"m\":{},\"wall_time_ns\":{},\"peak_live_rationals\":{},\"max_numerator_bits\":{},\"max_denominator_bits\":{}}}",
            self.strategy,
            self.n,
            self.m,
            self.wall_time.as_nanos(),
            self.peak_live_rationals,
            self.max_numerator_bits,
            self.max_denominator_bits
        )
    }
}

/// Error or bench reports as CSV (header always present) or a JSON array.
/// The table-oriented formats make no sense for record streams.
pub fn render_reports<R: TabularReport>(
    reports: &[R],
    format: RenderFormat,
) -> Result<String, Error> {
    match format {
        RenderFormat::Csv => {
            let mut lines = vec![R::csv_header().to_string()];
            lines.extend(reports.iter().map(TabularReport::csv_row));
            Ok(lines.join("\n"))
        }
        RenderFormat::Json => {
            let objects: Vec<String> = reports.iter().map(TabularReport::json_object).collect();
            Ok(format!("[{}]", objects.join(",")))
        }
        RenderFormat::Plain | RenderFormat::Latex => Err(Error::UnsupportedFormat {
            format,
            what: "reports",
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::error_report;
    use crate::exact::BigInt;
    use crate::harmonic::build_table;

    fn rat(n: i64, d: i64) -> ExactRational {
        ExactRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn value_rendering() {
        assert_eq!(render_value(&rat(25, 12), RenderFormat::Plain), "25/12");
        assert_eq!(render_value(&rat(1, 1), RenderFormat::Plain), "1");
        assert_eq!(render_value(&rat(1, 1), RenderFormat::Csv), "1/1");
        assert_eq!(
            render_value(&rat(76111, 20736), RenderFormat::Json),
            "{\"num\":\"76111\",\"den\":\"20736\"}"
        );
        assert_eq!(
            render_value(&rat(85, 36), RenderFormat::Latex),
            "\\frac{85}{36}"
        );
        assert_eq!(render_value(&rat(-3, 1), RenderFormat::Latex), "-3");
    }

    #[test]
    fn csv_table_layout() {
        let table = build_table(4, 4).unwrap();
        let csv = render_table(&table, RenderFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,m=0,m=1,m=2,m=3,m=4");
        assert_eq!(lines.len(), 5);
        // row n=3, column m=4
        assert_eq!(lines[3].split(',').nth(5), Some("3661/1296"));
        assert_eq!(lines[2], "2,1/1,3/2,7/4,15/8,31/16");
    }

    #[test]
    fn plain_table_smallest_case() {
        let table = build_table(1, 0).unwrap();
        let plain = render_table(&table, RenderFormat::Plain);
        let lines: Vec<&str> = plain.lines().collect();
        assert_eq!(lines.len(), 2);
        let data: Vec<&str> = lines[1].split_whitespace().collect();
        assert_eq!(data, ["1", "1"]); // row label n=1, single cell 1
    }

    #[test]
    fn latex_table_entries() {
        let table = build_table(3, 2).unwrap();
        let latex = render_table(&table, RenderFormat::Latex);
        assert!(latex.contains("\\frac{85}{36}"));
        let lines: Vec<&str> = latex.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().all(|l| l.ends_with("\\\\")));
        assert_eq!(lines[0], "1 & 1 & 1 & 1 \\\\");
    }

    #[test]
    fn csv_round_trip() {
        let table = build_table(6, 4).unwrap();
        let csv = render_table(&table, RenderFormat::Csv);
        let parsed = parse_table_csv(&csv).unwrap();
        assert_eq!(parsed, table);
        // byte-identical re-render
        assert_eq!(render_table(&parsed, RenderFormat::Csv), csv);
    }

    #[test]
    fn json_round_trip() {
        let table = build_table(6, 4).unwrap();
        let json = render_table(&table, RenderFormat::Json);
        serde_json::from_str::<serde_json::Value>(&json).expect("valid JSON");
        let parsed = parse_table_json(&json).unwrap();
        assert_eq!(parsed, table);
        assert_eq!(render_table(&parsed, RenderFormat::Json), json);
    }

    #[test]
    fn parsers_reject_tampering() {
        let table = build_table(3, 2).unwrap();
        let csv = render_table(&table, RenderFormat::Csv);
        let tampered = csv.replace("85/36", "85/37");
        assert!(parse_table_csv(&tampered).is_err());
        let json = render_table(&table, RenderFormat::Json);
        let tampered = json.replace("\"m_max\":2", "\"m_max\":3");
        assert!(parse_table_json(&tampered).is_err());
        assert!(parse_table_csv("").is_err());
    }

    #[test]
    fn report_rendering_schema() {
        let report = error_report(4, 1).unwrap();
        let csv = render_reports(&[report.clone()], RenderFormat::Csv).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], ErrorReport::csv_header());
        assert_eq!(lines.len(), 2);
        assert!(lines[1].starts_with("4,1,25/12,"));

        let json = render_reports(&[report], RenderFormat::Json).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        let obj = &doc.as_array().unwrap()[0];
        for key in [
            "n",
            "m",
            "exact",
            "float_value",
            "abs_error",
            "rel_error",
            "largest_term_magnitude",
        ] {
            assert!(obj.get(key).is_some(), "missing {key}");
        }
        assert_eq!(obj["exact"], "25/12");
    }

    #[test]
    fn empty_report_lists() {
        let csv = render_reports::<ErrorReport>(&[], RenderFormat::Csv).unwrap();
        assert_eq!(csv, ErrorReport::csv_header());
        let json = render_reports::<BenchReport>(&[], RenderFormat::Json).unwrap();
        assert_eq!(json, "[]");
    }

    #[test]
    fn reports_refuse_table_formats() {
        for format in [RenderFormat::Plain, RenderFormat::Latex] {
            let err = render_reports::<ErrorReport>(&[], format).unwrap_err();
            assert!(matches!(err, Error::UnsupportedFormat { .. }));
        }
    }

    #[test]
    fn float_formatting_has_17_significant_digits() {
        assert_eq!(format_f64(25.0 / 12.0), "2.0833333333333335e0");
        assert_eq!(format_f64(0.0), "0.0000000000000000e0");
        let x = 1.0 / 3.0;
        assert_eq!(format_f64(x).parse::<f64>().unwrap(), x);
    }
}
