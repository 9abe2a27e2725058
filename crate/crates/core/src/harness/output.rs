use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::report::Check;

use super::{HarnessError, InvariantRow, VerificationReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(HarnessError::UnknownFormat(s.to_string())),
        }
    }
}

const COLUMNS: [&str; 11] = ["name", "braid", "comps", "sigma", "nu", "sgn", "det", "d2(1)", "lambda2", "|H1|", "J"];

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

fn cells(r: &InvariantRow) -> [String; 11] {
    [
        r.name.clone(),
        r.braid.clone(),
        r.components.to_string(),
        opt(&r.sigma),
        opt(&r.nu),
        opt(&r.sign),
        opt(&r.det),
        opt(&r.delta_second),
        opt(&r.lambda2),
        opt(&r.h1),
        if r.jones.is_empty() { "-".into() } else { r.jones.clone() },
    ]
}

fn table(rows: &[InvariantRow]) -> String {
    let body: Vec<[String; 11]> = rows.iter().map(cells).collect();
    let mut width = COLUMNS.map(|c| c.chars().count());
    for r in &body {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cols: &[String]| {
        let mut s = String::new();
        for (i, c) in cols.iter().enumerate() {
            if i + 1 == cols.len() {
                s.push_str(c);
            } else {
                write!(s, "{:<w$}  ", c, w = width[i]).unwrap();
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&COLUMNS.map(String::from));
    for r in &body {
        line(r);
    }
    for r in rows {
        if let Some(e) = &r.error {
            writeln!(out, "error in {}: {}", r.name, e).unwrap();
        }
    }
    out
}

fn csv_rows(rows: &[InvariantRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

/// Render just the invariant rows.
pub fn render_rows(rows: &[InvariantRow], format: Format) -> String {
    match format {
        Format::Table => table(rows),
        Format::Csv => csv_rows(rows),
        Format::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
    }
}

/// Key-value output for single-object commands.
pub fn render_record(fields: &[(&str, String)], format: Format) -> String {
    match format {
        Format::Table => {
            let w = fields.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            fields.iter().map(|(k, v)| format!("{:<w$}  {}\n", k, v, w = w)).collect()
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(fields.iter().map(|(k, _)| *k)).expect("in-memory");
            w.write_record(fields.iter().map(|(_, v)| v.as_str())).expect("in-memory");
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
        }
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                fields.iter().map(|(k, v)| (k.to_string(), serde_json::Value::String(v.clone()))).collect();
            serde_json::to_string_pretty(&map).expect("strings serialize") + "\n"
        }
    }
}

#[derive(Serialize)]
struct SuiteSummary<'a> {
    suite: &'a str,
    passed: usize,
    failed: usize,
    failures: Vec<&'a Check>,
}

#[derive(Serialize)]
struct AffineSummary {
    m: i64,
    a: String,
    b: String,
}

#[derive(Serialize)]
struct Summary<'a> {
    passed: bool,
    failed: usize,
    suites: Vec<SuiteSummary<'a>>,
    affine: Vec<AffineSummary>,
    rows: &'a [InvariantRow],
}

/// Render a verification report. CSV carries one row per link; the suite
/// outcomes are in the table and JSON forms.
pub fn render(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Csv => csv_rows(&r.rows),
        Format::Json => {
            let s = Summary {
                passed: r.all_passed(),
                failed: r.failed(),
                suites: r
                    .suites
                    .iter()
                    .map(|s| SuiteSummary {
                        suite: &s.suite,
                        passed: s.passed,
                        failed: s.failed,
                        failures: s.report.failures().collect(),
                    })
                    .collect(),
                affine: r.affine.iter().map(|f| AffineSummary { m: f.m, a: f.a.to_string(), b: f.b.to_string() }).collect(),
                rows: &r.rows,
            };
            serde_json::to_string_pretty(&s).expect("summary serializes") + "\n"
        }
        Format::Table => {
            let mut out = table(&r.rows);
            if !r.affine.is_empty() {
                out.push('\n');
                for f in &r.affine {
                    writeln!(out, "affine m = {:>2}: a = {}, b = {}", f.m, f.a, f.b).unwrap();
                }
            }
            out.push('\n');
            for s in &r.suites {
                writeln!(out, "{:<20} {:>5} passed {:>5} failed", s.suite, s.passed, s.failed).unwrap();
            }
            for s in &r.suites {
                for c in s.report.failures() {
                    writeln!(out, "FAIL [{}] {}: {}", s.suite, c.name, c.witness.as_deref().unwrap_or("")).unwrap();
                }
            }
            writeln!(out, "{}", if r.all_passed() { "all checks passed" } else { "some checks failed" }).unwrap();
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::compute_row;
    use crate::links::BraidWord;

    #[test]
    fn csv_has_one_row_per_link() {
        let rows = vec![
            compute_row("3_1", &BraidWord::parse("2; 1 1 1").unwrap()),
            compute_row("hopf", &BraidWord::parse("2; 1 1").unwrap()),
        ];
        let s = render_rows(&rows, Format::Csv);
        assert_eq!(s.lines().count(), 3);
        assert!(s.starts_with("name,braid,components,jones,"));
        let t = render_rows(&rows, Format::Table);
        assert!(t.lines().nth(1).unwrap().starts_with("3_1"));
    }

    #[test]
    fn records() {
        let f = [("sigma", "-2".to_string()), ("J", "q^-2 + q^-6".to_string())];
        assert_eq!(render_record(&f, Format::Table), "sigma  -2\nJ      q^-2 + q^-6\n");
        assert_eq!(render_record(&f, Format::Csv), "sigma,J\n-2,q^-2 + q^-6\n");
        assert!(render_record(&f, Format::Json).contains("\"sigma\": \"-2\""));
    }

    #[test]
    fn formats_parse() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!("yaml".parse::<Format>().is_err());
    }
}
