//! Text, JSON and CSV renderings. Rationals are always `"p/q"` strings in
//! JSON and CSV; the pretty format drops a unit denominator.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};
use wheelecc_core::ratq::{format_fraction, format_rational};
use wheelecc_core::{MatrixQ, VectorQ};

use crate::generate::Generated;
use crate::report::{Check, SweepReport, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

fn matrix_json(m: &MatrixQ) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| Value::String(format_fraction(m.get(i, j)))).collect()))
            .collect(),
    )
}

fn vector_json(v: &VectorQ) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_fraction(x))).collect())
}

fn to_json_string(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_rows<I, R>(rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8")
}

fn pretty_matrix(m: &MatrixQ) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_rational(m.get(i, j))).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "[{}]", padded.join("  "));
    }
    out
}

fn pretty_vector(v: &VectorQ) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

pub fn render_generated(g: &Generated, format: Format) -> String {
    match (format, g) {
        (Format::Json, Generated::Matrix(m)) => to_json_string(&matrix_json(m)),
        (Format::Json, Generated::Vector(v)) => to_json_string(&vector_json(v)),
        (Format::Json, Generated::Pair(x, y)) => to_json_string(&json!({ "x": vector_json(x), "y": vector_json(y) })),
        (Format::Json, Generated::Edges(e)) => to_json_string(e),

        (Format::Csv, Generated::Matrix(m)) => {
            csv_rows((0..m.rows()).map(|i| (0..m.cols()).map(move |j| format_fraction(m.get(i, j)))))
        }
        (Format::Csv, Generated::Vector(v)) => csv_rows([v.iter().map(format_fraction)]),
        (Format::Csv, Generated::Pair(x, y)) => csv_rows([
            std::iter::once("x".to_string()).chain(x.iter().map(format_fraction)).collect::<Vec<_>>(),
            std::iter::once("y".to_string()).chain(y.iter().map(format_fraction)).collect(),
        ]),
        (Format::Csv, Generated::Edges(e)) => csv_rows(
            std::iter::once(vec!["u".to_string(), "v".to_string()])
                .chain(e.iter().map(|(a, b)| vec![a.to_string(), b.to_string()])),
        ),

        (Format::Pretty, Generated::Matrix(m)) => pretty_matrix(m),
        (Format::Pretty, Generated::Vector(v)) => format!("{}\n", pretty_vector(v)),
        (Format::Pretty, Generated::Pair(x, y)) => {
            format!("x = {}\ny = {}\n", pretty_vector(x), pretty_vector(y))
        }
        (Format::Pretty, Generated::Edges(e)) => e.iter().map(|(a, b)| format!("{a} {b}\n")).collect(),
    }
}

const CSV_HEADER: [&str; 7] = ["n", "check", "status", "expected", "actual", "note", "wall_time_ms"];

fn check_csv_row(n: usize, c: &Check, timings: bool) -> Vec<String> {
    let mut row = vec![
        n.to_string(),
        c.name.to_string(),
        c.status.label().to_lowercase(),
        c.expected.clone(),
        c.actual.clone(),
        c.note.clone().unwrap_or_default(),
    ];
    if timings {
        row.push(c.wall_time_ms.map(|t| t.to_string()).unwrap_or_default());
    }
    row
}

fn header(timings: bool) -> Vec<String> {
    let len = if timings { 7 } else { 6 };
    CSV_HEADER[..len].iter().map(|s| s.to_string()).collect()
}

fn pretty_checks(out: &mut String, r: &VerificationReport) {
    let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &r.checks {
        let _ = write!(out, "  {}  {:<width$}", c.status.label(), c.name);
        if !c.expected.is_empty() || !c.actual.is_empty() {
            let _ = write!(out, "  expected {}  actual {}", c.expected, c.actual);
        }
        if let Some(note) = &c.note {
            let _ = write!(out, "  ({note})");
        }
        if let Some(t) = c.wall_time_ms {
            let _ = write!(out, "  [{t} ms]");
        }
        out.push('\n');
    }
}

fn counts_line(passed: usize, failed: usize, skipped: usize) -> String {
    format!("{passed} passed, {failed} failed, {skipped} skipped")
}

pub fn render_report(r: &VerificationReport, format: Format, timings: bool) -> String {
    use crate::report::Status;
    match format {
        Format::Json => to_json_string(r),
        Format::Csv => csv_rows(std::iter::once(header(timings)).chain(r.checks.iter().map(|c| check_csv_row(r.n, c, timings)))),
        Format::Pretty => {
            let mut out = format!("n = {}\n", r.n);
            pretty_checks(&mut out, r);
            let _ = writeln!(
                out,
                "{}",
                counts_line(r.count(Status::Pass), r.count(Status::Fail), r.count(Status::Skip))
            );
            out
        }
    }
}

pub fn render_sweep(s: &SweepReport, format: Format, timings: bool) -> String {
    use crate::report::Status;
    match format {
        Format::Json => to_json_string(s),
        Format::Csv => csv_rows(
            std::iter::once(header(timings)).chain(
                s.reports
                    .iter()
                    .flat_map(|r| r.checks.iter().map(move |c| check_csv_row(r.n, c, timings))),
            ),
        ),
        Format::Pretty => {
            let mut out = String::new();
            for r in &s.reports {
                let _ = writeln!(
                    out,
                    "n = {:>3}: {}",
                    r.n,
                    counts_line(r.count(Status::Pass), r.count(Status::Fail), r.count(Status::Skip))
                );
                for c in r.checks.iter().filter(|c| c.status == Status::Fail) {
                    let _ = writeln!(
                        out,
                        "    FAIL {}  expected {}  actual {}{}",
                        c.name,
                        c.expected,
                        c.actual,
                        c.note.as_ref().map(|n| format!("  ({n})")).unwrap_or_default()
                    );
                }
            }
            let m = &s.summary;
            let _ = writeln!(
                out,
                "sweep {}..={}: {} reports, {} checks: {}",
                m.n_min,
                m.n_max,
                m.reports,
                m.checks,
                counts_line(m.passed, m.failed, m.skipped)
            );
            if let Some(t) = m.max_wall_time_ms {
                let _ = writeln!(out, "max check wall time: {t} ms");
            }
            if let Some(f) = &m.first_failure {
                let _ = writeln!(out, "first failure: n = {}, {}", f.n, f.check);
            }
            out
        }
    }
}
