//! CSV rendering and atomic file output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use anyhow::Context;
use qarrow::experiments::{GridRecord, TraceRecord, TwoQubitRecord};

pub const TWO_QUBIT_HEADER: &str = "time,e_a,e_b,complexity,concurrence,eof";
pub const GRID_HEADER: &str = "t,s,e_a,e_b,e_c,c_ab,c_bc,c_ac";
pub const TRACE_HEADER: &str = "tau,e_a,e_b,e_c,c_ab,c_bc,c_ac";

const SIGNIFICANT: usize = 12;

/// Twelve significant digits, trailing zeros kept; zero prints as `0`.
/// Magnitudes outside `[1e-4, 1e12)` use exponent notation.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT - 1, x);
    let exponent: i32 = sci[sci.find('e').expect("exponent") + 1..].parse().expect("integer exponent");
    if !(-4..SIGNIFICANT as i32).contains(&exponent) {
        return sci;
    }
    let decimals = (SIGNIFICANT as i32 - 1 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

/// A record type that can be written as one CSV row.
pub trait CsvRow {
    const HEADER: &'static str;
    fn fields(&self) -> Vec<f64>;
}

impl CsvRow for TwoQubitRecord {
    const HEADER: &'static str = TWO_QUBIT_HEADER;
    fn fields(&self) -> Vec<f64> {
        vec![self.time, self.e_a, self.e_b, self.complexity, self.concurrence, self.eof]
    }
}

impl CsvRow for GridRecord {
    const HEADER: &'static str = GRID_HEADER;
    fn fields(&self) -> Vec<f64> {
        vec![self.t, self.s, self.e_a, self.e_b, self.e_c, self.c_ab, self.c_bc, self.c_ac]
    }
}

impl CsvRow for TraceRecord {
    const HEADER: &'static str = TRACE_HEADER;
    fn fields(&self) -> Vec<f64> {
        vec![self.tau, self.e_a, self.e_b, self.e_c, self.c_ab, self.c_bc, self.c_ac]
    }
}

pub fn render_csv<R: CsvRow>(records: &[R]) -> String {
    let mut out = String::with_capacity(16 * 8 * (records.len() + 1));
    out.push_str(R::HEADER);
    out.push('\n');
    for r in records {
        let row: Vec<String> = r.fields().into_iter().map(format_number).collect();
        writeln!(out, "{}", row.join(",")).expect("writing to a String");
    }
    out
}

/// Writes `contents` to a temporary file beside `path`, then renames it
/// into place so a failed run never leaves a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create a temporary file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes()).with_context(|| format!("cannot write {}", path.display()))?;
    tmp.persist(path).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

pub fn emit_csv<R: CsvRow>(records: &[R], path: &Path) -> anyhow::Result<()> {
    anyhow::ensure!(!records.is_empty(), "no records to write to {}", path.display());
    write_atomic(path, &render_csv(records))
}

/// Reads a two-qubit CSV produced by [`emit_csv`].
pub fn parse_two_qubit_csv(text: &str) -> anyhow::Result<Vec<TwoQubitRecord>> {
    let mut lines = text.lines();
    let header = lines.next().context("empty file")?;
    anyhow::ensure!(header.trim() == TWO_QUBIT_HEADER, "expected header `{TWO_QUBIT_HEADER}`, found `{header}`");
    lines
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, line)| {
            let v = line
                .split(',')
                .map(|f| f.trim().parse::<f64>())
                .collect::<Result<Vec<_>, _>>()
                .with_context(|| format!("line {}: not a number", i + 2))?;
            anyhow::ensure!(v.len() == 6, "line {}: expected 6 columns, found {}", i + 2, v.len());
            Ok(TwoQubitRecord { time: v[0], e_a: v[1], e_b: v[2], complexity: v[3], concurrence: v[4], eof: v[5] })
        })
        .collect()
}
