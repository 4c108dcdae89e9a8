//! Report serialization: JSON, CSV and plain text with byte-deterministic
//! output. Energies and eigenvalues are printed with 12 significant
//! digits — beyond the 1e-8 comparison tolerance, below solver noise.
//! The shift alpha/n keeps its shortest representation so exact ratios
//! like 0.5 stay readable.

use std::fmt::Write as _;

use crate::energy::EnergyReport;
use crate::verify::CheckSummary;

/// Output format tag shared by all subcommands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            other => Err(format!("unknown format `{other}` (expected json, csv or text)")),
        }
    }
}

/// Formats a float with 12 significant digits in plain decimal notation.
/// Magnitudes below 5e-13 collapse to zero: values that small are solver
/// noise on an exact zero at the scales this crate works at.
pub fn fmt_sig12(x: f64) -> String {
    if x.abs() < 5e-13 {
        return "0.000000000000".to_string();
    }
    let precision_for = |v: f64| (11 - v.abs().log10().floor() as i32).max(0) as usize;
    let precision = precision_for(x);
    let formatted = format!("{x:.precision$}");
    // rounding can cross a power of ten (0.99999... -> 1.0...); reformat
    // once so the output keeps 12 significant digits
    let rounded: f64 = formatted.parse().unwrap_or(x);
    if rounded != 0.0 && precision_for(rounded) != precision {
        format!("{x:.*}", precision_for(rounded))
    } else {
        formatted
    }
}

/// Shortest round-trip representation; used for the shift alpha/n.
pub fn fmt_shift(x: f64) -> String {
    format!("{x}")
}

pub fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

fn json_float_array(values: &[f64]) -> String {
    let mut out = String::from("[");
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&fmt_sig12(*v));
    }
    out.push(']');
    out
}

pub fn energy_report_json(r: &EnergyReport) -> String {
    format!(
        "{{\"n\":{},\"alpha\":{},\"shift\":{},\"energy\":{},\"spectrum\":{}}}",
        r.n,
        r.alpha,
        fmt_shift(r.shift),
        fmt_sig12(r.energy),
        json_float_array(r.spectrum.values()),
    )
}

pub const ENERGY_CSV_HEADER: &str = "n,alpha,shift,energy";

pub fn energy_report_csv_row(r: &EnergyReport) -> String {
    format!(
        "{},{},{},{}",
        r.n,
        r.alpha,
        fmt_shift(r.shift),
        fmt_sig12(r.energy)
    )
}

pub fn energy_report_text(r: &EnergyReport) -> String {
    let values: Vec<String> = r.spectrum.values().iter().map(|v| fmt_sig12(*v)).collect();
    format!(
        "n={} alpha={} shift={} energy={} spectrum=[{}]",
        r.n,
        r.alpha,
        fmt_shift(r.shift),
        fmt_sig12(r.energy),
        values.join(", ")
    )
}

pub fn summary_json(s: &CheckSummary) -> String {
    let mut out = format!("{{\"total\":{},\"passed\":{},\"failures\":[", s.total(), s.passed());
    for (i, f) in s.failures().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"input\":\"{}\",\"detail\":\"{}\"}}",
            json_escape(&f.input),
            json_escape(&f.detail)
        );
    }
    out.push_str("]}");
    out
}

pub const SUMMARY_CSV_HEADER: &str = "total,passed,failed";

pub fn summary_csv_row(s: &CheckSummary) -> String {
    format!("{},{},{}", s.total(), s.passed(), s.failed())
}

/// One human line; `label` names what was scanned.
pub fn summary_text(s: &CheckSummary, label: &str) -> String {
    let mut out = format!(
        "{} {}: {} passed, {} failures",
        s.total(),
        label,
        s.passed(),
        s.failed()
    );
    for f in s.failures() {
        let _ = write!(out, "\n  FAIL {} — {}", f.input, f.detail);
    }
    out
}
