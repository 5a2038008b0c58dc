//! CSV and JSON renderings of digit statistics.
//!
//! CSV columns: `n,N0..N{s-1},v0..v{s-1},r` with exact `p/q` values, followed
//! by `v0_dec..v{s-1}_dec,r_dec` holding the same values in decimal to 20
//! significant digits.

use std::fmt::Write as _;

use serde::Serialize;

use crate::radix::{digits_to_string, Radix};
use crate::rational::{to_decimal_string, to_fraction_string, Rational};
use crate::stats::{PartialStats, RunningStats};

pub const DECIMAL_DIGITS: usize = 20;

/// A rational in both renderings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactDecimal {
    pub exact: String,
    pub decimal: String,
}

impl From<&Rational> for ExactDecimal {
    fn from(x: &Rational) -> Self {
        ExactDecimal {
            exact: to_fraction_string(x),
            decimal: to_decimal_string(x, DECIMAL_DIGITS),
        }
    }
}

pub fn stats_csv_header(radix: Radix) -> String {
    let s = radix.get();
    let mut cols = vec!["n".to_owned()];
    cols.extend((0..s).map(|i| format!("N{i}")));
    cols.extend((0..s).map(|i| format!("v{i}")));
    cols.push("r".to_owned());
    cols.extend((0..s).map(|i| format!("v{i}_dec")));
    cols.push("r_dec".to_owned());
    cols.join(",")
}

pub fn stats_csv_row(row: &PartialStats) -> String {
    let freqs = row.freqs();
    let mean = row.mean();
    let mut out = row.n().to_string();
    for c in row.counts() {
        write!(out, ",{c}").unwrap();
    }
    for v in freqs.iter().chain(std::iter::once(&mean)) {
        write!(out, ",{}", to_fraction_string(v)).unwrap();
    }
    for v in freqs.iter().chain(std::iter::once(&mean)) {
        write!(out, ",{}", to_decimal_string(v, DECIMAL_DIGITS)).unwrap();
    }
    out
}

pub fn stats_csv(radix: Radix, rows: &[PartialStats]) -> String {
    let mut out = stats_csv_header(radix);
    out.push('\n');
    for r in rows {
        out.push_str(&stats_csv_row(r));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct StatsRowJson {
    pub n: u64,
    pub counts: Vec<u64>,
    pub freqs: Vec<ExactDecimal>,
    pub r: ExactDecimal,
}

impl From<&PartialStats> for StatsRowJson {
    fn from(row: &PartialStats) -> Self {
        StatsRowJson {
            n: row.n(),
            counts: row.counts().to_vec(),
            freqs: row.freqs().iter().map(ExactDecimal::from).collect(),
            r: (&row.mean()).into(),
        }
    }
}

pub fn stats_json(radix: Radix, stats: &RunningStats) -> serde_json::Value {
    serde_json::json!({
        "base": radix.get(),
        "truncated": stats.truncated,
        "rows": stats.rows.iter().map(StatsRowJson::from).collect::<Vec<_>>(),
    })
}

/// Fixed-width table for terminals.
pub fn stats_table(radix: Radix, rows: &[PartialStats]) -> String {
    let s = radix.get();
    let mut out = format!("{:>12}", "n");
    for i in 0..s {
        write!(out, " {:>10}", format!("v{i}")).unwrap();
    }
    writeln!(out, " {:>12}", "r").unwrap();
    for r in rows {
        write!(out, "{:>12}", r.n()).unwrap();
        for v in r.freqs() {
            write!(out, " {:>10}", to_decimal_string(&v, 6)).unwrap();
        }
        writeln!(out, " {:>12}", to_decimal_string(&r.mean(), 8)).unwrap();
    }
    out
}

/// Raw digit text.
pub fn digits_text(radix: Radix, digits: &[u8]) -> String {
    digits_to_string(radix, digits)
}
