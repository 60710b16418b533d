use std::io;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::args::Format;

/// One line of a `compare` table. Big integers and fixed-point decimals are
/// kept as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReportRow {
    pub p: u32,
    pub x: u32,
    pub exact: Option<String>,
    pub dp_exact: String,
    pub estimate_log10: String,
    pub ratio: Option<String>,
    pub primitive: Option<String>,
    pub nonprimitive: Option<String>,
}

pub const REPORT_HEADER: &str = "p,x,exact,dp_exact,estimate_log10,ratio,primitive,nonprimitive";

/// Writes rows sorted by `(p, x)`.
pub fn emit_report(rows: &[CountReportRow], format: Format, out: &mut dyn io::Write) -> io::Result<()> {
    let mut rows = rows.to_vec();
    rows.sort_by_key(|r| (r.p, r.x));
    match format {
        Format::Csv => {
            if rows.is_empty() {
                writeln!(out, "{REPORT_HEADER}")
            } else {
                write_csv(&rows, out)
            }
        }
        Format::Json => write_json(&rows, out),
    }
}

/// Reads back what [`emit_report`] wrote as CSV.
pub fn parse_report_csv(text: &str) -> Result<Vec<CountReportRow>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect()
}

pub fn write_csv<T: Serialize>(rows: &[T], out: &mut dyn io::Write) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}

pub fn write_json<T: Serialize>(rows: &[T], out: &mut dyn io::Write) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, rows)?;
    writeln!(out)
}

/// `log10 n`, also for integers beyond the `f64` range.
pub fn log10_biguint(n: &BigUint) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().expect("in range").log10();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().expect("64 bits");
    top.log10() + shift as f64 * std::f64::consts::LOG10_2
}

pub fn fixed6(v: f64) -> String {
    format!("{v:.6}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row() -> CountReportRow {
        CountReportRow {
            p: 3,
            x: 8,
            exact: Some("3".into()),
            dp_exact: "3".into(),
            estimate_log10: fixed6(3f64.log10()),
            ratio: Some(fixed6(1.0)),
            primitive: Some("2".into()),
            nonprimitive: Some("1".into()),
        }
    }

    fn emit(rows: &[CountReportRow], format: Format) -> String {
        let mut buf = Vec::new();
        emit_report(rows, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_example() {
        assert_eq!(
            emit(&[row()], Format::Csv),
            format!("{REPORT_HEADER}\n3,8,3,3,0.477121,1.000000,2,1\n")
        );
        assert_eq!(emit(&[], Format::Csv), format!("{REPORT_HEADER}\n"));
    }

    #[test]
    fn json_example() {
        let text = emit(&[row()], Format::Json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v[0]["exact"], "3");
        assert_eq!(v[0]["p"], 3);
        assert_eq!(emit(&[], Format::Json).trim(), "[]");
    }

    #[test]
    fn rows_are_sorted() {
        let mut a = row();
        a.x = 12;
        let mut b = row();
        b.p = 2;
        let text = emit(&[a, row(), b], Format::Csv);
        let keys: Vec<(u32, u32)> = parse_report_csv(&text)
            .unwrap()
            .iter()
            .map(|r| (r.p, r.x))
            .collect();
        assert_eq!(keys, vec![(2, 8), (3, 8), (3, 12)]);
    }

    #[test]
    fn empty_fields_round_trip() {
        let mut r = row();
        r.exact = None;
        r.ratio = None;
        r.primitive = None;
        r.nonprimitive = None;
        let text = emit(&[r.clone()], Format::Csv);
        assert!(text.ends_with("3,8,,3,0.477121,,,\n"));
        assert_eq!(parse_report_csv(&text).unwrap(), vec![r]);
    }

    #[test]
    fn big_logs() {
        let n = BigUint::from(1u32) << 5000usize;
        assert!((log10_biguint(&n) - 5000.0 * std::f64::consts::LOG10_2).abs() < 1e-9);
        assert!((log10_biguint(&BigUint::from(1000u32)) - 3.0).abs() < 1e-15);
    }
}
