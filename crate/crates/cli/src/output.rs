//! Rendering of count tables, coefficient dumps and reports.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use rug::{Float, Rational};
use serde::Serialize;

use crate::config::OutputFormat;

/// Writes `text` to `path`, or to stdout when there is no path.
pub fn emit(text: &str, path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

/// Decimal digits worth printing for a constant computed at `bits` of
/// precision. Finite-difference constants keep about half of the bits.
pub fn digits_for(bits: u32) -> usize {
    ((bits as f64) * std::f64::consts::LOG10_2 / 2.0).floor() as usize
}

pub fn float_string(x: &Float, bits: u32) -> String {
    x.to_string_radix(10, Some(digits_for(bits)))
}

/// Two-column table, either aligned or comma separated, with the header given.
pub fn two_columns(header: [&str; 2], rows: &[(usize, String)], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str(&format!("{},{}\n", header[0], header[1]));
            for (n, v) in rows {
                out.push_str(&format!("{n},{v}\n"));
            }
        }
        OutputFormat::Table | OutputFormat::Json => {
            let w = rows.iter().map(|(n, _)| n.to_string().len()).max().unwrap_or(1).max(header[0].len());
            out.push_str(&format!("{:>w$}  {}\n", header[0], header[1]));
            for (n, v) in rows {
                out.push_str(&format!("{n:>w$}  {v}\n"));
            }
        }
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// `num/den`, or just the numerator for integers.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_table() {
        let rows = vec![(1, "1".to_string()), (10, "1024".to_string())];
        assert_eq!(two_columns(["n", "count"], &rows, OutputFormat::Csv), "n,count\n1,1\n10,1024\n");
        assert_eq!(two_columns(["n", "count"], &rows, OutputFormat::Table), " n  count\n 1  1\n10  1024\n");
    }

    #[test]
    fn digits() {
        assert_eq!(digits_for(256), 38);
        assert_eq!(digits_for(64), 9);
        let x = Float::with_val(256, 27.25);
        assert!(float_string(&x, 64).starts_with("27.25"));
        assert_eq!(rational_string(&Rational::from((3, 6))), "1/2");
    }
}
