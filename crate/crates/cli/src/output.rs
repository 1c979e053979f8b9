//! Output assembly: JSON or CSV, to stdout or a file.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use symcone::taut_ring::TautClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Name of the standard monomial x^{m-alpha} theta^alpha.
pub fn monomial_name(codim: u32, alpha: u32) -> String {
    let a = codim - alpha;
    let b = alpha;
    let xpart = match a {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{a}"),
    };
    let tpart = match b {
        0 => String::new(),
        1 => "theta".to_string(),
        _ => format!("theta^{b}"),
    };
    match (xpart.is_empty(), tpart.is_empty()) {
        (true, true) => "1".to_string(),
        (false, true) => xpart,
        (true, false) => tpart,
        (false, false) => format!("{xpart}*{tpart}"),
    }
}

/// CSV with a header naming the monomials and one row of coefficients.
pub fn class_csv(class: &TautClass) -> String {
    let mut header = Vec::new();
    let mut row = Vec::new();
    for (alpha, c) in class.coeffs().iter().enumerate() {
        header.push(monomial_name(class.codim(), alpha as u32));
        row.push(c.to_string());
    }
    format!("{}\n{}\n", header.join(","), row.join(","))
}

/// Renders rows of (header, records) as CSV.
pub fn table_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", header.join(","));
    for row in rows {
        let _ = writeln!(s, "{}", row.join(","));
    }
    s
}

/// Partition as a CSV-safe token, e.g. "3+2+1"; the empty partition is "0".
pub fn partition_token(parts: &[u32]) -> String {
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Writes to the output path or stdout.
pub fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, content),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn json_string<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
