//! Report emission as newline-delimited JSON or CSV.

use std::io::Write;

use jsum_core::theorems::Report;

use crate::config::OutputFormat;
use crate::error::CliError;

pub const CSV_HEADER: [&str; 11] = [
    "identity",
    "q",
    "p",
    "d",
    "r",
    "m",
    "lhs",
    "rhs",
    "status",
    "verdict",
    "elapsed_ms",
];

fn param(r: &Report, key: &str) -> String {
    r.params
        .get(key)
        .map(ToString::to_string)
        .unwrap_or_default()
}

fn csv_row(r: &Report) -> Vec<String> {
    vec![
        r.identity.clone(),
        param(r, "q"),
        param(r, "p"),
        param(r, "d"),
        param(r, "r"),
        param(r, "m"),
        r.lhs.to_string(),
        r.rhs.to_string(),
        r.status.to_string(),
        r.witnesses
            .get("verdict")
            .map(ToString::to_string)
            .unwrap_or_default(),
        r.elapsed_ms.to_string(),
    ]
}

pub fn write_reports<W: Write>(
    reports: &[Report],
    format: OutputFormat,
    out: W,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Json => {
            let mut out = out;
            for r in reports {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            for r in reports {
                w.write_record(csv_row(r))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<Report> {
        vec![
            Report::new("carlitz").param("p", 5).compare(5i64, 5i64),
            Report::new("sun-scan")
                .param("p", 13)
                .witness("verdict", "integral")
                .observe(-12i64, 12i64),
        ]
    }

    #[test]
    fn json_lines() {
        let mut buf = Vec::new();
        write_reports(&sample(), OutputFormat::Json, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        let back: Report = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(back, sample()[0]);
    }

    #[test]
    fn csv_columns() {
        let mut buf = Vec::new();
        write_reports(&sample(), OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "identity,q,p,d,r,m,lhs,rhs,status,verdict,elapsed_ms"
        );
        assert_eq!(lines.next().unwrap(), "carlitz,,5,,,,5,5,pass,,0");
        assert_eq!(
            lines.next().unwrap(),
            "sun-scan,,13,,,,-12,12,not-applicable,integral,0"
        );
    }
}
