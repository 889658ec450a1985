// SPDX-License-Identifier: Apache-2.0

//! Machine-readable records printed by the command-line tool. Every integer
//! is carried as a decimal string.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::verify::SuiteReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// A list of exact coefficients plus the parameters that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub params: Map<String, Value>,
    pub format: String,
    pub coefficients: Vec<String>,
}

/// A grid of counts, one row per step count.
#[derive(Debug, Clone, Serialize)]
pub struct TableRecord {
    pub command: String,
    pub params: Map<String, Value>,
    pub format: String,
    /// First level covered by column 0 (always 0).
    pub first_level: usize,
    pub coefficients: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
struct SuitesRecord<'a> {
    suites: &'a [SuiteReport],
}

impl OutputRecord {
    pub fn new(command: &str, params: Map<String, Value>, format: Format, coefficients: Vec<String>) -> Self {
        Self {
            command: command.to_owned(),
            params,
            format: format.as_str().to_owned(),
            coefficients,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.coefficients.join(","),
            Format::Json => serde_json::to_string(self).expect("serializable"),
            Format::Csv => {
                let mut out = String::from("n,coefficient\n");
                for (n, c) in self.coefficients.iter().enumerate() {
                    let _ = writeln!(out, "{n},{c}");
                }
                out.truncate(out.trim_end().len());
                out
            }
        }
    }
}

impl TableRecord {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self
                .coefficients
                .iter()
                .map(|row| row.join(" "))
                .collect::<Vec<_>>()
                .join("\n"),
            Format::Json => serde_json::to_string(self).expect("serializable"),
            Format::Csv => {
                let width = self.coefficients.first().map_or(0, Vec::len);
                let mut out = String::from("n");
                for level in 0..width {
                    let _ = write!(out, ",{}", self.first_level + level);
                }
                for (n, row) in self.coefficients.iter().enumerate() {
                    let _ = write!(out, "\n{n},{}", row.join(","));
                }
                out
            }
        }
    }
}

pub fn render_suites(reports: &[SuiteReport], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(&SuitesRecord { suites: reports }).expect("serializable"),
        Format::Csv => {
            let mut out = String::from("name,pass,cases");
            for r in reports {
                let _ = write!(out, "\n{},{},{}", r.name, r.pass, r.cases);
            }
            out
        }
        Format::Text => reports
            .iter()
            .map(|r| {
                let mut line = format!(
                    "{} {} ({} cases)",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    r.cases
                );
                for f in r.failures.iter().take(3) {
                    let _ = write!(line, "\n    {f}");
                }
                line
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> OutputRecord {
        let mut params = Map::new();
        params.insert("t".into(), Value::from(0));
        OutputRecord::new("series", params, Format::Json, vec!["1".into(), "0".into(), "123456789012345678901234567890".into()])
    }

    #[test]
    fn text_is_comma_separated() {
        assert_eq!(record().render(Format::Text), "1,0,123456789012345678901234567890");
    }

    #[test]
    fn json_keeps_big_integers_as_strings() {
        let v: Value = serde_json::from_str(&record().render(Format::Json)).unwrap();
        assert_eq!(v["command"], "series");
        assert_eq!(v["coefficients"][2], "123456789012345678901234567890");
    }

    #[test]
    fn csv_has_one_line_per_coefficient() {
        let csv = record().render(Format::Csv);
        assert_eq!(csv.lines().count(), 4);
        assert_eq!(csv.lines().nth(1), Some("0,1"));
    }

    #[test]
    fn table_csv_shape() {
        let t = TableRecord {
            command: "table".into(),
            params: Map::new(),
            format: "csv".into(),
            first_level: 0,
            coefficients: vec![vec!["1".into(), "0".into()], vec!["0".into(), "1".into()]],
        };
        assert_eq!(t.render(Format::Csv), "n,0,1\n0,1,0\n1,0,1");
    }
}
