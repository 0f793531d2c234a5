use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::schema::SCHEMA;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

/// Flat rows for CSV and LaTeX output.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let line = |cells: &[String]| cells.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(",");
        let mut out = line(&self.headers);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        out
    }

    /// A booktabs `tabular`.
    pub fn to_latex(&self) -> String {
        let mut out = format!("\\begin{{tabular}}{{{}}}\n\\toprule\n", "l".repeat(self.headers.len()));
        let line = |cells: &[String]| {
            format!("{} \\\\\n", cells.iter().map(|c| latex_cell(c)).collect::<Vec<_>>().join(" & "))
        };
        out.push_str(&line(&self.headers));
        out.push_str("\\midrule\n");
        for r in &self.rows {
            out.push_str(&line(r));
        }
        out.push_str("\\bottomrule\n\\end{tabular}\n");
        out
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn latex_cell(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            '&' | '%' | '$' | '#' | '_' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            _ => out.push(ch),
        }
    }
    out
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Serialize)]
pub struct Envelope {
    pub schema: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input_sha256: String,
    pub bounds: Value,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

impl Envelope {
    pub fn new(command: &str, input: &[u8], bounds: Value) -> Self {
        Envelope {
            schema: SCHEMA,
            tool: "cohint",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input_sha256: sha256_hex(input),
            bounds,
            status: "ok",
            error: None,
            result: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// A header comment carrying the provenance fields for CSV and LaTeX output.
pub fn provenance_comment(env: &Envelope, prefix: &str) -> String {
    format!(
        "{prefix} {} {} {} input_sha256={} bounds={}\n",
        env.tool, env.version, env.command, env.input_sha256, env.bounds
    )
}
