//! Output sinks and the CSV/JSON emitters.
//!
//! Both formats embed the fully resolved configuration so a file is
//! self-describing, and both are byte-deterministic for a given
//! configuration and seed (floats print in shortest round-trip form, field
//! order is fixed). Complex numbers occupy two CSV columns (re, im); the
//! point at infinity serializes as the literal token `inf` in both columns,
//! which plain f64/float parsers accept.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use gfrac::ExtendedComplex;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Where the rendered document goes: a file, or stdout when no path is set.
pub struct Sink {
    path: Option<PathBuf>,
}

impl Sink {
    pub fn new(path: Option<PathBuf>) -> Self {
        Self { path }
    }

    pub fn write(&self, content: &str) -> io::Result<()> {
        match &self.path {
            Some(p) => fs::write(p, content),
            None => io::stdout().write_all(content.as_bytes()),
        }
    }
}

/// Shortest round-trip decimal form; `inf` for infinities.
pub fn num(x: f64) -> String {
    if x.is_infinite() {
        String::from(if x > 0.0 { "inf" } else { "-inf" })
    } else {
        format!("{x}")
    }
}

/// Two CSV cells for a sphere point.
pub fn point_cells(x: &ExtendedComplex<f64>) -> (String, String) {
    match x {
        ExtendedComplex::Finite(z) => (num(z.re), num(z.im)),
        ExtendedComplex::Inf => ("inf".into(), "inf".into()),
    }
}

/// One JSON document per run: {config, records, report}.
#[derive(Serialize)]
pub struct Document<'a, Rec: Serialize, Rep: Serialize> {
    pub config: &'a super::ResolvedConfig,
    pub records: &'a [Rec],
    pub report: &'a Rep,
}

pub fn render_json<Rec: Serialize, Rep: Serialize>(doc: &Document<'_, Rec, Rep>) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable document");
    s.push('\n');
    s
}

/// CSV preamble: config (and optionally the report) as comment lines.
pub fn csv_preamble<Rep: Serialize>(
    config: &super::ResolvedConfig,
    report: Option<&Rep>,
) -> String {
    let mut s = format!(
        "# config: {}\n",
        serde_json::to_string(config).expect("serializable config")
    );
    if let Some(rep) = report {
        s.push_str(&format!(
            "# report: {}\n",
            serde_json::to_string(rep).expect("serializable report")
        ));
    }
    s
}
