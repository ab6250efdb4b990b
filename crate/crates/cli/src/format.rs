//! Serialized forms of minors and LU factors.

use orelim::infmat::DenseMinor;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// JSON form of a minor. Entries are canonical polynomial or rational
/// function strings in `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorJson {
    pub name: String,
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LuJson {
    pub name: String,
    pub n: usize,
    #[serde(rename = "L")]
    pub l: Vec<Vec<String>>,
    #[serde(rename = "U")]
    pub u: Vec<Vec<String>>,
}

impl MinorJson {
    pub fn new(name: &str, m: &DenseMinor) -> Self {
        MinorJson { name: name.to_string(), n: m.n(), entries: m.to_strings() }
    }

    /// Parses and validates: `n` must match a square `entries` array of
    /// well-formed entries.
    pub fn parse(json: &str) -> Result<(String, DenseMinor), CliError> {
        let raw: MinorJson =
            serde_json::from_str(json).map_err(|e| CliError::Usage(format!("invalid minor JSON: {e}")))?;
        let m = DenseMinor::from_strings(&raw.entries).map_err(|e| CliError::Usage(e.to_string()))?;
        if m.n() != raw.n {
            return Err(CliError::Usage(format!("n = {} but entries are {}x{}", raw.n, m.n(), m.n())));
        }
        Ok((raw.name, m))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("strings serialize")
    }
}

/// Parses a serialized minor and serializes it again.
pub fn reserialize_minor(json: &str) -> Result<String, CliError> {
    let (name, m) = MinorJson::parse(json)?;
    Ok(MinorJson::new(&name, &m).to_json())
}

fn csv_rows(rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 entries")
}

fn pretty_rows(rows: &[Vec<String>]) -> String {
    let n = rows.len();
    let widths: Vec<usize> = (0..n).map(|j| rows.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        out.push_str("  ");
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_minor(name: &str, m: &DenseMinor, format: Format) -> String {
    match format {
        Format::Json => MinorJson::new(name, m).to_json() + "\n",
        Format::Csv => csv_rows(&m.to_strings()),
        Format::Pretty => format!("{name}, {n}x{n} minor:\n{}", pretty_rows(&m.to_strings()), n = m.n()),
    }
}

pub fn render_lu(name: &str, l: &DenseMinor, u: &DenseMinor, format: Format) -> String {
    let (ls, us) = (l.to_strings(), u.to_strings());
    match format {
        Format::Json => {
            let lu = LuJson { name: name.to_string(), n: l.n(), l: ls, u: us };
            serde_json::to_string(&lu).expect("strings serialize") + "\n"
        }
        Format::Csv => format!("{}\n{}", csv_rows(&ls), csv_rows(&us)),
        Format::Pretty => format!("L =\n{}U =\n{}", pretty_rows(&ls), pretty_rows(&us)),
    }
}
