//! CSV data files: `#` provenance comments, one header row, numeric rows.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// 12 significant digits.
pub fn num(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    format!("{v:.11e}")
}

pub enum Cell {
    Num(f64),
    Int(usize),
    Text(&'static str),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(v) => num(*v),
            Cell::Int(k) => k.to_string(),
            Cell::Text(s) => (*s).to_string(),
        }
    }
}

pub struct Table {
    pub provenance: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            provenance: vec![
                ("generator".into(), format!("ohsz {}", env!("CARGO_PKG_VERSION"))),
                ("command".into(), command.into()),
            ],
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.provenance.push((key.into(), value.to_string()));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.provenance {
            writeln!(out, "# {k}: {v}").unwrap();
        }
        writeln!(out, "{}", self.columns.join(",")).unwrap();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
        out
    }
}

/// Numeric columns read back from a data file.
#[derive(Debug)]
pub struct Data {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Data {
    pub fn column(&self, k: usize) -> Result<Vec<f64>> {
        if k >= self.columns.len() {
            bail!("column {k} out of range ({} columns)", self.columns.len());
        }
        Ok(self.rows.iter().map(|r| r[k]).collect())
    }
}

pub fn read(path: &Path) -> Result<Data> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .with_context(|| format!("cannot open {}", path.display()))?;
    let columns: Vec<String> = rdr
        .headers()
        .with_context(|| format!("{}: missing header row", path.display()))?
        .iter()
        .map(String::from)
        .collect();
    if columns.is_empty() || columns.iter().all(|c| c.is_empty()) {
        bail!("{}: missing header row", path.display());
    }
    let mut rows = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec.with_context(|| format!("{}: malformed row {}", path.display(), line + 1))?;
        let row = rec
            .iter()
            .zip(&columns)
            .map(|(cell, name)| {
                cell.parse::<f64>()
                    .with_context(|| format!("{}: column {name} value {cell:?} is not numeric", path.display()))
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        bail!("{}: no data rows", path.display());
    }
    Ok(Data { columns, rows })
}
