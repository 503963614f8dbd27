use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumerator::FamilyRecord;
use crate::error::Error;

/// JSON schema for [`TableFormat::Json`] output.
pub const TABLE_SCHEMA: &str = include_str!("../../schema/table.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for TableFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(TableFormat::Json),
            "csv" => Ok(TableFormat::Csv),
            "markdown" | "md" => Ok(TableFormat::Markdown),
            _ => Err(Error::Parse(format!("format must be json, csv or markdown, got {s:?}"))),
        }
    }
}

/// One table row in display form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub schlafli_type: String,
    pub generator: Option<String>,
    pub face_vector: [usize; 3],
    pub edge_length: u32,
    pub face_shape: String,
    pub genus: usize,
    pub census: String,
    pub planar_lambda: Option<String>,
    pub family: String,
}

impl From<&FamilyRecord> for TableRow {
    fn from(r: &FamilyRecord) -> TableRow {
        let (f0, f1, f2) = r.face_vector;
        TableRow {
            schlafli_type: r.schlafli_type.clone(),
            generator: r.generator.clone(),
            face_vector: [f0, f1, f2],
            edge_length: r.edge_length,
            face_shape: r.face_shape.to_string(),
            genus: r.genus,
            census: r.census.clone(),
            planar_lambda: r.planar_lambda.as_ref().map(ToString::to_string),
            family: r.family_id.clone(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    families: Vec<TableRow>,
}

const HEADER: [&str; 9] =
    ["type", "generator", "face_vector", "edge_length", "face_shape", "genus", "census", "planar_lambda", "family"];

impl TableRow {
    fn cells(&self) -> [String; 9] {
        let [f0, f1, f2] = self.face_vector;
        [
            self.schlafli_type.clone(),
            self.generator.clone().unwrap_or_default(),
            format!("({f0},{f1},{f2})"),
            self.edge_length.to_string(),
            self.face_shape.clone(),
            self.genus.to_string(),
            self.census.clone(),
            self.planar_lambda.clone().unwrap_or_default(),
            self.family.clone(),
        ]
    }
}

pub fn render_table(records: &[FamilyRecord], format: TableFormat) -> Result<String, Error> {
    let rows: Vec<TableRow> = records.iter().map(TableRow::from).collect();
    match format {
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(&JsonTable { families: rows })?;
            s.push('\n');
            Ok(s)
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Internal(e.to_string());
            w.write_record(HEADER).map_err(io)?;
            for r in &rows {
                w.write_record(r.cells()).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
        }
        TableFormat::Markdown => {
            let mut s = String::new();
            let _ = writeln!(s, "| {} |", HEADER.join(" | "));
            let _ = writeln!(s, "|{}", "---|".repeat(HEADER.len()));
            for r in &rows {
                let mut cells = r.cells();
                for c in cells.iter_mut().filter(|c| c.is_empty()) {
                    *c = "---".to_string();
                }
                let _ = writeln!(s, "| {} |", cells.join(" | "));
            }
            Ok(s)
        }
    }
}

/// Parses a table previously written with [`TableFormat::Json`].
pub fn read_json_table(text: &str) -> Result<Vec<TableRow>, Error> {
    Ok(serde_json::from_str::<JsonTable>(text)?.families)
}
