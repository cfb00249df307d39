use std::io;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use super::CatalogEntry;
use crate::codes::{EquivalenceKind, EquivalenceReport};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::Parse(format!("unknown report format {other:?}"))),
        }
    }
}

/// Compact JSON with `", "` and `": "` separators.
struct Spaced;

impl serde_json::ser::Formatter for Spaced {
    fn begin_array_value<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }
}

pub(crate) fn to_spaced_json<T: Serialize>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Spaced);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
}

#[derive(Serialize)]
pub(crate) struct JsonEquivalence {
    gcd_l: usize,
    kind: &'static str,
    verified: bool,
}

impl From<&EquivalenceReport> for JsonEquivalence {
    fn from(r: &EquivalenceReport) -> Self {
        JsonEquivalence {
            gcd_l: r.gcd_l,
            kind: kind_name(r.kind),
            verified: r.verified,
        }
    }
}

pub(crate) fn kind_name(kind: EquivalenceKind) -> &'static str {
    match kind {
        EquivalenceKind::Constacyclic => "constacyclic",
        EquivalenceKind::QuasiTwisted { .. } => "quasi-twisted",
    }
}

#[derive(Serialize)]
struct JsonEntry<'a> {
    components: &'a [String; 3],
    generator: &'a str,
    gray_params: (usize, usize, Option<usize>),
    distance_check: &'static str,
    equivalence: Option<JsonEquivalence>,
    self_dual: bool,
}

impl<'a> From<&'a CatalogEntry> for JsonEntry<'a> {
    fn from(e: &'a CatalogEntry) -> Self {
        let p = e.gray_params;
        JsonEntry {
            components: &e.components,
            generator: &e.generator,
            gray_params: (p.length, p.dimension, p.distance),
            distance_check: e.distance_check.as_str(),
            equivalence: e.equivalence.as_ref().map(JsonEquivalence::from),
            self_dual: e.self_dual,
        }
    }
}

const CSV_HEADER: [&str; 12] = [
    "f1",
    "f2",
    "f3",
    "generator",
    "length",
    "dimension",
    "distance",
    "distance_check",
    "gcd_l",
    "equivalence",
    "verified",
    "self_dual",
];

/// Renders a catalog: a JSON array with one entry per line, or CSV with a header.
pub fn render_report(entries: &[CatalogEntry], format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            if entries.is_empty() {
                return Ok("[]\n".into());
            }
            let lines = entries
                .iter()
                .map(|e| to_spaced_json(&JsonEntry::from(e)).map(|s| format!("  {s}")))
                .collect::<Result<Vec<_>>>()?;
            Ok(format!("[\n{}\n]\n", lines.join(",\n")))
        }
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            let csv_err = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(CSV_HEADER).map_err(csv_err)?;
            for e in entries {
                let p = e.gray_params;
                let eq = e.equivalence.as_ref();
                let record = [
                    e.components[0].clone(),
                    e.components[1].clone(),
                    e.components[2].clone(),
                    e.generator.clone(),
                    p.length.to_string(),
                    p.dimension.to_string(),
                    p.distance.map(|d| d.to_string()).unwrap_or_default(),
                    e.distance_check.as_str().to_string(),
                    eq.map(|r| r.gcd_l.to_string()).unwrap_or_default(),
                    eq.map(|r| kind_name(r.kind).to_string())
                        .unwrap_or_default(),
                    eq.map(|r| r.verified.to_string()).unwrap_or_default(),
                    e.self_dual.to_string(),
                ];
                w.write_record(&record).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
        }
    }
}

pub fn emit_report(entries: &[CatalogEntry], format: ReportFormat, path: &Path) -> Result<()> {
    std::fs::write(path, render_report(entries, format)?)?;
    Ok(())
}
