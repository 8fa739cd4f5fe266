//! The on-disk sequence cache and table export.
//!
//! Cache layout, with every value a decimal string:
//!
//! ```json
//! {
//!   "c": {"1": "1", "2": "1", "3": "2"},
//!   "a": {"1": "1"},
//!   "s": {"2": "2"},
//!   "provenance": {"c": {"1": "enumerated", "2": "enumerated", "3": "enumerated"},
//!                  "a": {"1": "enumerated"}, "s": {"2": "paper-table"}}
//! }
//! ```

use std::fmt;
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::enumerate::sequence::{Provenance, SeqName, SequenceTable};
use crate::error::{Error, Result};

/// One table per sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSet {
    pub c: SequenceTable,
    pub a: SequenceTable,
    pub s: SequenceTable,
}

impl Default for TableSet {
    fn default() -> Self {
        TableSet {
            c: SequenceTable::new(SeqName::C),
            a: SequenceTable::new(SeqName::A),
            s: SequenceTable::new(SeqName::S),
        }
    }
}

impl TableSet {
    pub fn get(&self, name: SeqName) -> &SequenceTable {
        match name {
            SeqName::C => &self.c,
            SeqName::A => &self.a,
            SeqName::S => &self.s,
        }
    }

    pub fn get_mut(&mut self, name: SeqName) -> &mut SequenceTable {
        match name {
            SeqName::C => &mut self.c,
            SeqName::A => &mut self.a,
            SeqName::S => &mut self.s,
        }
    }

    /// Merges every table of `other`; a differing value is a hard error.
    pub fn merge(&mut self, other: &TableSet) -> Result<()> {
        for name in SeqName::ALL {
            self.get_mut(name).merge(other.get(name))?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        to_json(SeqName::ALL.iter().map(|&n| self.get(n)))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let root: Value =
            serde_json::from_str(text).map_err(|e| Error::Cache(format!("not JSON: {e}")))?;
        let Value::Object(root) = root else {
            return Err(Error::Cache("top level must be an object".into()));
        };
        if let Some(bad) = root
            .keys()
            .find(|k| !matches!(k.as_str(), "c" | "a" | "s" | "provenance"))
        {
            return Err(Error::Cache(format!("unknown key {bad:?}")));
        }
        let empty = Map::new();
        let prov_root = match root.get("provenance") {
            None => &empty,
            Some(Value::Object(m)) => m,
            Some(_) => return Err(Error::Cache("\"provenance\" must be an object".into())),
        };
        if let Some(bad) = prov_root.keys().find(|k| SeqName::from_str(k).is_err()) {
            return Err(Error::Cache(format!("unknown key \"provenance.{bad}\"")));
        }
        let mut set = TableSet::default();
        for name in SeqName::ALL {
            let key = name.as_str();
            let values = match root.get(key) {
                None => continue,
                Some(Value::Object(m)) => m,
                Some(_) => return Err(Error::Cache(format!("\"{key}\" must be an object"))),
            };
            let provs = match prov_root.get(key) {
                None => &empty,
                Some(Value::Object(m)) => m,
                Some(_) => {
                    return Err(Error::Cache(format!(
                        "\"provenance.{key}\" must be an object"
                    )))
                }
            };
            if let Some(extra) = provs.keys().find(|k| !values.contains_key(*k)) {
                return Err(Error::Cache(format!(
                    "\"provenance.{key}.{extra}\" has no value"
                )));
            }
            let table = set.get_mut(name);
            for (index, value) in values {
                let at = format!("{key}.{index}");
                let n: usize = index.parse().map_err(|_| {
                    Error::Cache(format!("\"{at}\": index is not a decimal integer"))
                })?;
                let digits = value.as_str().ok_or_else(|| {
                    Error::Cache(format!("\"{at}\": value must be a decimal string"))
                })?;
                if digits.is_empty()
                    || !digits
                        .bytes()
                        .enumerate()
                        .all(|(i, b)| b.is_ascii_digit() || (i == 0 && b == b'-'))
                {
                    return Err(Error::Cache(format!(
                        "\"{at}\": {digits:?} is not a decimal integer"
                    )));
                }
                let v: BigInt = digits.parse().map_err(|_| {
                    Error::Cache(format!("\"{at}\": {digits:?} is not a decimal integer"))
                })?;
                let prov = provs
                    .get(index)
                    .ok_or_else(|| Error::Cache(format!("\"provenance.{at}\" is missing")))?
                    .as_str()
                    .and_then(|p| Provenance::from_str(p).ok())
                    .ok_or_else(|| {
                        Error::Cache(format!("\"provenance.{at}\" is not a known provenance"))
                    })?;
                table
                    .insert(n, v, prov)
                    .map_err(|e| Error::Cache(format!("\"{at}\": {e}")))?;
            }
        }
        Ok(set)
    }
}

fn to_json<'a>(tables: impl Iterator<Item = &'a SequenceTable>) -> String {
    let mut root = Map::new();
    let mut provs = Map::new();
    for t in tables {
        let mut values = Map::new();
        let mut prov = Map::new();
        for (n, v, p) in t.iter() {
            values.insert(n.to_string(), Value::String(v.to_string()));
            prov.insert(n.to_string(), Value::String(p.to_string()));
        }
        root.insert(t.name().to_string(), Value::Object(values));
        provs.insert(t.name().to_string(), Value::Object(prov));
    }
    root.insert("provenance".into(), Value::Object(provs));
    let mut text =
        serde_json::to_string_pretty(&Value::Object(root)).expect("JSON values serialize");
    text.push('\n');
    text
}

/// Reads the cache; a missing file gives empty tables.
pub fn load_cache(path: &Path) -> Result<TableSet> {
    match std::fs::read_to_string(path) {
        Ok(text) => TableSet::from_json(&text),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(TableSet::default()),
        Err(e) => Err(e.into()),
    }
}

/// Writes the cache through a temporary file in the same directory and
/// renames it into place.
pub fn save_cache(path: &Path, tables: &TableSet) -> Result<()> {
    write_atomic(path, tables.to_json().as_bytes())
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .map_err(|e| Error::Io(e.error.to_string()))?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// `n value` per line.
    Bfile,
    /// Header `n,value,provenance`.
    Csv,
    /// The cache layout restricted to one sequence.
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bfile" => Ok(ExportFormat::Bfile),
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::Domain(format!(
                "unsupported export format {other:?}"
            ))),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::Bfile => "bfile",
            ExportFormat::Csv => "csv",
            ExportFormat::Json => "json",
        })
    }
}

/// Renders one table. Rows are sorted by index.
pub fn export(table: &SequenceTable, format: ExportFormat) -> Result<String> {
    match format {
        ExportFormat::Bfile => Ok(table.iter().map(|(n, v, _)| format!("{n} {v}\n")).collect()),
        ExportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(["n", "value", "provenance"]).map_err(io)?;
            for (n, v, p) in table.iter() {
                w.write_record([n.to_string(), v.to_string(), p.to_string()])
                    .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("ASCII output"))
        }
        ExportFormat::Json => Ok(to_json(std::iter::once(table))),
    }
}

pub fn export_to_file(table: &SequenceTable, format: ExportFormat, path: &Path) -> Result<()> {
    write_atomic(path, export(table, format)?.as_bytes())
}
