//! Persistent coefficient cache: a single JSON file mapping
//! `"<max_genus>:<m>"` to a serialized contribution table.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use diskgw::{rational, ContributionTable, Rational};
use serde_json::{json, Value};

use crate::CliError;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Default)]
pub struct CacheFile {
    pub entries: BTreeMap<String, ContributionTable>,
}

pub fn key(max_genus: usize, m: &Rational) -> String {
    format!("{max_genus}:{}", rational::format(m))
}

impl CacheFile {
    /// Read the cache at `path`; a missing file is an empty cache.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Self::default()),
            Err(e) => return Err(CliError::Io(format!("reading cache {}: {e}", path.display()))),
        };
        let corrupt = |why: String| CliError::Invariant(format!("cache {} is corrupt: {why}", path.display()));
        let v: Value = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
        match v.get("schema_version").and_then(Value::as_u64) {
            Some(SCHEMA_VERSION) => {}
            other => return Err(corrupt(format!("unsupported schema_version {other:?}"))),
        }
        let entries = v
            .get("entries")
            .cloned()
            .ok_or_else(|| corrupt("missing entries".into()))?;
        let entries: BTreeMap<String, ContributionTable> =
            serde_json::from_value(entries).map_err(|e| corrupt(e.to_string()))?;
        Ok(CacheFile { entries })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "entries": serde_json::to_value(&self.entries).expect("tables serialize"),
        })
    }

    /// Write to a temporary file next to `path`, then rename over it.
    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        let io = |e: std::io::Error| CliError::Io(format!("writing cache {}: {e}", path.display()));
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
        let mut text = serde_json::to_string_pretty(&self.to_json()).expect("cache serializes");
        text.push('\n');
        tmp.write_all(text.as_bytes()).map_err(io)?;
        tmp.persist(path).map_err(|e| io(e.error))?;
        Ok(())
    }
}
