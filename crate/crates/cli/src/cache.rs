//! Append-only file of computed results, one JSON record per line.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::output::Term;

pub const CACHE_ENV: &str = "QSCHUBERT_CACHE";

#[derive(Serialize, Deserialize)]
struct Record {
    engine: String,
    key: String,
    query: Value,
    result: Vec<Term>,
}

pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, Vec<Term>>,
}

/// SHA-256 of the canonical (sorted-key, compact) query JSON.
pub fn query_key(query: &Value) -> String {
    let canonical = serde_json::to_string(query).expect("JSON values serialize");
    Sha256::digest(canonical.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Cache {
    /// `--cache` wins over the environment variable; neither means no cache.
    pub fn locate(flag: Option<PathBuf>) -> Option<PathBuf> {
        flag.or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
    }

    pub fn open(path: &Path) -> Result<Cache> {
        let mut entries = HashMap::new();
        match File::open(path) {
            Ok(file) => {
                for line in BufReader::new(file).lines() {
                    let line = line.with_context(|| format!("reading cache {}", path.display()))?;
                    // a torn or foreign line is skipped, not fatal
                    let Ok(rec) = serde_json::from_str::<Record>(&line) else {
                        continue;
                    };
                    if rec.engine == qschubert::ENGINE_VERSION && rec.key == query_key(&rec.query) {
                        entries.insert(rec.key, rec.result);
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e).with_context(|| format!("opening cache {}", path.display())),
        }
        Ok(Cache {
            path: path.to_path_buf(),
            entries,
        })
    }

    pub fn get(&self, query: &Value) -> Option<&Vec<Term>> {
        self.entries.get(&query_key(query))
    }

    pub fn put(&mut self, query: &Value, result: &[Term]) -> Result<()> {
        let key = query_key(query);
        if self.entries.contains_key(&key) {
            return Ok(());
        }
        let rec = Record {
            engine: qschubert::ENGINE_VERSION.to_string(),
            key: key.clone(),
            query: query.clone(),
            result: result.to_vec(),
        };
        let mut line = serde_json::to_string(&rec)?;
        line.push('\n');
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("opening cache {}", self.path.display()))?;
        // one write per record so concurrent appenders never interleave within a line
        file.write_all(line.as_bytes())?;
        self.entries.insert(key, result.to_vec());
        Ok(())
    }
}
