//! Append-only JSON-lines ledger of exact results.

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::CliResult;

pub const ENV_DIR: &str = "SAWLAB_CACHE_DIR";
const FILE: &str = "ledger.jsonl";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub graph_key: String,
    pub kind: String,
    pub params: BTreeMap<String, u64>,
    pub n: usize,
    pub value: String,
}

type Key = (String, String, String, usize);

fn key(graph_key: &str, kind: &str, params: &BTreeMap<String, u64>, n: usize) -> Key {
    let p = serde_json::to_string(params).expect("params serialize");
    (graph_key.to_string(), kind.to_string(), p, n)
}

pub struct Cache {
    path: PathBuf,
    entries: HashMap<Key, String>,
}

impl Cache {
    /// Opens the ledger in `dir`, creating the directory if needed. Lines
    /// that do not parse, such as a torn final write, are skipped.
    pub fn open(dir: &Path) -> CliResult<Cache> {
        fs::create_dir_all(dir)?;
        let path = dir.join(FILE);
        let mut entries = HashMap::new();
        if path.exists() {
            let file = fs::File::open(&path)?;
            for line in BufReader::new(file).lines() {
                let line = line?;
                if let Ok(r) = serde_json::from_str::<Record>(&line) {
                    entries.insert(key(&r.graph_key, &r.kind, &r.params, r.n), r.value);
                }
            }
        }
        Ok(Cache { path, entries })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(
        &self,
        graph_key: &str,
        kind: &str,
        params: &BTreeMap<String, u64>,
        n: usize,
    ) -> Option<&str> {
        self.entries
            .get(&key(graph_key, kind, params, n))
            .map(String::as_str)
    }

    /// Appends the records not already present, in one write.
    pub fn put(&mut self, records: Vec<Record>) -> CliResult<()> {
        let mut text = String::new();
        for r in records {
            let k = key(&r.graph_key, &r.kind, &r.params, r.n);
            if self.entries.contains_key(&k) {
                continue;
            }
            text.push_str(&serde_json::to_string(&r).expect("record serializes"));
            text.push('\n');
            self.entries.insert(k, r.value);
        }
        if text.is_empty() {
            return Ok(());
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        file.write_all(text.as_bytes())?;
        file.flush()?;
        Ok(())
    }
}
