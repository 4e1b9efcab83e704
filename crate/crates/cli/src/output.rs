use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use citenet::weights::WeightValue;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::failure::Failure;

/// Ordered key/value report of a run, shown as text or as one JSON line.
#[derive(Debug, Default)]
pub struct Summary {
    entries: Vec<(String, Value)>,
}

impl Summary {
    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.entries.push((key.to_string(), value.into()));
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.entries.iter().cloned().collect::<Map<_, _>>())
    }

    pub fn to_text(&self) -> String {
        let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (key, value) in &self.entries {
            let shown = match value {
                Value::String(s) => s.clone(),
                Value::Null => "-".to_string(),
                // 2 rather than 2.0, as in the other output files
                Value::Number(x) if x.is_f64() => x.as_f64().map_or_else(|| x.to_string(), |f| f.to_string()),
                other => other.to_string(),
            };
            out.push_str(&format!("{key:<width$}  {shown}\n"));
        }
        out
    }
}

/// JSON form of a weight: a number where it fits, else the decimal text.
pub fn weight_json(w: &WeightValue) -> Value {
    match w {
        WeightValue::Float(x) | WeightValue::Log(x) => json!(x),
        WeightValue::Exact(x) => match u64::try_from(x) {
            Ok(v) => json!(v),
            Err(_) => json!(x.to_string()),
        },
    }
}

/// Files of a run, kept in memory until the run has succeeded.
pub struct Outputs {
    dir: PathBuf,
    stem: String,
    files: Vec<(String, Vec<u8>)>,
}

impl Outputs {
    pub fn new(dir: &Path, input: &Path) -> Self {
        let stem = input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .filter(|s| !s.is_empty())
            .unwrap_or_else(|| "network".to_string());
        Outputs {
            dir: dir.to_path_buf(),
            stem,
            files: Vec::new(),
        }
    }

    /// Adds `<stem>.<suffix>`.
    pub fn add(&mut self, suffix: &str, contents: impl Into<Vec<u8>>) {
        self.files.push((format!("{}.{suffix}", self.stem), contents.into()));
    }

    /// Writes every file and then the manifest; returns the paths written.
    pub fn write(self, manifest: Manifest) -> Result<Vec<PathBuf>, Failure> {
        fs::create_dir_all(&self.dir).map_err(|e| Failure::io(self.dir.display(), e))?;
        let mut written = Vec::new();
        let mut listed = Vec::new();
        for (name, bytes) in &self.files {
            let path = self.dir.join(name);
            fs::write(&path, bytes).map_err(|e| Failure::io(path.display(), e))?;
            listed.push(json!({"file": name, "bytes": bytes.len(), "sha256": sha256(bytes)}));
            written.push(path);
        }
        let created = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let doc = json!({
            "tool": "citenet",
            "version": env!("CARGO_PKG_VERSION"),
            "command": manifest.command,
            "parameters": manifest.parameters,
            "input": {
                "path": manifest.input.display().to_string(),
                "bytes": manifest.input_bytes.len(),
                "sha256": sha256(manifest.input_bytes),
            },
            "outputs": listed,
            "summary": manifest.summary,
            "createdUnix": created,
        });
        let path = self.dir.join(format!("{}.{}.manifest.json", self.stem, manifest.command));
        let mut text = serde_json::to_string_pretty(&doc).expect("manifest serializes");
        text.push('\n');
        fs::write(&path, text).map_err(|e| Failure::io(path.display(), e))?;
        written.push(path);
        Ok(written)
    }
}

pub struct Manifest<'a> {
    pub command: &'a str,
    pub parameters: Value,
    pub input: &'a Path,
    pub input_bytes: &'a [u8],
    pub summary: Value,
}

fn sha256(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
