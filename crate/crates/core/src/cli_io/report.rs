use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Envelope written by every command: the configuration echo, the per-trial
/// results in trial order, everything else as `aggregate`, and the verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub config: Value,
    pub trials: Vec<Value>,
    pub aggregate: Value,
    pub pass: bool,
    /// Seconds since the Unix epoch; left out when timestamps are disabled.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timestamp: Option<u64>,
}

impl Report {
    /// Splits a serialized result into `trials` (its `trials` field, if any)
    /// and `aggregate` (the rest).
    pub fn new(command: &str, config: &impl Serialize, result: &impl Serialize, pass: bool) -> Result<Self> {
        let (trials, aggregate) = match serde_json::to_value(result)? {
            Value::Object(mut map) => {
                let trials = match map.remove("trials") {
                    Some(Value::Array(t)) => t,
                    Some(other) => vec![other],
                    None => Vec::new(),
                };
                (trials, Value::Object(map))
            }
            Value::Array(items) => (items, Value::Object(Map::new())),
            other => (Vec::new(), other),
        };
        Ok(Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            config: serde_json::to_value(config)?,
            trials,
            aggregate,
            pass,
            timestamp: None,
        })
    }

    pub fn with_timestamp(mut self) -> Self {
        self.timestamp = SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs());
        self
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json()?).map_err(|e| Error::io(path, e))
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(serde_json::from_str(&text)?)
    }
}
