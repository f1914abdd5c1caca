use std::ffi::OsString;
use std::path::Path;

use crate::error::{Error, Result};

/// Reads a flat `key = value` file. Blank lines and lines starting with `#`
/// are skipped; keys are flag names without the leading dashes.
pub fn parse_config_file(text: &str, path: impl AsRef<Path>) -> Result<Vec<(String, String)>> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
            path: path.as_ref().to_path_buf(),
            line: i + 1,
            message: format!("expected key = value, found {line:?}"),
        })?;
        let key = key.trim().trim_start_matches("--");
        if key.is_empty() || key == "config" {
            return Err(Error::Parse {
                path: path.as_ref().to_path_buf(),
                line: i + 1,
                message: format!("invalid key {key:?}"),
            });
        }
        entries.push((key.to_string(), value.trim().to_string()));
    }
    Ok(entries)
}

/// Turns config entries into command-line arguments. `key = true` becomes a
/// bare `--key`, `key = false` is dropped, anything else is `--key=value`.
pub fn config_to_args(entries: &[(String, String)]) -> Vec<OsString> {
    entries
        .iter()
        .filter_map(|(k, v)| match v.as_str() {
            "true" => Some(format!("--{k}")),
            "false" => None,
            _ => Some(format!("--{k}={v}")),
        })
        .map(OsString::from)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_files() {
        let e = parse_config_file("# comment\nn = 10\n\n--p=0.5\nno-timestamp = true\nx = false\n", "c").unwrap();
        assert_eq!(e.len(), 4);
        assert_eq!(config_to_args(&e), vec!["--n=10", "--p=0.5", "--no-timestamp"]);
        assert!(parse_config_file("n 10\n", "c").is_err());
        assert!(parse_config_file("config = other\n", "c").is_err());
    }
}
