use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// `index,eigenvalue` rows in the given (ascending) order. Values use the
/// shortest decimal that parses back to the same `f64`.
pub fn format_eigenvalues(eigenvalues: &[f64]) -> String {
    let mut out = String::from("index,eigenvalue\n");
    for (i, v) in eigenvalues.iter().enumerate() {
        let _ = writeln!(out, "{i},{v}");
    }
    out
}

pub fn write_eigenvalues(eigenvalues: &[f64], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, format_eigenvalues(eigenvalues)).map_err(|e| Error::io(path, e))
}

pub fn read_eigenvalues(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_eigenvalues(&text, path)
}

pub fn parse_eigenvalues(text: &str, path: impl AsRef<Path>) -> Result<Vec<f64>> {
    let fail = |line: usize, message: String| Error::Parse {
        path: path.as_ref().to_path_buf(),
        line,
        message,
    };
    let mut lines = text.lines();
    if lines.next() != Some("index,eigenvalue") {
        return Err(fail(1, "expected header \"index,eigenvalue\"".into()));
    }
    let mut values = Vec::new();
    for (k, line) in lines.enumerate() {
        let lineno = k + 2;
        let (idx, value) = line
            .split_once(',')
            .ok_or_else(|| fail(lineno, format!("expected \"index,eigenvalue\", found {line:?}")))?;
        if idx.parse::<usize>().ok() != Some(k) {
            return Err(fail(lineno, format!("expected index {k}, found {idx:?}")));
        }
        values.push(value.parse().map_err(|_| fail(lineno, format!("bad number {value:?}")))?);
    }
    Ok(values)
}
