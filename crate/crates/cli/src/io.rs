//! JSON documents on disk and the structured error type of the front end.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use infgon::Arc;

pub const FORMAT: &str = "infgon/1";

/// A persisted document: the payload plus a top-level `"format"` tag.
#[derive(Serialize)]
pub struct Versioned<'a, T: Serialize> {
    pub format: &'static str,
    #[serde(flatten)]
    pub body: &'a T,
}

#[derive(Deserialize)]
struct Incoming<T> {
    #[serde(default)]
    format: Option<String>,
    #[serde(flatten)]
    body: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub context: Value,
}

impl CliError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        CliError { code: code.to_string(), message: message.into(), context: Value::Null }
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "code": self.code, "message": self.message, "context": self.context }).to_string()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

impl std::error::Error for CliError {}

impl From<infgon::Error> for CliError {
    fn from(e: infgon::Error) -> Self {
        let context = serde_json::to_value(&e).ok().and_then(|v| v.get("context").cloned()).unwrap_or(Value::Null);
        CliError { code: e.code().to_string(), message: e.to_string(), context }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new("Io", e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::new("Parse", e.to_string())
    }
}

pub fn to_document<T: Serialize>(body: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string(&Versioned { format: FORMAT, body })?)
}

pub fn from_document<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    let doc: Incoming<T> = serde_json::from_str(text)?;
    match doc.format.as_deref() {
        None | Some(FORMAT) => Ok(doc.body),
        Some(other) => Err(CliError::new("UnsupportedFormat", format!("expected {FORMAT}, found {other}"))),
    }
}

pub fn read_document<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::new("Io", format!("{}: {e}", path.display())))?;
    from_document(&text)
}

/// Parses `a,b` where `b` may be `inf`.
pub fn parse_arc(s: &str) -> Result<Arc, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected a,b but got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b = b.trim();
    let arc = if matches!(b, "inf" | "∞") {
        Arc::new(a, infgon::MarkedPoint::Infinity)
    } else {
        Arc::new(a, b.parse::<i64>().map_err(|e| format!("{b:?}: {e}"))?)
    };
    arc.map_err(|e| e.to_string())
}

pub fn parse_list(s: &str) -> Result<Vec<u64>, String> {
    s.split(',').map(|t| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"))).collect()
}
