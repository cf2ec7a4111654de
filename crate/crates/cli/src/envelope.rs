//! The JSON wrapper every command prints.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::format::round_floats;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportEnvelope {
    pub command: String,
    /// `sha256:<hex>` of the input bytes; absent for commands without input.
    pub input_digest: Option<String>,
    pub tool_version: String,
    pub payload: Value,
    pub warnings: Vec<String>,
}

impl ReportEnvelope {
    pub fn new(command: &str, input_digest: Option<String>, payload: Value) -> Self {
        ReportEnvelope {
            command: command.to_string(),
            input_digest,
            tool_version: TOOL_VERSION.to_string(),
            payload,
            warnings: Vec::new(),
        }
    }

    pub fn with_warnings(mut self, warnings: Vec<String>) -> Self {
        self.warnings = warnings;
        self
    }

    /// Pretty JSON with keys sorted and floats at six significant digits.
    pub fn render(&self) -> String {
        let value = round_floats(serde_json::to_value(self).expect("envelope serializes"));
        let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
        text.push('\n');
        text
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// `{"error": {"kind": ..., "message": ...}}`
pub fn error_object(kind: &str, message: &str) -> String {
    let v = serde_json::json!({ "error": { "kind": kind, "message": message } });
    let mut text = serde_json::to_string_pretty(&v).expect("value serializes");
    text.push('\n');
    text
}
