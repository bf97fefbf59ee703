//! Stable JSON envelope for everything the binary prints.

use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

/// One line of machine-readable output.  Floats are serialized in shortest
/// round-trip form, so parsing the JSON back recovers them bit-exactly.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: serde_json::Value,
    pub outputs: serde_json::Value,
    pub checks: serde_json::Value,
}

impl OutputRecord {
    pub fn new(command: &str, inputs: serde_json::Value, outputs: serde_json::Value) -> OutputRecord {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            outputs,
            checks: serde_json::Value::Null,
        }
    }

    pub fn with_checks(mut self, checks: serde_json::Value) -> OutputRecord {
        self.checks = checks;
        self
    }

    pub fn print(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("serializable"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_roundtrip_bit_exact() {
        let v = 0.1f64 + 0.2f64; // not representable prettily
        let rec = OutputRecord::new("t", serde_json::json!({ "x": v }), serde_json::Value::Null);
        let s = serde_json::to_string(&rec).unwrap();
        let back: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["inputs"]["x"].as_f64().unwrap().to_bits(), v.to_bits());
        assert_eq!(back["schema_version"], "1");
    }
}
