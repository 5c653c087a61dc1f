//! Command reports: an ordered list of `key: value` fields rendered either
//! as text lines or as one JSON document.

use serde::Serialize;
use serde_json::{Map, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    /// One JSON document.
    Doc,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub fields: Map<String, Value>,
    pub citations: Vec<String>,
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            fields: Map::new(),
            citations: Vec::new(),
            warnings: Vec::new(),
            exit_code: EXIT_OK,
        }
    }

    pub fn field(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.fields.insert(key.to_string(), v);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn cite(&mut self, name: &str) -> &mut Self {
        if !self.citations.iter().any(|c| c == name) {
            self.citations.push(name.to_string());
        }
        self
    }

    pub fn warn(&mut self, message: impl Into<String>) -> &mut Self {
        self.warnings.push(message.into());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Doc => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }

    fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (k, v) in &self.fields {
            match v {
                Value::Array(items) if items.iter().any(|i| !is_scalar(i)) || items.len() > 8 => {
                    out.push_str(&format!("{k}:\n"));
                    for i in items {
                        out.push_str(&format!("  - {}\n", scalar_text(i)));
                    }
                }
                _ => out.push_str(&format!("{k}: {}\n", scalar_text(v))),
            }
        }
        if !self.citations.is_empty() {
            out.push_str(&format!("citations: {}\n", self.citations.join("; ")));
        }
        out.push_str(&format!("exit_code: {}\n", self.exit_code));
        out
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) if items.iter().all(is_scalar) => {
            items.iter().map(scalar_text).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_doc() {
        let mut r = Report::new("analyze g.txt");
        r.field("verdict", "cocompactly cubulated")
            .field("vertices", 2)
            .field("names", ["a", "b"])
            .field("missing", Option::<u8>::None)
            .cite("x");
        assert_eq!(
            r.render(Format::Text),
            "command: analyze g.txt\nverdict: cocompactly cubulated\nvertices: 2\nnames: a, b\nmissing: none\ncitations: x\nexit_code: 0\n"
        );
        let doc: Value = serde_json::from_str(&r.render(Format::Doc)).unwrap();
        assert_eq!(doc["fields"]["vertices"], 2);
        assert_eq!(doc["exit_code"], 0);
        let keys: Vec<&String> = doc["fields"].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["verdict", "vertices", "names", "missing"]);
    }
}
