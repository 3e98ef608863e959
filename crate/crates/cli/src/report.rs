use serde_json::{Map, Value};

use crate::Format;

/// Key-value summary plus optional per-case records.
#[derive(Default)]
pub struct Report {
    fields: Map<String, Value>,
    records: Vec<Map<String, Value>>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_owned(), value.into());
        self
    }

    pub fn record(&mut self, record: Map<String, Value>) {
        self.records.push(record);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut doc = self.fields.clone();
                if !self.records.is_empty() {
                    doc.insert(
                        "records".into(),
                        Value::Array(self.records.iter().cloned().map(Value::Object).collect()),
                    );
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                for r in &self.records {
                    let line: Vec<String> = r.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
                    out.push_str(&line.join(" "));
                    out.push('\n');
                }
                for (k, v) in &self.fields {
                    out.push_str(&format!("{k}: {}\n", plain(v)));
                }
                out
            }
        }
    }

    pub fn print(&self, format: Format) {
        print!("{}", self.render(format));
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
