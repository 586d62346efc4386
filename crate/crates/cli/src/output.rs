//! One report per command, rendered as plain text, JSON or CSV.

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

/// Whether a command verified what it checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Ok
        } else {
            Status::Mismatch
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub status: Status,
    /// JSON fields besides `schema` and `command`.
    pub body: Map<String, Value>,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub plain: String,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            status: Status::Ok,
            body: Map::new(),
            headers: Vec::new(),
            rows: Vec::new(),
            plain: String::new(),
        }
    }

    pub fn field(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.body.insert(key.to_string(), v.into());
        self
    }

    pub fn json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), 1.into());
        m.insert("command".into(), self.command.into());
        m.extend(self.body.clone());
        Value::Object(m)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json()).expect("json values serialise"),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
                    .trim_end()
                    .to_string()
            }
        }
    }
}

/// Columns padded to their widest cell.
pub fn aligned(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = vec![line(headers.to_vec())];
    out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    out.join("\n")
}
