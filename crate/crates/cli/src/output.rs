use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::config::{Format, RunConfig};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(&'static str),
    Num(f64),
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Text(s) => (*s).to_owned(),
            Cell::Num(v) => format_float(*v),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::from(*s),
            Cell::Num(v) => json!(v),
        }
    }
}

/// Shortest decimal that parses back to the same `f64`: plain notation for
/// moderate magnitudes, exponent notation otherwise.
pub fn format_float(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 {
        "0".to_owned()
    } else if (1e-4..1e15).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: RunConfig,
}

impl Provenance {
    pub fn new(config: &RunConfig) -> Self {
        Provenance {
            tool: "covosc",
            version: env!("CARGO_PKG_VERSION"),
            command: config.command.name(),
            config: config.clone(),
        }
    }
}

/// One command's output: header, ordered rows, and a footer of cross-check
/// results. `passed` is false when any cross-check missed its tolerance.
#[derive(Debug, Clone)]
pub struct Table {
    pub provenance: Provenance,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub footer: Map<String, Value>,
    pub passed: bool,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    fn footer_value(&self) -> Value {
        let mut footer = self.footer.clone();
        footer.insert("passed".into(), Value::Bool(self.passed));
        Value::Object(footer)
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_csv))
                .expect("in-memory write");
        }
        let body = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8");
        format!(
            "# {}\n{}# {}\n",
            serde_json::to_string(&self.provenance).expect("serializable"),
            body,
            self.footer_value()
        )
    }

    fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::to_json).collect()))
            .collect();
        let doc = json!({
            "provenance": self.provenance,
            "columns": self.columns,
            "rows": rows,
            "footer": self.footer_value(),
        });
        let mut s = serde_json::to_string(&doc).expect("serializable");
        s.push('\n');
        s
    }
}
