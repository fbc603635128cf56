use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Cell {
    Num(f64),
    Text(String),
    Na,
}

impl Cell {
    pub fn num(&self) -> Option<f64> {
        match self {
            Cell::Num(x) => Some(*x),
            _ => None,
        }
    }

    fn csv(&self) -> String {
        match self {
            // Debug is the shortest round-trip form and switches to exponent notation
            Cell::Num(x) if x.is_finite() => format!("{x:?}"),
            Cell::Num(_) | Cell::Na => "NA".into(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) if x.is_finite() => json!(x),
            Cell::Text(s) => json!(s),
            _ => Value::Null,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Csv,
    Json,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Numeric values of one column (NA as None).
    pub fn values(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let i = self.column(name)?;
        Some(self.rows.iter().map(|r| r[i].num()).collect())
    }

    /// Rows whose `col` cell is the text `value`.
    pub fn filter(&self, col: &str, value: &str) -> Table {
        let Some(i) = self.column(col) else { return Table { columns: self.columns.clone(), rows: vec![] } };
        let rows = self.rows.iter().filter(|r| matches!(&r[i], Cell::Text(s) if s == value)).cloned().collect();
        Table { columns: self.columns.clone(), rows }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| e.to_string();
        let run = || -> std::result::Result<Vec<u8>, String> {
            w.write_record(&self.columns).map_err(io)?;
            for r in &self.rows {
                w.write_record(r.iter().map(Cell::csv)).map_err(io)?;
            }
            w.into_inner().map_err(|e| e.to_string())
        };
        String::from_utf8(run().expect("in-memory CSV write")).expect("UTF-8 fields")
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self.rows.iter().map(|r| Value::Array(r.iter().map(Cell::json).collect())).collect();
        let v = json!({ "columns": self.columns, "rows": rows });
        serde_json::to_string_pretty(&v).expect("table serializes") + "\n"
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    /// Reads back a table written by [`Table::to_csv`].
    pub fn from_csv(text: &str) -> Result<Table> {
        let err = |e: csv::Error| Error::Config(e.to_string());
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let columns = r.headers().map_err(err)?.iter().map(String::from).collect();
        let mut rows = Vec::new();
        for rec in r.records() {
            let rec = rec.map_err(err)?;
            rows.push(
                rec.iter()
                    .map(|s| match s {
                        "NA" => Cell::Na,
                        _ => s.parse::<f64>().map(Cell::Num).unwrap_or_else(|_| Cell::Text(s.to_string())),
                    })
                    .collect(),
            );
        }
        Ok(Table { columns, rows })
    }
}
