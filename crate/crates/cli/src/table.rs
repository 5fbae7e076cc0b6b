//! Column-ordered result tables with CSV and JSON writers. Floats are
//! emitted with 17 significant digits so every value re-parses bit-exact.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy)]
pub enum Cell {
    Float(f64),
    Int(u64),
    Bool(bool),
}

impl Cell {
    fn render(&self, out: &mut String) {
        match self {
            Cell::Float(v) => {
                let _ = write!(out, "{v:.16e}");
            }
            Cell::Int(v) => {
                let _ = write!(out, "{v}");
            }
            Cell::Bool(v) => {
                let _ = write!(out, "{v}");
            }
        }
    }
}

#[derive(Debug)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                cell.render(&mut out);
            }
            out.push('\n');
        }
        out
    }

    /// Array of objects, keys in column order (column names never need
    /// escaping).
    pub fn to_json(&self) -> String {
        let mut out = String::from("[\n");
        for (r, row) in self.rows.iter().enumerate() {
            out.push_str("  {");
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                let _ = write!(out, "\"{}\": ", self.columns[i]);
                cell.render(&mut out);
            }
            out.push('}');
            if r + 1 < self.rows.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("]\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_roundtrips_floats_exactly() {
        let values = [1.0 / 3.0, 7.023_742_570_534_373e5, f64::MIN_POSITIVE, 1e300];
        let mut t = Table::new(vec!["x"]);
        for &v in &values {
            t.push(vec![Cell::Float(v)]);
        }
        let csv = t.to_csv();
        for (line, &want) in csv.lines().skip(1).zip(&values) {
            let parsed: f64 = line.parse().unwrap();
            assert_eq!(parsed.to_bits(), want.to_bits());
        }
    }

    #[test]
    fn json_is_valid_and_ordered() {
        let mut t = Table::new(vec!["a", "b"]);
        t.push(vec![Cell::Float(1.5), Cell::Bool(true)]);
        t.push(vec![Cell::Int(42), Cell::Bool(false)]);
        let parsed: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(parsed[0]["a"].as_f64(), Some(1.5));
        assert_eq!(parsed[1]["a"].as_f64(), Some(42.0));
        assert_eq!(parsed[1]["b"], serde_json::Value::from(false));
    }
}
