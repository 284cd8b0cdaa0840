use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use crate::error::CliResult;

/// Everything needed to reproduce a run.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub graph: Option<Value>,
    pub n: Option<usize>,
    pub n_list: Option<Vec<usize>>,
    pub count: Option<usize>,
    pub seed: Option<u64>,
    pub workers: usize,
    pub budget: u64,
    pub prefix_depth: usize,
    pub format: &'static str,
    pub cache: Option<String>,
    /// Command-specific arguments.
    pub extra: serde_json::Map<String, Value>,
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub summary: Vec<(&'static str, String)>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Table {
        Table {
            columns: columns.to_vec(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn note(&mut self, key: &'static str, value: impl Into<String>) {
        self.summary.push((key, value.into()));
    }
}

/// Ten significant digits.
pub fn sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.000000000".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..10).contains(&mag) {
        format!("{:.*}", (9 - mag) as usize, x)
    } else {
        format!("{x:.9e}")
    }
}

pub fn emit(out: &mut impl Write, config: &RunConfig, table: &Table) -> CliResult<()> {
    let version = sawlab_core::VERSION;
    match config.format {
        "json" => {
            let summary: serde_json::Map<String, Value> = table
                .summary
                .iter()
                .map(|(k, v)| (k.to_string(), Value::from(v.clone())))
                .collect();
            let doc = serde_json::json!({
                "version": version,
                "config": config,
                "columns": table.columns,
                "rows": table.rows,
                "summary": summary,
            });
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        _ => {
            writeln!(out, "# sawlab {version}")?;
            writeln!(
                out,
                "# config {}",
                serde_json::to_string(config).expect("config serializes")
            )?;
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(&table.columns).map_err(csv_err)?;
            for row in &table.rows {
                w.write_record(row).map_err(csv_err)?;
            }
            w.flush()?;
            drop(w);
            for (k, v) in &table.summary {
                writeln!(out, "# {k}={v}")?;
            }
        }
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> std::io::Error {
    std::io::Error::other(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_significant_digits() {
        assert_eq!(sig(1.618_033_988_749_895), "1.618033989");
        assert_eq!(sig(2.5), "2.500000000");
        assert_eq!(sig(123.456), "123.4560000");
        assert_eq!(sig(0.00123), "0.001230000000");
        assert_eq!(sig(-0.5), "-0.5000000000");
        assert_eq!(sig(1e-7), "1.000000000e-7");
        assert_eq!(sig(0.0), "0.000000000");
    }
}
