//! Tabular output: a small column-oriented table that serializes to CSV
//! (with `#`-prefixed metadata lines) and to JSON. Formatting is
//! deterministic — the same table always produces byte-identical output —
//! so emitted files can be diffed and cached by content.

use serde::Serialize;

use crate::config::EvalConfig;
use crate::eval::EvalResult;

/// A table of string cells with named columns and metadata comments.
/// CSV form:
///
/// ```text
/// # key: value
/// col_a,col_b
/// 1,2
/// ```
#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub comments: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: Vec<S>) -> Self {
        Table {
            comments: Vec::new(),
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// Standard table for evaluated rows: `abscissa,value,method,err_est`,
    /// stamped with the hash of the configuration that produced it.
    pub fn for_eval(cfg: &EvalConfig) -> Self {
        let mut t = Table::new(vec!["abscissa", "value", "method", "err_est"]);
        t.push_comment(format!("config: {:016x}", cfg.hash()));
        t
    }

    /// Like [`Table::for_eval`] but with a leading `curve` column, for
    /// tables that hold several labelled curves.
    pub fn for_curves(cfg: &EvalConfig) -> Self {
        let mut t = Table::new(vec!["curve", "abscissa", "value", "method", "err_est"]);
        t.push_comment(format!("config: {:016x}", cfg.hash()));
        t
    }

    pub fn push_comment(&mut self, line: impl Into<String>) {
        self.comments.push(line.into());
    }

    pub fn push_row(&mut self, row: Vec<String>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row arity must match the header"
        );
        self.rows.push(row);
    }

    /// Append an `abscissa,value,method,err_est` row.
    pub fn push_eval(&mut self, abscissa: f64, r: &EvalResult) {
        self.push_row(vec![
            fmt_float(abscissa),
            fmt_float(r.value),
            r.method.to_string(),
            fmt_err(r.err_est),
        ]);
    }

    /// Append a `curve,abscissa,value,method,err_est` row.
    pub fn push_curve_eval(&mut self, curve: &str, abscissa: f64, r: &EvalResult) {
        self.push_row(vec![
            curve.to_string(),
            fmt_float(abscissa),
            fmt_float(r.value),
            r.method.to_string(),
            fmt_err(r.err_est),
        ]);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Shortest representation that round-trips the f64 exactly: plain decimal
/// in the human range, exponent notation for extreme magnitudes (plain
/// formatting would otherwise spell a 1e-44 value as fifty zeros).
pub fn fmt_float(v: f64) -> String {
    let a = v.abs();
    if v != 0.0 && (a < 1e-4 || a >= 1e16) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

/// Error estimates carry ~3 meaningful digits; fixed scientific form.
pub fn fmt_err(e: f64) -> String {
    format!("{e:.3e}")
}
