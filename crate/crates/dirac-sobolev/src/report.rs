//! Structured experiment reports: rows of measured values plus named
//! pass/fail verdicts, with deterministic JSON and CSV encodings.
//!
//! Determinism is a contract here, not an accident: two runs with the same
//! configuration must produce byte-identical files. That is achieved by
//! (a) ordered maps everywhere (`BTreeMap`), (b) a fixed top-level field
//! order, and (c) atomic writes (temp file + rename), so a crashed run
//! never leaves a half-written report behind.
//!
//! The JSON encoding is the report serialized as-is. The CSV encoding is a
//! single file with `#`-prefixed metadata lines, a data table whose columns
//! are the union of all row keys (sorted), and a trailing verdict table:
//!
//! ```text
//! # experiment: p1_witness
//! # seed: 0
//! # param eps_list = [2.5, 1.25]
//! label,eps,ratio
//! eps=2.5,2.5,1.41
//! eps=1.25,1.25,1.63
//! check,pass,margin
//! ratio_strictly_increasing,true,0.22
//! ```

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process;

/// One named check with its outcome and a numeric margin: how far the
/// measured quantity sits on the passing side of its threshold (negative
/// when failing).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    pub margin: f64,
}

/// One measured configuration: a human-readable label plus named values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub label: String,
    pub values: BTreeMap<String, f64>,
}

impl Row {
    pub fn new(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            values: BTreeMap::new(),
        }
    }

    /// Builder-style value insertion.
    pub fn with(mut self, key: impl Into<String>, value: f64) -> Self {
        self.values.insert(key.into(), value);
        self
    }
}

/// A complete experiment outcome. Serializes with the fixed field order
/// `name, params, rows, verdicts, seed`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub name: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub rows: Vec<Row>,
    pub verdicts: Vec<Verdict>,
    pub seed: u64,
}

impl ExperimentReport {
    pub fn new(name: impl Into<String>, seed: u64) -> Self {
        Self {
            name: name.into(),
            params: BTreeMap::new(),
            rows: Vec::new(),
            verdicts: Vec::new(),
            seed,
        }
    }

    /// Records a parameter; accepts anything JSON-serializable.
    pub fn set_param(&mut self, key: impl Into<String>, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("parameter must be JSON-serializable");
        self.params.insert(key.into(), v);
    }

    pub fn push_row(&mut self, row: Row) {
        self.rows.push(row);
    }

    /// Adds a verdict; `margin` is clamped to a finite value so encodings
    /// stay valid JSON.
    pub fn push_verdict(&mut self, check: impl Into<String>, pass: bool, margin: f64) {
        let margin = if margin.is_finite() { margin } else { f64::MAX };
        self.verdicts.push(Verdict {
            check: check.into(),
            pass,
            margin,
        });
    }

    /// True when every verdict passed (and at least one verdict exists).
    pub fn all_pass(&self) -> bool {
        !self.verdicts.is_empty() && self.verdicts.iter().all(|v| v.pass)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json_string(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)
            .map_err(|e| Error::Format(format!("report serialization failed: {e}")))?;
        s.push('\n');
        Ok(s)
    }

    /// CSV with `#` metadata lines, a data table, and a verdict table.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# experiment: {}", self.name);
        let _ = writeln!(out, "# seed: {}", self.seed);
        for (k, v) in &self.params {
            let _ = writeln!(out, "# param {k} = {v}");
        }

        let columns: Vec<&String> = self
            .rows
            .iter()
            .flat_map(|r| r.values.keys())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let header: Vec<&str> = std::iter::once("label")
            .chain(columns.iter().map(|s| s.as_str()))
            .collect();
        let _ = writeln!(out, "{}", header.join(","));
        for row in &self.rows {
            let mut line = vec![row.label.clone()];
            for col in &columns {
                line.push(match row.values.get(*col) {
                    Some(v) => format!("{v}"),
                    None => String::new(),
                });
            }
            let _ = writeln!(out, "{}", line.join(","));
        }

        let _ = writeln!(out, "check,pass,margin");
        for v in &self.verdicts {
            let _ = writeln!(out, "{},{},{}", v.check, v.pass, v.margin);
        }
        out
    }
}

/// Writes `contents` to `path` atomically: the bytes land in a sibling
/// temp file first and are renamed into place, so readers never observe a
/// partial report.
pub fn write_atomic(path: impl AsRef<Path>, contents: &str) -> Result<()> {
    let path = path.as_ref();
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
    let file_name = path
        .file_name()
        .ok_or_else(|| Error::InvalidParam(format!("not a file path: {}", path.display())))?;
    let mut tmp_name = file_name.to_os_string();
    tmp_name.push(format!(".tmp-{}", process::id()));
    let tmp = match dir {
        Some(d) => d.join(&tmp_name),
        None => tmp_name.into(),
    };
    fs::write(&tmp, contents)?;
    if let Err(e) = fs::rename(&tmp, path) {
        let _ = fs::remove_file(&tmp);
        return Err(e.into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> ExperimentReport {
        let mut rep = ExperimentReport::new("demo", 7);
        rep.set_param("n", 16);
        rep.set_param("box_length", 5.0);
        rep.set_param("eps_list", vec![0.5, 0.25]);
        rep.push_row(Row::new("eps=0.5").with("ratio", 1.5).with("eps", 0.5));
        rep.push_row(Row::new("eps=0.25").with("ratio", 1.75).with("eps", 0.25));
        rep.push_verdict("increasing", true, 0.25);
        rep.push_verdict("fit", true, 0.08);
        rep
    }

    #[test]
    fn json_field_order_is_fixed() {
        let json = sample_report().to_json_string().unwrap();
        let name_pos = json.find("\"name\"").unwrap();
        let params_pos = json.find("\"params\"").unwrap();
        let rows_pos = json.find("\"rows\"").unwrap();
        let verdicts_pos = json.find("\"verdicts\"").unwrap();
        let seed_pos = json.rfind("\"seed\"").unwrap();
        assert!(name_pos < params_pos);
        assert!(params_pos < rows_pos);
        assert!(rows_pos < verdicts_pos);
        assert!(verdicts_pos < seed_pos);
        assert!(json.ends_with('\n'));
    }

    #[test]
    fn encodings_are_deterministic() {
        let a = sample_report();
        let b = sample_report();
        assert_eq!(a.to_json_string().unwrap(), b.to_json_string().unwrap());
        assert_eq!(a.to_csv_string(), b.to_csv_string());
    }

    #[test]
    fn csv_layout_has_metadata_data_and_verdicts() {
        let csv = sample_report().to_csv_string();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "# experiment: demo");
        assert_eq!(lines[1], "# seed: 7");
        assert!(lines[2].starts_with("# param box_length"));
        // Sorted column union after the label column.
        let header_idx = lines.iter().position(|l| l.starts_with("label,")).unwrap();
        assert_eq!(lines[header_idx], "label,eps,ratio");
        assert_eq!(lines[header_idx + 1], "eps=0.5,0.5,1.5");
        assert!(lines.contains(&"check,pass,margin"));
        assert!(lines.contains(&"increasing,true,0.25"));
    }

    #[test]
    fn all_pass_requires_verdicts_and_unanimity() {
        let mut rep = ExperimentReport::new("x", 0);
        assert!(!rep.all_pass(), "no verdicts yet");
        rep.push_verdict("a", true, 1.0);
        assert!(rep.all_pass());
        rep.push_verdict("b", false, -0.5);
        assert!(!rep.all_pass());
    }

    #[test]
    fn atomic_write_round_trips_and_leaves_no_temp() {
        let dir = std::env::temp_dir().join("report-test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("out.json");
        write_atomic(&path, "hello\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "hello\n");
        let leftovers: Vec<_> = fs::read_dir(&dir)
            .unwrap()
            .filter_map(|e| e.ok())
            .filter(|e| e.file_name().to_string_lossy().contains(".tmp-"))
            .collect();
        assert!(leftovers.is_empty(), "temp files left: {leftovers:?}");
        fs::remove_file(&path).unwrap();
    }

    #[test]
    fn atomic_write_into_missing_dir_fails_with_io() {
        let res = write_atomic("/nonexistent/deep/dir/out.json", "x");
        assert!(matches!(res, Err(Error::Io(_))));
    }
}
