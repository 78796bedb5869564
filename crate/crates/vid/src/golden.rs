//! Golden report files: one pretty-printed JSON report per claim.

use std::fs;
use std::path::{Path, PathBuf};

use vidcore::theorems::TheoremReport;

use crate::error::{CliError, CliResult};
use crate::json;

/// File name for a report, e.g. `main_q3_d5.json`.
pub fn file_name(r: &TheoremReport) -> String {
    let mut name = r.claim.replace('-', "_");
    for (k, v) in &r.params {
        name.push('_');
        name.push_str(k);
        name.push_str(&v.to_string());
    }
    name.push_str(".json");
    name
}

pub fn render(r: &TheoremReport) -> String {
    let mut text = serde_json::to_string_pretty(&json::report(r)).expect("serializable");
    text.push('\n');
    text
}

/// Writes every report into `dir`, creating it if needed.
pub fn write_golden(dir: &Path, reports: &[TheoremReport]) -> CliResult<Vec<PathBuf>> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| CliError::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io(dir))?;
    let mut written = Vec::new();
    for r in reports {
        let path = dir.join(file_name(r));
        fs::write(&path, render(r)).map_err(io(&path))?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use vidcore::theorems::run_claim;

    #[test]
    fn names() {
        let r = vidcore::theorems::verify_theorem_main(3, 5).unwrap();
        assert_eq!(file_name(&r), "main_q3_d5.json");
        let r = run_claim("f4-quadratic").unwrap().remove(0);
        assert_eq!(file_name(&r), "f4_quadratic.json");
    }

    #[test]
    fn names_are_unique() {
        let reports = run_claim("all").unwrap();
        let mut names: Vec<String> = reports.iter().map(file_name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), reports.len());
    }

    #[test]
    fn writes_files() {
        let dir = tempfile::tempdir().unwrap();
        let reports = run_claim("admissible").unwrap();
        let written = write_golden(&dir.path().join("g"), &reports).unwrap();
        assert_eq!(written.len(), 1);
        let text = fs::read_to_string(&written[0]).unwrap();
        assert!(text.contains("\"claim\": \"admissible\""));
    }
}
