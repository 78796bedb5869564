//! The checked-in golden reports match a fresh run.

use std::fs;
use std::path::Path;

use vid::golden::{file_name, render};
use vidcore::theorems::run_claim;

#[test]
fn golden_reports_are_current() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../golden");
    let reports = run_claim("all").unwrap();
    let mut names = Vec::new();
    for r in &reports {
        let name = file_name(r);
        let stored = fs::read_to_string(dir.join(&name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(
            stored,
            render(r),
            "{name} is stale; regenerate with `vid verify all --golden golden`"
        );
        names.push(name);
    }
    let mut on_disk: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".json"))
        .collect();
    on_disk.sort();
    names.sort();
    assert_eq!(on_disk, names);
}

#[test]
fn check_names_are_unique_within_reports() {
    for r in run_claim("all").unwrap() {
        let mut names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(names.len(), before, "{}", r.label());
    }
}
