use s6quartic::harness::{
    emit_report, run_checks, CheckRecord, OutputFormat, RunConfig, Selection, REGISTRY,
};

const GOLDEN: &str = include_str!("golden/full_suite.jsonl");

fn timeless(mut records: Vec<CheckRecord>) -> Vec<CheckRecord> {
    for r in &mut records {
        r.elapsed_ms = 0;
    }
    records
}

fn full_suite() -> Vec<CheckRecord> {
    timeless(run_checks(&RunConfig::default()).unwrap())
}

#[test]
fn full_suite_matches_golden_file() {
    let report = emit_report(&full_suite(), OutputFormat::Json);
    assert_eq!(report.lines().count(), 13);
    if std::env::var_os("BLESS").is_some() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/full_suite.jsonl");
        std::fs::write(path, &report).unwrap();
    }
    assert_eq!(report, GOLDEN);
}

#[test]
fn reruns_are_identical() {
    assert_eq!(full_suite(), full_suite());
}

#[test]
fn checks_are_independent() {
    let together = full_suite();
    for (spec, joint) in REGISTRY.iter().filter(|c| !c.exploratory).zip(&together) {
        let cfg = RunConfig {
            selected: Selection::Only(vec![spec.id.to_string()]),
            ..RunConfig::default()
        };
        let alone = timeless(run_checks(&cfg).unwrap());
        assert_eq!(&alone[0], joint, "{}", spec.id);
    }
}

#[test]
fn text_report_lists_every_check() {
    let text = emit_report(&full_suite(), OutputFormat::Text);
    for spec in REGISTRY.iter().filter(|c| !c.exploratory) {
        assert!(text.contains(spec.id));
    }
    assert!(text.ends_with("13/13 passed\n"));
}
