use dig_core::harness::{run_suite, suite_names, GraphStream, SuiteOptions};

#[test]
fn seeded_runs_are_reproducible() {
    for name in ["snf-invariance", "induced-monotone", "classifier-properties"] {
        let opts = SuiteOptions { seed: Some(11), ..SuiteOptions::default() };
        let a = run_suite(name, &opts).unwrap();
        let b = run_suite(name, &opts).unwrap();
        assert_eq!(a.payload(), b.payload(), "{name}");
        assert!(a.ok(), "{name}");
    }
}

#[test]
fn stream_overrides_generation() {
    // P4 and C4 as a supplied stream, plus a disconnected record that is skipped
    let stream = GraphStream::from_graph6("CR\nCr\nCA\n", false, false).unwrap();
    let opts = SuiteOptions { graph6: Some(stream.into_graphs()), ..SuiteOptions::default() };
    let r = run_suite("lambda2Z-equivalence", &opts).unwrap();
    assert_eq!(r.cases, 2);
    assert!(r.ok());
}

#[test]
fn every_suite_is_listed_once() {
    let names = suite_names();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), names.len());
    assert!(run_suite("missing", &SuiteOptions::default()).is_err());
}
