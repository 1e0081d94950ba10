use spheremotion::fuzz::{run_suite, Suite};

#[test]
fn every_suite_passes_on_a_fixed_seed() {
    for suite in Suite::ALL {
        let r = run_suite(suite, 1, 120);
        assert!(r.passed(), "{}", r.to_text());
    }
}

#[test]
fn reports_are_reproducible() {
    for suite in Suite::ALL {
        assert_eq!(run_suite(suite, 42, 30).to_json(), run_suite(suite, 42, 30).to_json());
    }
}
