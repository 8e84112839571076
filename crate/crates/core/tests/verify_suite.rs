use dcmkit::analysis::verify::run_verify;

#[test]
fn every_check_passes_on_a_fresh_seed() {
    for check in run_verify(11, 60).unwrap() {
        assert!(check.passed(), "{}: {:#?}", check.name, check.failures);
        assert!(check.cases > 0, "{} ran no cases", check.name);
    }
}
