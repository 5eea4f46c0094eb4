use mnforge::verify::{Suite, VerifyConfig};

fn run(suite: Suite) {
    let report = suite.run(&VerifyConfig::new(7));
    assert_eq!(report.failures(), 0, "{}", report.render());
    assert!(report.trials() > 0);
}

#[test]
fn field_suite() {
    run(Suite::Field);
}

#[test]
fn order_suite() {
    run(Suite::Order);
}

#[test]
fn series_suite() {
    run(Suite::Series);
}

#[test]
fn center_suite() {
    run(Suite::Center);
}

#[test]
fn gamma_suite() {
    run(Suite::Gamma);
}

#[test]
fn algebra_suite() {
    run(Suite::Algebra);
}

#[test]
fn herstein_suite() {
    run(Suite::Herstein);
}

#[test]
fn reports_are_deterministic() {
    let cfg = VerifyConfig { trials: Some(5), ..VerifyConfig::new(11) };
    for suite in Suite::ALL {
        assert_eq!(suite.run(&cfg).render(), suite.run(&cfg).render());
    }
}

#[test]
fn center_probe_sees_both_sides() {
    let (central, other) = mnforge::verify::center_balance(&VerifyConfig::new(7));
    assert!(central >= 30 && other >= 30, "{central} central, {other} not");
}
