use cubiclab::construct::{run_fixture, RsciConfig};

#[test]
fn skew_planes_fixture() {
    let r = run_fixture("skew-planes", &RsciConfig::default()).unwrap();
    for c in &r.checks {
        println!("{} {} {}ms {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.millis, c.witness);
    }
    assert!(r.pass);
}

