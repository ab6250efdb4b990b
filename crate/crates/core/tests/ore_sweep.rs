use orelim::exactpoly::{rat, Rational};
use orelim::oresystem::{suite, DEFAULT_C_VALUES};
use orelim::report::CheckStatus;

fn default_cs() -> Vec<Rational> {
    DEFAULT_C_VALUES.iter().map(|&(n, d)| rat(n, d)).collect()
}

#[test]
fn full_sweep_at_depth_three() {
    let reports = suite(3, &default_cs());
    let mut failed = Vec::new();
    for r in &reports {
        if r.status == CheckStatus::Fail {
            failed.push(format!("{} {:?}: {:?}", r.name, r.parameters, r.witness));
        }
    }
    assert!(failed.is_empty(), "{}", failed.join("\n"));
}
