use orelim::exactpoly::{rat, Rational};
use orelim::jacobi::{identity_residual, IdentityArgs, IdentityName, JacobiError};

fn sample() -> Vec<Rational> {
    [(-4, 1), (-7, 2), (-3, 1), (-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1), (3, 1)]
        .iter()
        .map(|&(a, b)| rat(a, b))
        .collect()
}

#[test]
fn symmetry_over_parameter_grid() {
    for n in 0..=15 {
        for a in sample() {
            for b in sample() {
                let args = IdentityArgs::new(n, a.clone()).with_beta(b.clone());
                let r = identity_residual(IdentityName::Symmetry, &args).unwrap();
                assert!(r.is_zero(), "symmetry n={n} a={a} b={b}: {r}");
            }
        }
    }
}

#[test]
fn recurrences_vanish() {
    for name in [IdentityName::RecA, IdentityName::RecB, IdentityName::Diff, IdentityName::XComb] {
        for n in 0..=15 {
            for a in sample() {
                let r = identity_residual(name, &IdentityArgs::new(n, a.clone())).unwrap();
                assert!(r.is_zero(), "{name} n={n} a={a}: {r}");
            }
        }
    }
}

#[test]
fn lemma_identities_vanish_off_the_pole() {
    let mut skipped = 0;
    for name in [IdentityName::LemmaPlus, IdentityName::LemmaMinus] {
        for n in 0..=12 {
            for a in sample() {
                match identity_residual(name, &IdentityArgs::new(n, a.clone())) {
                    Ok(r) => assert!(r.is_zero(), "{name} n={n} a={a}: {r}"),
                    Err(JacobiError::Degenerate { .. }) => {
                        assert_eq!(rat(n as i64, 1) + &a, rat(0, 1));
                        skipped += 1;
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    // n + a = 0 happens for a in {0,-1,-2,-3,-4} at n = -a, for both identities
    assert_eq!(skipped, 10);
}

#[test]
fn bridge_identity_on_triangle() {
    for i in 1..=12 {
        for j in i..=12 {
            let args = IdentityArgs::new(j - i, rat(0, 1)).with_aux(i);
            let r = identity_residual(IdentityName::U0Bridge, &args).unwrap();
            assert!(r.is_zero(), "u0_bridge i={i} j={j}: {r}");
        }
    }
}

#[test]
fn suite_reports() {
    use orelim::jacobi::{suite, LEMMA_DEPTH};
    use orelim::report::CheckStatus;
    let reports = suite(15, LEMMA_DEPTH);
    assert!(reports.iter().all(|r| r.status != CheckStatus::Fail));
    let skipped: Vec<_> = reports.iter().filter(|r| r.status == CheckStatus::SkippedDegenerate).collect();
    assert_eq!(skipped.len(), 10);
    assert!(skipped.iter().all(|r| r.name.starts_with("lemma_")));
    // 121 symmetry pairs, 11 alphas for each of six identities, 12 bridge rows
    assert_eq!(reports.len() - skipped.len(), 121 + 6 * 11 + 12);
}
