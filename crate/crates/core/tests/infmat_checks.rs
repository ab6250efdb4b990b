use orelim::infmat::{
    catalog, check, check_all, left_iterated_minor, lu_minor, minor, product_minor, right_iterated_minor, shift,
    CatalogParams, CheckName, DenseMinor, MatrixName,
};

fn named(name: MatrixName) -> orelim::infmat::InfMatrix {
    catalog(name, &CatalogParams::default()).unwrap()
}

#[test]
fn every_check_passes_through_twelve() {
    for report in check_all(12) {
        assert!(report.passed(), "{report:?}");
    }
    for n in 1..12 {
        for &name in CheckName::ALL {
            let r = check(name, n);
            assert!(r.passed(), "{r:?}");
        }
    }
}

#[test]
fn fixed_point_laws_through_twelve() {
    let lower = [
        MatrixName::T0,
        MatrixName::T0Inv,
        MatrixName::T0P,
        MatrixName::T0S,
        MatrixName::P,
        MatrixName::OnesLowerBand,
        MatrixName::LpTilde,
    ];
    for name in lower {
        let t = named(name);
        for n in 2..=12 {
            let tl = left_iterated_minor(&t, n).unwrap();
            assert_eq!(tl, &left_iterated_minor(&t, n - 1).unwrap().shifted_to(n) * &minor(&t, n), "{name} L n={n}");
            let tr = right_iterated_minor(&t, n).unwrap();
            assert_eq!(tr, &minor(&t, n) * &right_iterated_minor(&t, n - 1).unwrap().shifted_to(n), "{name} R n={n}");
        }
    }
}

#[test]
fn lu_factors_are_polynomial() {
    let m_prime = named(MatrixName::M1pTilde).sub(&named(MatrixName::M2pTilde));
    for a in [named(MatrixName::M0Tilde), m_prime] {
        let (l, u) = lu_minor(&a, 12).unwrap();
        assert!(l.first_non_polynomial().is_none());
        assert!(u.first_non_polynomial().is_none());
        assert_eq!(&l * &u, minor(&a, 12));
    }
}

#[test]
fn minor_of_product_law() {
    let pairs = [
        (MatrixName::P, MatrixName::V),
        (MatrixName::T0, MatrixName::M0Tilde),
        (MatrixName::M0Tilde, MatrixName::U0Tilde),
        (MatrixName::LpTilde, MatrixName::SignedStirlingUpper),
    ];
    for (a, b) in pairs {
        let (a, b) = (named(a), named(b));
        let lazy = a.product(&b).unwrap();
        for n in 1..=8 {
            assert_eq!(product_minor(&a, &b, n).unwrap(), minor(&lazy, n));
            assert_eq!(minor(&lazy, n), &minor(&a, n) * &minor(&b, n));
        }
    }
}

#[test]
fn shift_preserves_upper_left_identity() {
    let s = shift(&shift(&named(MatrixName::M0Tilde)));
    let m = minor(&s, 4);
    assert_eq!(m.corner(2), DenseMinor::identity(2));
    assert_eq!(m.get(3, 4), &named(MatrixName::M0Tilde).entry(1, 2));
}
