use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{
    catalog, invert_triangular_minor, left_iterated_minor, lu_minor, minor, product_minor, right_iterated_minor, shift,
    CatalogParams, DenseMinor, InfMatError, InfMatrix, MatrixName,
};
use crate::exactpoly::{basis_change, binomial, factorial, int, rat, rising, BasisDirection, Poly, RatFunc, Rational};
use crate::report::{params, CheckReport, Outcome, Witness};

macro_rules! check_names {
    ($($variant:ident => $key:literal),+ $(,)?) => {
        /// Bounded verifications of the matrix identities.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum CheckName {
            $($variant),+
        }

        impl CheckName {
            /// Canonical report order.
            pub const ALL: &'static [CheckName] = &[$(CheckName::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CheckName::$variant => $key),+
                }
            }
        }

        impl FromStr for CheckName {
            type Err = InfMatError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($key => Ok(CheckName::$variant),)+
                    _ => Err(InfMatError::UnknownName(s.to_string())),
                }
            }
        }
    };
}

check_names! {
    VandermondeLdu => "vandermonde_LDU",
    PascalInverse => "pascal_inverse",
    PascalRecurrence => "pascal_recurrence",
    StirlingRecurrence => "stirling_recurrence",
    RightIteratedForms => "right_iterated_forms",
    VandermondePeriodic => "vandermonde_periodic",
    BasisRelation => "basis_relation",
    MRelation => "M_relation",
    PeriodicM0 => "periodic_M0",
    ThmL0 => "thm_L0",
    Biorthogonality => "biorthogonality",
    ThmU => "thm_U",
    LuMprime => "lu_Mprime",
    LuM0 => "lu_M0",
    FundamentalSequence => "fundamental_sequence",
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Runs one check on `n`-minors.
pub fn check(name: CheckName, n: usize) -> CheckReport {
    CheckReport::timed(name.as_str(), params([("n", n)]), || {
        if n == 0 {
            return Outcome::SkippedDegenerate;
        }
        run(name, n)
    })
}

/// Every check at size `n`, in parallel, reported in canonical order.
pub fn check_all(n: usize) -> Vec<CheckReport> {
    CheckName::ALL.par_iter().map(|&name| check(name, n)).collect()
}

fn run(name: CheckName, n: usize) -> Outcome {
    use CheckName::*;
    match name {
        VandermondeLdu => vandermonde_ldu(n),
        PascalInverse => pascal_inverse(n),
        PascalRecurrence => recurrence(MatrixName::P, MatrixName::T0P, n),
        StirlingRecurrence => recurrence(MatrixName::S, MatrixName::T0S, n),
        RightIteratedForms => right_iterated_forms(n),
        VandermondePeriodic => vandermonde_periodic(n),
        BasisRelation => basis_relation(n),
        MRelation => m_relation(n),
        PeriodicM0 => periodic_m0(n),
        ThmL0 => thm_l0(n),
        Biorthogonality => biorthogonality(n),
        ThmU => thm_u(n),
        LuMprime => lu_mprime(n),
        LuM0 => lu_m0(n),
        FundamentalSequence => fundamental_sequence(n),
    }
}

fn named(name: MatrixName) -> InfMatrix {
    catalog(name, &CatalogParams::default()).expect("parameter-free catalog entry")
}

fn sign_diagonal() -> InfMatrix {
    catalog(MatrixName::Dq, &CatalogParams::with_q(int(-1))).expect("q given")
}

fn same(expected: &DenseMinor, actual: &DenseMinor) -> Outcome {
    Outcome::from_witness(expected.first_difference(actual))
}

fn upper(m: &DenseMinor) -> Outcome {
    Outcome::from_witness(m.first_nonzero_where(|i, j| i > j).map(|(i, j)| Witness {
        i,
        j,
        expected: "0".into(),
        actual: m.get(i, j).to_string(),
    }))
}

fn polynomial(m: &DenseMinor) -> Outcome {
    Outcome::from_witness(m.first_non_polynomial().map(|(i, j)| Witness {
        i,
        j,
        expected: "a polynomial".into(),
        actual: m.get(i, j).to_string(),
    }))
}

fn lu_or_fail(a: &InfMatrix, n: usize) -> Result<(DenseMinor, DenseMinor), Outcome> {
    lu_minor(a, n).map_err(|e| match e {
        InfMatError::NoLu { k } => {
            Outcome::Fail(Witness { i: k, j: k, expected: "nonzero pivot".into(), actual: "0".into() })
        }
        other => unreachable!("lu_minor only fails with NoLu, got {other}"),
    })
}

fn minors(names: &[InfMatrix], n: usize) -> DenseMinor {
    names.iter().skip(1).fold(minor(&names[0], n), |acc, m| &acc * &minor(m, n))
}

/// `D_{-1} s(S)^t D_{-1}`: the monomial-to-Pochhammer coefficient map.
fn stirling_change(n: usize) -> DenseMinor {
    let d = sign_diagonal();
    minors(&[d.clone(), shift(&named(MatrixName::S)).transpose(), d], n)
}

fn m_prime() -> InfMatrix {
    named(MatrixName::M1pTilde).sub(&named(MatrixName::M2pTilde))
}

fn vandermonde_ldu(n: usize) -> Outcome {
    let v = minor(&named(MatrixName::V), n);
    let fst = minors(&[named(MatrixName::F), named(MatrixName::S).transpose()], n);
    let p = minor(&named(MatrixName::P), n);
    same(&v, &(&p * &fst)).and_then(|| match lu_or_fail(&named(MatrixName::V), n) {
        Ok((l, u)) => same(&p, &l).and_then(|| same(&fst, &u)),
        Err(o) => o,
    })
}

fn pascal_inverse(n: usize) -> Outcome {
    let d = sign_diagonal();
    let expected = minors(&[d.clone(), named(MatrixName::P), d], n);
    match invert_triangular_minor(&minor(&named(MatrixName::P), n)) {
        Ok(inv) => same(&expected, &inv),
        Err(_) => unreachable!("P has unit diagonal"),
    }
}

/// `A = s(A) T` and `A = T^L`.
fn recurrence(a: MatrixName, t: MatrixName, n: usize) -> Outcome {
    let (a, t) = (named(a), named(t));
    let expected = minor(&a, n);
    let via_shift = product_minor(&shift(&a), &t, n).expect("lower triangular factors");
    same(&expected, &via_shift).and_then(|| same(&expected, &left_iterated_minor(&t, n).expect("lower")))
}

/// `P = ones s(P)`, `S = P s(S)`, hence `P = ones^R` and `S = P^R`.
fn right_iterated_forms(n: usize) -> Outcome {
    let (p, s, ones) = (named(MatrixName::P), named(MatrixName::S), named(MatrixName::OnesLowerBand));
    let mp = minor(&p, n);
    let ms = minor(&s, n);
    same(&mp, &product_minor(&ones, &shift(&p), n).expect("lower"))
        .and_then(|| same(&ms, &product_minor(&p, &shift(&s), n).expect("lower")))
        .and_then(|| same(&mp, &right_iterated_minor(&ones, n).expect("lower")))
        .and_then(|| same(&ms, &right_iterated_minor(&p, n).expect("lower")))
}

/// The fundamental sequence of `V` is `ones^{-1}`, the `(1, -1)` bidiagonal
/// matrix, and its left iterate reduces `V` to `F S^t`.
fn vandermonde_periodic(n: usize) -> Outcome {
    let bidiagonal = InfMatrix::with_shape("T0V", super::Shape::LowerTriangular, |i, j| match i.checked_sub(j) {
        Some(0) => RatFunc::one(),
        Some(1) => RatFunc::from_int(-1),
        _ => RatFunc::zero(),
    });
    let t0 = minor(&bidiagonal, n);
    let inv_ones = invert_triangular_minor(&minor(&named(MatrixName::OnesLowerBand), n)).expect("unit diagonal");
    let reduced = &left_iterated_minor(&bidiagonal, n).expect("lower") * &minor(&named(MatrixName::V), n);
    let fst = minors(&[named(MatrixName::F), named(MatrixName::S).transpose()], n);
    same(&t0, &inv_ones).and_then(|| upper(&reduced)).and_then(|| same(&fst, &reduced))
}

/// Test coefficient vectors: the unit vectors, then one dense vector.
fn sample_vectors(n: usize) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> =
        (0..n).map(|k| (0..n).map(|j| if j == k { int(1) } else { int(0) }).collect()).collect();
    out.push((0..n as i64).map(|k| rat(k * k - 3, k + 1)).collect());
    out
}

fn apply(m: &DenseMinor, v: &[Rational]) -> Vec<RatFunc> {
    (1..=m.n()).map(|i| (1..=m.n()).fold(RatFunc::zero(), |acc, j| &acc + &m.get(i, j).scale(&v[j - 1]))).collect()
}

/// Both matrix forms of the monomial-to-Pochhammer change of basis agree with
/// each other and with the direct coefficient conversion. Witness `i` indexes
/// the sample vector and `j` the coefficient.
fn basis_relation(n: usize) -> Outcome {
    let d = sign_diagonal();
    let short = stirling_change(n);
    let long = minors(&[d.clone(), named(MatrixName::S).transpose(), d, named(MatrixName::P).transpose()], n);
    same(&long, &short).and_then(|| {
        for (idx, v) in sample_vectors(n).iter().enumerate() {
            let via_matrix = apply(&short, v);
            let direct = basis_change(v, BasisDirection::MonomialToPochhammer);
            for (j, (a, e)) in via_matrix.iter().zip(&direct).enumerate() {
                let e = RatFunc::from_rational(e.clone());
                if *a != e {
                    return Outcome::Fail(Witness {
                        i: idx + 1,
                        j: j + 1,
                        expected: e.to_string(),
                        actual: a.to_string(),
                    });
                }
            }
        }
        Outcome::Pass
    })
}

/// `M0 = (M1' - M2') F D_{-1} s(S)^t D_{-1}`.
fn m_relation(n: usize) -> Outcome {
    let right = &minor(&named(MatrixName::F), n) * &stirling_change(n);
    same(&minor(&named(MatrixName::M0Tilde), n), &(&minor(&m_prime(), n) * &right))
}

/// `T0^L M0` is upper triangular, and equals `U0 F (signed Stirling)`.
fn periodic_m0(n: usize) -> Outcome {
    let reduced =
        &left_iterated_minor(&named(MatrixName::T0), n).expect("lower") * &minor(&named(MatrixName::M0Tilde), n);
    upper(&reduced).and_then(|| same(&expected_u0_factor(n), &reduced))
}

fn expected_u0_factor(n: usize) -> DenseMinor {
    minors(&[named(MatrixName::U0Tilde), named(MatrixName::F), named(MatrixName::SignedStirlingUpper)], n)
}

/// `L' = (T0^{-1})^R` and `L'^{-1} = T0^L`, with `T0^{-1}` the cyclotomic
/// matrix.
fn thm_l0(n: usize) -> Outcome {
    let t0 = named(MatrixName::T0);
    let t0_inv = named(MatrixName::T0Inv);
    let inv = invert_triangular_minor(&minor(&t0, n)).expect("unit diagonal");
    same(&minor(&t0_inv, n), &inv)
        .and_then(|| same(&minor(&named(MatrixName::LpTilde), n), &right_iterated_minor(&t0_inv, n).expect("lower")))
        .and_then(|| same(&minor(&named(MatrixName::LpInvTilde), n), &left_iterated_minor(&t0, n).expect("lower")))
        .and_then(|| {
            let product = &minor(&named(MatrixName::LpTilde), n) * &minor(&named(MatrixName::LpInvTilde), n);
            same(&DenseMinor::identity(n), &product)
        })
}

/// `[(j/i) p_{i-j}^{j,j}] [p_{i-j}^{-i,-i}] = I`, the unsigned forms.
fn biorthogonality(n: usize) -> Outcome {
    let d = sign_diagonal();
    let unsigned_inv = minors(&[d.clone(), named(MatrixName::LpInvTilde), d.clone()], n);
    let unsigned_l = minors(&[d.clone(), named(MatrixName::LpTilde), d], n);
    same(&DenseMinor::identity(n), &(&unsigned_inv * &unsigned_l))
}

/// `(x - 1)^e` for any integer `e`.
fn x_minus_one_pow(e: i64) -> RatFunc {
    RatFunc::from_poly(Poly::from_ints(&[-1, 1])).powi(e).expect("nonzero base")
}

/// The coefficient sums defining `U1'` (`lower = i`, with the factor `x`) and
/// `U2'` (`lower = i - 2`, without it).
fn raw_u(i: usize, j: usize, first: bool) -> RatFunc {
    if i > j {
        return RatFunc::zero();
    }
    let lower = if first { int(i as i64) } else { int(i as i64 - 2) };
    let mut acc = RatFunc::zero();
    for r in 0..=(j - i) {
        let c = binomial(i - 1, r) * rising(&int((j - i - r + 1) as i64), i + r - 1) * rising(&lower, j - i - r);
        if c == int(0) {
            continue;
        }
        acc = &acc + &x_minus_one_pow(i as i64 - r as i64 - 1).scale(&c);
    }
    let acc = acc.scale(&factorial(j - 1).recip());
    if first {
        &acc * &RatFunc::from_poly(Poly::x())
    } else {
        acc
    }
}

fn thm_u(n: usize) -> Outcome {
    let raw1 = DenseMinor::from_fn(n, |i, j| raw_u(i, j, true));
    let raw2 = DenseMinor::from_fn(n, |i, j| raw_u(i, j, false));
    same(&raw1, &minor(&named(MatrixName::U1pTilde), n))
        .and_then(|| same(&raw2, &minor(&named(MatrixName::U2pTilde), n)))
}

/// Generic LU of `M1' - M2'` reproduces `L'` and `U1' - U2'`.
fn lu_mprime(n: usize) -> Outcome {
    let (l, u) = match lu_or_fail(&m_prime(), n) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let expected_l = minor(&named(MatrixName::LpTilde), n);
    let expected_u = &minor(&named(MatrixName::U1pTilde), n) - &minor(&named(MatrixName::U2pTilde), n);
    polynomial(&l)
        .and_then(|| polynomial(&u))
        .and_then(|| same(&expected_l, &l))
        .and_then(|| same(&expected_u, &u))
        .and_then(|| same(&minor(&m_prime(), n), &(&expected_l * &expected_u)))
}

/// Generic LU of `M0` reproduces `L0 = L'` and `U0 F (signed Stirling)`.
fn lu_m0(n: usize) -> Outcome {
    let m0 = named(MatrixName::M0Tilde);
    let (l, u) = match lu_or_fail(&m0, n) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let expected_l = minor(&named(MatrixName::L0Tilde), n);
    let expected_u = expected_u0_factor(n);
    polynomial(&l)
        .and_then(|| polynomial(&u))
        .and_then(|| same(&expected_l, &l))
        .and_then(|| same(&expected_u, &u))
        .and_then(|| same(&minor(&m0, n), &(&expected_l * &expected_u)))
}

/// `s(L) L^{-1} = T0` for the L factor of `M0`.
fn fundamental_sequence(n: usize) -> Outcome {
    let (l, _) = match lu_or_fail(&named(MatrixName::M0Tilde), n) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let inv = invert_triangular_minor(&l).expect("unit lower triangular");
    same(&minor(&named(MatrixName::T0), n), &(&l.shifted_to(n) * &inv))
}
