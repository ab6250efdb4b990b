//! Jacobi polynomials `P_n^{a,b}` with rational parameters, the transformed
//! family `p_n^{a,b}(x) = (x-1)^n P_n^{a,b}((x+1)/(x-1))`, and a registry of
//! classical identities evaluated as exact residuals.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::exactpoly::{binomial, factorial, format_rational, int, rational_sign, rising, Poly, Rational};
use crate::report::{params, CheckReport, Outcome, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiParams {
    pub n: usize,
    pub alpha: Rational,
    pub beta: Rational,
}

impl JacobiParams {
    pub fn new(n: usize, alpha: Rational, beta: Rational) -> Self {
        JacobiParams { n, alpha, beta }
    }

    pub fn ultraspherical(n: usize, alpha: Rational) -> Self {
        JacobiParams { n, beta: alpha.clone(), alpha }
    }
}

/// Coefficient of the `k`-th term of the defining finite sum, before the
/// `1/n!` factor: `C(n,k) (n+a+b+1)...(n+a+b+k) (a+k+1)...(a+n)`.
fn sum_coefficient(params: &JacobiParams, k: usize) -> Rational {
    let n = params.n;
    let top = int(n as i64) + &params.alpha + &params.beta + int(1);
    let tail = &params.alpha + int(k as i64 + 1);
    binomial(n, k) * rising(&top, k) * rising(&tail, n - k)
}

/// `P_n^{a,b}(x) = 1/n! sum_k C(n,k) (n+a+b+1)_k (a+k+1)_{n-k} ((x-1)/2)^k`.
#[allow(non_snake_case)]
pub fn jacobi_P(params: &JacobiParams) -> Poly {
    let half_shift = Poly::from_coeffs(vec![crate::exactpoly::rat(-1, 2), crate::exactpoly::rat(1, 2)]);
    let inv_fact = factorial(params.n).recip();
    let mut acc = Poly::zero();
    let mut power = Poly::one();
    for k in 0..=params.n {
        acc += &power.scale(&(sum_coefficient(params, k) * &inv_fact));
        power = &power * &half_shift;
    }
    acc
}

/// `p_n^{a,b}` via the denominator-free expansion
/// `1/n! sum_k C(n,k) (n+a+b+1)_k (a+k+1)_{n-k} (x-1)^{n-k}`.
pub fn jacobi_p(params: &JacobiParams) -> Poly {
    let x_minus_one = Poly::from_ints(&[-1, 1]);
    let inv_fact = factorial(params.n).recip();
    let mut acc = Poly::zero();
    let mut power = Poly::one();
    for k in (0..=params.n).rev() {
        acc += &power.scale(&(sum_coefficient(params, k) * &inv_fact));
        power = &power * &x_minus_one;
    }
    acc
}

/// `P_n^{a,a}` with the convention `P_{-1} = 0`.
fn ultra(n: i64, alpha: &Rational) -> Poly {
    if n < 0 {
        return Poly::zero();
    }
    jacobi_P(&JacobiParams::ultraspherical(n as usize, alpha.clone()))
}

/// `p_n^{a,b}` with the convention `p_{-1} = 0`.
fn small_p(n: i64, alpha: Rational, beta: Rational) -> Poly {
    if n < 0 {
        return Poly::zero();
    }
    jacobi_p(&JacobiParams::new(n as usize, alpha, beta))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityName {
    Symmetry,
    RecA,
    RecB,
    Diff,
    XComb,
    LemmaPlus,
    LemmaMinus,
    U0Bridge,
}

impl IdentityName {
    pub const ALL: [IdentityName; 8] = [
        IdentityName::Symmetry,
        IdentityName::RecA,
        IdentityName::RecB,
        IdentityName::Diff,
        IdentityName::XComb,
        IdentityName::LemmaPlus,
        IdentityName::LemmaMinus,
        IdentityName::U0Bridge,
    ];

    pub fn as_str(self) -> &'static str {
        rule(self).key
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityName {
    type Err = JacobiError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RULES.iter().find(|r| r.key == s).map(|r| r.name).ok_or_else(|| JacobiError::UnknownIdentity(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JacobiError {
    #[error("{identity} is undefined at n = {n}, alpha = {alpha}")]
    Degenerate { identity: IdentityName, n: usize, alpha: String },
    #[error("{0} needs the auxiliary index (aux >= 1)")]
    MissingAux(IdentityName),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}

/// Arguments shared by every registered identity. `beta` is read only by
/// `symmetry`; `aux` only by `u0_bridge`, where it is the row index `i` and
/// `n` is the offset `j - i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityArgs {
    pub n: usize,
    pub alpha: Rational,
    pub beta: Rational,
    pub aux: Option<usize>,
}

impl IdentityArgs {
    pub fn new(n: usize, alpha: Rational) -> Self {
        IdentityArgs { n, beta: alpha.clone(), alpha, aux: None }
    }

    pub fn with_beta(mut self, beta: Rational) -> Self {
        self.beta = beta;
        self
    }

    pub fn with_aux(mut self, aux: usize) -> Self {
        self.aux = Some(aux);
        self
    }
}

type Sides = (Poly, Poly);

struct IdentityRule {
    name: IdentityName,
    key: &'static str,
    build: fn(&IdentityArgs) -> Result<Sides, JacobiError>,
}

const RULES: &[IdentityRule] = &[
    IdentityRule { name: IdentityName::Symmetry, key: "symmetry", build: symmetry },
    IdentityRule { name: IdentityName::RecA, key: "rec_a", build: rec_a },
    IdentityRule { name: IdentityName::RecB, key: "rec_b", build: rec_b },
    IdentityRule { name: IdentityName::Diff, key: "diff", build: diff },
    IdentityRule { name: IdentityName::XComb, key: "xcomb", build: xcomb },
    IdentityRule { name: IdentityName::LemmaPlus, key: "lemma_plus", build: lemma_plus },
    IdentityRule { name: IdentityName::LemmaMinus, key: "lemma_minus", build: lemma_minus },
    IdentityRule { name: IdentityName::U0Bridge, key: "u0_bridge", build: u0_bridge },
];

fn rule(name: IdentityName) -> &'static IdentityRule {
    RULES.iter().find(|r| r.name == name).expect("every identity is registered")
}

/// Left-hand side minus right-hand side; zero certifies the identity at
/// these parameters.
pub fn identity_residual(name: IdentityName, args: &IdentityArgs) -> Result<Poly, JacobiError> {
    let (lhs, rhs) = identity_sides(name, args)?;
    Ok(&lhs - &rhs)
}

pub fn identity_sides(name: IdentityName, args: &IdentityArgs) -> Result<(Poly, Poly), JacobiError> {
    (rule(name).build)(args)
}

fn n_plus(args: &IdentityArgs, k: i64) -> Rational {
    int(args.n as i64 + k)
}

fn symmetry(args: &IdentityArgs) -> Result<Sides, JacobiError> {
    let lhs = jacobi_P(&JacobiParams::new(args.n, args.alpha.clone(), args.beta.clone()));
    let swapped = jacobi_P(&JacobiParams::new(args.n, args.beta.clone(), args.alpha.clone())).reflect();
    Ok((lhs, swapped.scale(&rational_sign(args.n))))
}

// (n+2a) P_n^{a,a} = 2(n+a) P_n^{a-1,a-1} + x(n+a) P_{n-1}^{a,a}
fn rec_a(args: &IdentityArgs) -> Result<Sides, JacobiError> {
    let n = args.n as i64;
    let a = &args.alpha;
    let a1 = a - int(1);
    let lhs = ultra(n, a).scale(&(n_plus(args, 0) + a + a));
    let rhs =
        &ultra(n, &a1).scale(&(int(2) * (n_plus(args, 0) + a))) + &ultra(n - 1, a).shl(1).scale(&(n_plus(args, 0) + a));
    Ok((lhs, rhs))
}

// x(n+2a) P_n^{a,a} = 2(n+1) P_{n+1}^{a-1,a-1} + (n+a) P_{n-1}^{a,a}
fn rec_b(args: &IdentityArgs) -> Result<Sides, JacobiError> {
    let n = args.n as i64;
    let a = &args.alpha;
    let a1 = a - int(1);
    let lhs = ultra(n, a).shl(1).scale(&(n_plus(args, 0) + a + a));
    let rhs = &ultra(n + 1, &a1).scale(&(int(2) * n_plus(args, 1))) + &ultra(n - 1, a).scale(&(n_plus(args, 0) + a));
    Ok((lhs, rhs))
}

fn diff(args: &IdentityArgs) -> Result<Sides, JacobiError> {
    let n = args.n as i64;
    let a = &args.alpha;
    let a1 = a - int(1);
    let one_minus_x = Poly::from_ints(&[1, -1]);
    let lhs = &one_minus_x * &ultra(n, a).scale(&(n_plus(args, 0) + a + a));
    let rhs = &(&ultra(n, &a1).scale(&(int(2) * (n_plus(args, 0) + a)))
        - &ultra(n + 1, &a1).scale(&(int(2) * n_plus(args, 1))))
        - &(&one_minus_x * &ultra(n - 1, a).scale(&(n_plus(args, 0) + a)));
    Ok((lhs, rhs))
}

// 2(n+1) P_{n+1}^{a-1,a-1} = 2x(n+a) P_n^{a-1,a-1} + (x^2-1)(n+a) P_{n-1}^{a,a}
fn xcomb(args: &IdentityArgs) -> Result<Sides, JacobiError> {
    let n = args.n as i64;
    let a = &args.alpha;
    let a1 = a - int(1);
    let lhs = ultra(n + 1, &a1).scale(&(int(2) * n_plus(args, 1)));
    let rhs = &ultra(n, &a1).shl(1).scale(&(int(2) * (n_plus(args, 0) + a)))
        + &(&Poly::from_ints(&[-1, 0, 1]) * &ultra(n - 1, a).scale(&(n_plus(args, 0) + a)));
    Ok((lhs, rhs))
}

/// `2 sum_k w^{n-k} P_k^{a+n-k,a+n-k}` against `(n+2a)/(n+a) P_n^{a,a} + sign P_{n-1}^{a,a}`.
fn lemma_sides(args: &IdentityArgs, identity: IdentityName, weight: Poly, sign: i64) -> Result<Sides, JacobiError> {
    let n = args.n;
    let a = &args.alpha;
    let denom = n_plus(args, 0) + a;
    if denom.is_zero() {
        return Err(JacobiError::Degenerate { identity, n, alpha: format_rational(a) });
    }
    let mut lhs = Poly::zero();
    for k in 0..=n {
        let shifted = a + int((n - k) as i64);
        lhs += &(&weight.pow((n - k) as u32) * &ultra(k as i64, &shifted));
    }
    let lhs = lhs.scale(&int(2));
    let ratio = (n_plus(args, 0) + a + a) / denom;
    let rhs = &ultra(n as i64, a).scale(&ratio) + &ultra(n as i64 - 1, a).scale(&int(sign));
    Ok((lhs, rhs))
}

fn lemma_plus(args: &IdentityArgs) -> Result<Sides, JacobiError> {
    let weight = Poly::from_coeffs(vec![crate::exactpoly::rat(1, 2), crate::exactpoly::rat(-1, 2)]);
    lemma_sides(args, IdentityName::LemmaPlus, weight, 1)
}

fn lemma_minus(args: &IdentityArgs) -> Result<Sides, JacobiError> {
    let weight = Poly::from_coeffs(vec![crate::exactpoly::rat(-1, 2), crate::exactpoly::rat(-1, 2)]);
    lemma_sides(args, IdentityName::LemmaMinus, weight, -1)
}

// (x-1)[(j/i) p_d^{-j,-1} + ((j-1)/i)(x-1) p_{d-1}^{-j+1,-1}] = x p_d^{-j,0} - p_d^{-j+2,-2}
fn u0_bridge(args: &IdentityArgs) -> Result<Sides, JacobiError> {
    let i = match args.aux {
        Some(i) if i >= 1 => i as i64,
        _ => return Err(JacobiError::MissingAux(IdentityName::U0Bridge)),
    };
    let d = args.n as i64;
    let j = i + d;
    let x_minus_one = Poly::from_ints(&[-1, 1]);
    let first = small_p(d, int(-j), int(-1)).scale(&crate::exactpoly::rat(j, i));
    let second = (&x_minus_one * &small_p(d - 1, int(1 - j), int(-1))).scale(&crate::exactpoly::rat(j - 1, i));
    let lhs = &x_minus_one * &(&first + &second);
    let rhs = &small_p(d, int(-j), int(0)).shl(1) - &small_p(d, int(2 - j), int(-2));
    Ok((lhs, rhs))
}

/// Parameter sample for the identity suite.
pub const SAMPLE: [(i64, i64); 11] =
    [(-4, 1), (-7, 2), (-3, 1), (-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1), (3, 1)];

pub fn sample() -> Vec<Rational> {
    SAMPLE.iter().map(|&(a, b)| crate::exactpoly::rat(a, b)).collect()
}

/// Largest index the lemmas and `u0_bridge` are swept to by default.
pub const LEMMA_DEPTH: usize = 12;

/// One point of a sweep: the identity and its arguments.
struct Point {
    name: IdentityName,
    args: IdentityArgs,
}

/// Runs `points` in order; the first nonzero residual fails the report and
/// degenerate points are split off as their own skipped reports.
fn sweep_report(label: BTreeMap<String, String>, points: Vec<Point>) -> Vec<CheckReport> {
    let name = points.first().map_or("jacobi", |p| p.name.as_str());
    let mut skipped = Vec::new();
    let mut report = CheckReport::timed(name, label, || {
        for p in &points {
            match identity_residual(p.name, &p.args) {
                Ok(r) if r.is_zero() => {}
                Ok(r) => {
                    return Outcome::Fail(Witness {
                        i: p.args.n,
                        j: p.args.aux.unwrap_or(0),
                        expected: "0".into(),
                        actual: r.to_string(),
                    })
                }
                Err(JacobiError::Degenerate { .. }) => skipped.push(p),
                Err(e) => {
                    return Outcome::Fail(Witness { i: p.args.n, j: 0, expected: "0".into(), actual: e.to_string() })
                }
            }
        }
        Outcome::Pass
    });
    report.parameters.insert("skipped_points".into(), skipped.len().to_string());
    let mut out = vec![report];
    for p in skipped {
        let parameters = params([("n", p.args.n.to_string()), ("alpha", format_rational(&p.args.alpha))]);
        out.push(CheckReport::new(p.name.as_str(), parameters, Outcome::SkippedDegenerate, 0.0));
    }
    out
}

/// Reports for one identity: per `alpha` (and `beta` for `symmetry`) over
/// `n <= depth`; per row `i <= depth` for `u0_bridge`.
pub fn identity_check(name: IdentityName, depth: usize) -> Vec<CheckReport> {
    let depth_s = depth.to_string();
    let mut groups: Vec<(BTreeMap<String, String>, Vec<Point>)> = Vec::new();
    match name {
        IdentityName::U0Bridge => {
            for i in 1..=depth {
                let points =
                    (i..=depth).map(|j| Point { name, args: IdentityArgs::new(j - i, int(0)).with_aux(i) }).collect();
                groups.push((params([("i", i.to_string()), ("j_max", depth_s.clone())]), points));
            }
        }
        IdentityName::Symmetry => {
            for a in sample() {
                for b in sample() {
                    let points = (0..=depth)
                        .map(|n| Point { name, args: IdentityArgs::new(n, a.clone()).with_beta(b.clone()) })
                        .collect();
                    let label = params([
                        ("alpha", format_rational(&a)),
                        ("beta", format_rational(&b)),
                        ("n_max", depth_s.clone()),
                    ]);
                    groups.push((label, points));
                }
            }
        }
        _ => {
            for a in sample() {
                let points = (0..=depth).map(|n| Point { name, args: IdentityArgs::new(n, a.clone()) }).collect();
                groups.push((params([("alpha", format_rational(&a)), ("n_max", depth_s.clone())]), points));
            }
        }
    }
    groups.into_par_iter().flat_map_iter(|(label, points)| sweep_report(label, points)).collect()
}

/// Every identity: the recurrences and `symmetry` to `depth`, the lemmas and
/// `u0_bridge` to `lemma_depth`.
pub fn suite(depth: usize, lemma_depth: usize) -> Vec<CheckReport> {
    IdentityName::ALL
        .iter()
        .flat_map(|&name| {
            let d = match name {
                IdentityName::LemmaPlus | IdentityName::LemmaMinus | IdentityName::U0Bridge => lemma_depth,
                _ => depth,
            };
            identity_check(name, d)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, RatFunc};

    fn sample() -> Vec<Rational> {
        [(-4, 1), (-7, 2), (-3, 1), (-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1), (3, 1)]
            .iter()
            .map(|&(a, b)| rat(a, b))
            .collect()
    }

    /// Hand expansion of the defining sum for n = 1.
    fn p1_by_hand(a: &Rational, b: &Rational) -> Poly {
        // (a+1) + (a+b+2)(x-1)/2
        let slope = (a + b + int(2)) / int(2);
        Poly::from_coeffs(vec![a + int(1) - &slope, slope])
    }

    #[test]
    fn first_members() {
        for a in sample() {
            for b in sample() {
                assert_eq!(jacobi_P(&JacobiParams::new(0, a.clone(), b.clone())), Poly::one());
                assert_eq!(jacobi_P(&JacobiParams::new(1, a.clone(), b.clone())), p1_by_hand(&a, &b));
            }
        }
        assert_eq!(jacobi_P(&JacobiParams::new(1, int(1), int(1))), Poly::from_ints(&[0, 2]));
    }

    #[test]
    fn degree_two_negative_parameters() {
        // n = 2, a = b = -3: coefficients 1/2 [ (a+1)(a+2) + 2(n+a+b+1)(a+2) u + (n+a+b+1)(n+a+b+2) u^2 ]
        // with u = (x-1)/2: 1/2 [2 + 6u + 6u^2] = 1 + 3u + 3u^2
        let u = Poly::from_coeffs(vec![rat(-1, 2), rat(1, 2)]);
        let expected = &(&Poly::one() + &u.scale(&int(3))) + &(&u * &u).scale(&int(3));
        assert_eq!(jacobi_P(&JacobiParams::ultraspherical(2, int(-3))), expected);
    }

    #[test]
    fn small_p_examples() {
        assert_eq!(jacobi_p(&JacobiParams::new(0, int(5), int(-2))), Poly::one());
        assert_eq!(jacobi_p(&JacobiParams::ultraspherical(1, int(-2))), Poly::from_ints(&[-1, -1]));
        assert_eq!(jacobi_p(&JacobiParams::ultraspherical(2, int(-3))), Poly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn small_p_matches_rational_substitution() {
        let x_minus_one = RatFunc::from_poly(Poly::from_ints(&[-1, 1]));
        let y = RatFunc::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[-1, 1])).unwrap();
        for n in 0..=8 {
            for a in sample().iter().step_by(2) {
                for b in sample().iter().step_by(3) {
                    let params = JacobiParams::new(n, a.clone(), b.clone());
                    let big = jacobi_P(&params);
                    let mut horner = RatFunc::zero();
                    for c in big.coeffs().iter().rev() {
                        horner = &(&horner * &y) + &RatFunc::from_rational(c.clone());
                    }
                    let cleared = &horner * &x_minus_one.pow(n as u32);
                    assert_eq!(cleared, RatFunc::from_poly(jacobi_p(&params)), "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn generic_degree_is_exact() {
        for n in 0..=10 {
            let p = jacobi_p(&JacobiParams::new(n, int(0), int(0)));
            assert_eq!(p.degree(), Some(n));
            for a in sample() {
                let q = jacobi_p(&JacobiParams::ultraspherical(n, a));
                assert!(q.degree().is_none_or(|d| d <= n));
            }
        }
    }

    #[test]
    fn lemma_examples() {
        let r = identity_residual(IdentityName::LemmaPlus, &IdentityArgs::new(0, int(3))).unwrap();
        assert!(r.is_zero());
        let (lhs, rhs) = identity_sides(IdentityName::LemmaPlus, &IdentityArgs::new(1, int(2))).unwrap();
        assert_eq!(lhs, Poly::from_ints(&[1, 5]));
        assert_eq!(lhs, rhs);
        let err = identity_residual(IdentityName::LemmaPlus, &IdentityArgs::new(2, int(-2))).unwrap_err();
        assert!(matches!(err, JacobiError::Degenerate { .. }));
    }

    #[test]
    fn bridge_example() {
        let (lhs, rhs) = identity_sides(IdentityName::U0Bridge, &IdentityArgs::new(1, int(0)).with_aux(1)).unwrap();
        assert_eq!(lhs, Poly::from_ints(&[1, 0, -1]));
        assert_eq!(rhs, Poly::from_ints(&[1, 0, -1]));
        assert_eq!(
            identity_residual(IdentityName::U0Bridge, &IdentityArgs::new(1, int(0))),
            Err(JacobiError::MissingAux(IdentityName::U0Bridge))
        );
    }

    #[test]
    fn lemma_minus_is_reflected_lemma_plus() {
        for n in 0..=10 {
            for a in sample() {
                let args = IdentityArgs::new(n, a.clone());
                let Ok(plus) = identity_residual(IdentityName::LemmaPlus, &args) else { continue };
                let minus = identity_residual(IdentityName::LemmaMinus, &args).unwrap();
                assert_eq!(minus, plus.reflect().scale(&rational_sign(n)));
                let (lp, _) = identity_sides(IdentityName::LemmaPlus, &args).unwrap();
                let (lm, _) = identity_sides(IdentityName::LemmaMinus, &args).unwrap();
                assert_eq!(lm, lp.reflect().scale(&rational_sign(n)));
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for name in IdentityName::ALL {
            assert_eq!(name.as_str().parse::<IdentityName>().unwrap(), name);
        }
        assert!("nope".parse::<IdentityName>().is_err());
    }
}
