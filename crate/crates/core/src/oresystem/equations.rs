use num_traits::Zero;

use super::{OreElem, OreError, OrePoly};
use crate::exactpoly::{binomial, factorial, int, rat, rational_sign, Poly, Rational};
use crate::report::{params, CheckReport, Outcome, Witness};

fn delta(x: i64) -> Rational {
    int(x)
}

/// `E^n p(H + n) - p(H - n) E^n`.
pub fn system_residual(p: &OrePoly, n: usize) -> OreElem {
    let n_r = delta(n as i64);
    &p.eval_h_plus(&n_r).left_e(n) - &p.eval_h_plus(&-n_r).right_e(n)
}

/// `Delta_1^k Delta_{c-1}^i p` with unnormalized differences
/// `Delta_h q(t) = q(t) - q(t - h)`; at `c = 1` the second factor vanishes.
fn derived(p: &OrePoly, k: usize, i: usize) -> OrePoly {
    let c_minus_one = p.c() - int(1);
    p.difference_pow(&int(1), k).difference_pow(&c_minus_one, i)
}

/// `ad_E^r q` evaluated at `H + shift`, times `E^e` on the right.
fn term(q: &OrePoly, r: usize, shift: &Rational, e: usize) -> OreElem {
    q.ad_e_pow(r).eval_h_plus(shift).right_e(e)
}

/// Left minus right side of `eq_n^k`:
///
/// `sum_{i<=k, j<=n-k} (-1)^i C(k,i) C(n-k,j) ad^{n-j-i} D_1^k D_{c-1}^i p(H+n-cj-i) E^{j+i}`
/// `- sum_{i<=k} (-1)^i C(k,i) ad^{k-i} D_1^k D_{c-1}^i p(H-n+2k-i) E^{n-k+i}`.
pub fn eq_residual(p: &OrePoly, n: usize, k: usize) -> Result<OreElem, OreError> {
    if k > n {
        return Err(OreError::Index { n, k, requirement: "n >= k" });
    }
    let c = p.c().clone();
    let mut acc = OreElem::zero(&c);
    for i in 0..=k {
        let q = derived(p, k, i);
        if q.is_zero() {
            continue;
        }
        let outer = rational_sign(i) * binomial(k, i);
        for j in 0..=(n - k) {
            let coeff = &outer * binomial(n - k, j);
            let shift = int(n as i64 - i as i64) - int(j as i64) * &c;
            acc = &acc + &term(&q, n - j - i, &shift, j + i).scale(&coeff);
        }
        let shift = int(2 * k as i64 - n as i64 - i as i64);
        acc = &acc - &term(&q, k - i, &shift, n - k + i).scale(&outer);
    }
    Ok(acc)
}

/// `eq_n^k` minus
/// `eq_n^{k-1} - 2 eq_{n-1}^{k-1} E + eq_{n-2}^{k-1} E^2 - ad_E(eq_{n-1}^{k-1}) + ad_E(eq_{n-2}^{k-1}) E`.
pub fn recursion_residual(p: &OrePoly, n: usize, k: usize) -> Result<OreElem, OreError> {
    if !(n > k && k > 0) {
        return Err(OreError::Index { n, k, requirement: "n > k > 0" });
    }
    let e0 = eq_residual(p, n, k - 1)?;
    let e1 = eq_residual(p, n - 1, k - 1)?;
    let e2 = eq_residual(p, n - 2, k - 1)?;
    let combination = &(&(&e0 - &e1.right_e(1).scale(&int(2))) + &e2.right_e(2)) - &e1.ad_e();
    let combination = &combination + &e2.ad_e().right_e(1);
    Ok(&eq_residual(p, n, k)? - &combination)
}

/// The displayed form of `eq_{n+1}^n`, computed directly:
///
/// `sum_i (-1)^i C(n,i) [ad^{n+1-i} D p(H+n+1-i) + ad^{n-i} D p(H+n+1-c-i) E] E^i`
/// `- sum_i (-1)^i C(n,i) ad^{n-i} D p(H+n-1-i) E^{i+1}` with `D = D_1^n D_{c-1}^i`.
pub fn eq_infty_residual(p: &OrePoly, n: usize) -> OreElem {
    let c = p.c().clone();
    let mut acc = OreElem::zero(&c);
    let n_i = n as i64;
    for i in 0..=n {
        let q = derived(p, n, i);
        if q.is_zero() {
            continue;
        }
        let coeff = rational_sign(i) * binomial(n, i);
        let i_i = i as i64;
        let first = term(&q, n + 1 - i, &int(n_i + 1 - i_i), i);
        let second = term(&q, n - i, &(int(n_i + 1 - i_i) - &c), i + 1);
        let right = term(&q, n - i, &int(n_i - 1 - i_i), i + 1);
        acc = &acc + &(&(&first + &second) - &right).scale(&coeff);
    }
    acc
}

/// The `c = 0` simplification of `eq_{n+1}^n`:
/// `sum_i C(n,i) [ad^{n+1-i} D_1^{n+i} p(H+n+1) E^i + ad^{n-i} D_1^{n+i} p(H+n+1) E^{i+1}]`
/// `- sum_i C(n,i) ad^{n-i} D_1^{n+i} p(H+n-1) E^{i+1}`.
pub fn corollary_c0_residual(p: &OrePoly, n: usize) -> Result<OreElem, OreError> {
    if !p.c().is_zero() {
        return Err(OreError::Domain("the c = 0 form needs c = 0".into()));
    }
    let c = p.c().clone();
    let mut acc = OreElem::zero(&c);
    let up = int(n as i64 + 1);
    let down = int(n as i64 - 1);
    for i in 0..=n {
        let q = p.difference_pow(&int(1), n + i);
        if q.is_zero() {
            continue;
        }
        let lhs = &term(&q, n + 1 - i, &up, i) + &term(&q, n - i, &up, i + 1);
        acc = &acc + &(&lhs - &term(&q, n - i, &down, i + 1)).scale(&binomial(n, i));
    }
    Ok(acc)
}

/// The `c = 1` simplification: `ad^{n+1} D_1^n p(H+n+1) + ad^n D_1^{n+1} p(H+n) E`.
pub fn corollary_c1_residual(p: &OrePoly, n: usize) -> Result<OreElem, OreError> {
    if *p.c() != int(1) {
        return Err(OreError::Domain("the c = 1 form needs c = 1".into()));
    }
    let dn = p.difference_pow(&int(1), n);
    let dn1 = dn.difference(&int(1));
    Ok(&term(&dn, n + 1, &int(n as i64 + 1), 0) + &term(&dn1, n, &int(n as i64), 1))
}

/// For `deg p = N`: `eq_{N+1}^N` equals `N! ad^{N+1}(p_N)`.
pub fn remark_top_form(p: &OrePoly) -> Option<OreElem> {
    let n = p.degree()?;
    Some(p.coeff(n).ad_e_pow(n + 1).scale(&factorial(n)))
}

/// For `deg p = N >= 1`: `eq_N^{N-1}` equals
/// `(N-1)! [ad^N(p_{N-1}) + N ad^N(p_N)(H + (N+1)/2) + N(N+1-Nc) ad^{N-1}(p_N) E]`.
pub fn remark_second_form(p: &OrePoly) -> Option<OreElem> {
    let n = p.degree().filter(|&n| n >= 1)?;
    let c = p.c();
    let n_r = int(n as i64);
    let top = p.coeff(n);
    let h_shift = Poly::linear(rat(n as i64 + 1, 2));
    let middle = top.ad_e_pow(n).right_h_poly(&h_shift).scale(&n_r);
    let last_coeff = &n_r * (int(n as i64 + 1) - &n_r * c);
    let last = top.ad_e_pow(n - 1).right_e(1).scale(&last_coeff);
    let sum = &(&p.coeff(n - 1).ad_e_pow(n) + &middle) + &last;
    Some(sum.scale(&factorial(n - 1)))
}

/// Degree of `p`, with the zero polynomial counted as degree 0.
fn degree0(p: &OrePoly) -> usize {
    p.degree().unwrap_or(0)
}

/// Checks that a `p` solving the first `deg p + 1` equations solves the next
/// `extra` ones too. Reports `hypothesis-not-met` when the first equations
/// already fail. Witness `i` is the failing `n`.
pub fn first_n_implies_all(p: &OrePoly, extra: usize) -> CheckReport {
    let big_n = degree0(p);
    let parameters = params([
        ("p", p.to_string()),
        ("c", crate::exactpoly::format_rational(p.c())),
        ("extra", extra.to_string()),
        ("hypothesis", format!("n = 1..{}", big_n + 1)),
    ]);
    CheckReport::timed("first_N_implies_all", parameters, || {
        if (1..=big_n + 1).any(|n| !system_residual(p, n).is_zero()) {
            return Outcome::HypothesisNotMet;
        }
        for n in big_n + 2..=big_n + 1 + extra {
            let r = system_residual(p, n);
            if !r.is_zero() {
                return Outcome::Fail(Witness { i: n, j: 0, expected: "0".into(), actual: r.to_string() });
            }
        }
        Outcome::Pass
    })
}

fn degree_one_residuals(p: &OrePoly) -> Result<[OreElem; 3], OreError> {
    if p.degree().is_some_and(|d| d > 1) {
        return Err(OreError::Domain(format!("degree_one_combination needs deg p <= 1, got {}", degree0(p))));
    }
    Ok([system_residual(p, 1), system_residual(p, 2), system_residual(p, 3)])
}

/// `res_3 - [2E res_2 + 2 res_2 E - E^2 res_1 - 3E res_1 E - res_1 E^2]` for
/// `deg p <= 1`, where `res_n` is the `n`-th system residual. Vanishes
/// identically: the third equation is this combination of the first two.
pub fn degree_one_combination(p: &OrePoly) -> Result<OreElem, OreError> {
    let [r1, r2, r3] = degree_one_residuals(p)?;
    let two = int(2);
    let from_r2 = &r2.left_e(1).scale(&two) + &r2.right_e(1).scale(&two);
    let from_r1 = &(&r1.left_e(2) + &r1.left_e(1).right_e(1).scale(&int(3))) + &r1.right_e(2);
    Ok(&r3 - &(&from_r2 - &from_r1))
}

/// Same as [`degree_one_combination`] with the weights
/// `2E res_2 + res_2 E - E^2 res_1 - E res_1 E - res_1 E^2`. The two results
/// differ by `res_2 E - 2E res_1 E`, which for constant `p = p_0` is
/// `-ad_E^2(p_0) E`; nonzero e.g. for `p = H^2` when `c != 0`.
pub fn degree_one_combination_unbalanced(p: &OrePoly) -> Result<OreElem, OreError> {
    let [r1, r2, r3] = degree_one_residuals(p)?;
    let from_r2 = &r2.left_e(1).scale(&int(2)) + &r2.right_e(1);
    let from_r1 = &(&r1.left_e(2) + &r1.left_e(1).right_e(1)) + &r1.right_e(2);
    Ok(&r3 - &(&from_r2 - &from_r1))
}

/// `ad_E(p(t+H)) - ad_E(p)(t+H) + Delta_c p(t+H) E`, where
/// `Delta_c q(t) = q(t) - q(t - c) = c d_c q(t)`.
pub fn id1_residual(p: &OrePoly) -> OrePoly {
    let lhs = p.subst_t_plus_h().ad_e_pow(1);
    let rhs = p.ad_e_pow(1).subst_t_plus_h();
    let correction = p.difference(p.c()).subst_t_plus_h().right_e(1);
    &(&lhs - &rhs) + &correction
}

/// `E^n p(t+H) - sum_j C(n,j) ad_E^{n-j}(p)(t - cj + H) E^j`.
pub fn id2_residual(p: &OrePoly, n: usize) -> OrePoly {
    let lhs = p.subst_t_plus_h().map_coeffs(|m| m.left_e(n));
    let mut rhs = OrePoly::zero(p.c());
    for j in 0..=n {
        let shift = -(int(j as i64) * p.c());
        let term = p.ad_e_pow(n - j).shift_t(&shift).subst_t_plus_h().right_e(j).scale(&binomial(n, j));
        rhs = &rhs + &term;
    }
    &lhs - &rhs
}

/// `E^n H^m - (H - nc)^m E^n`.
pub fn id3_residual(c: &Rational, n: usize, m: usize) -> OreElem {
    let lhs = &OreElem::e_pow(c, n) * &OreElem::monomial(c, int(1), 0, m);
    let h_shift = Poly::linear(-(int(n as i64) * c)).pow(m as u32);
    &lhs - &OreElem::from_h_poly(c, h_shift).right_e(n)
}
