use std::fmt;
use std::str::FromStr;

use super::{system_residual, EndOp, OreElem, OreError, OrePoly};
use crate::exactpoly::{
    basis_change, binomial, factorial, format_rational, int, pochhammer, rational_sign, stirling2, BasisDirection,
    Poly, Rational,
};
use crate::report::{params, CheckReport, Outcome, Witness};

/// Basis of `k[t]` in which the coefficient vector of `p` is written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `t^j`
    Monomial,
    /// `(t)_j`
    Pochhammer,
}

impl Basis {
    pub const ALL: [Basis; 2] = [Basis::Monomial, Basis::Pochhammer];

    pub fn as_str(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Pochhammer => "pochhammer",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Basis {
    type Err = OreError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "monomial" => Ok(Basis::Monomial),
            "pochhammer" => Ok(Basis::Pochhammer),
            _ => Err(OreError::Domain(format!("unknown basis {s:?}"))),
        }
    }
}

fn h_poly(c: &Rational, q: Poly) -> OreElem {
    OreElem::from_h_poly(c, q)
}

/// `M_{ij} = L_E^i R_{(H+i)^{j-1}} - R_{(H-i)^{j-1} E^i}`, straight from the
/// system.
pub fn m_entry(c: &Rational, i: usize, j: usize) -> EndOp {
    let up = h_poly(c, Poly::linear(int(i as i64)).pow(j as u32 - 1));
    let down = h_poly(c, Poly::linear(int(-(i as i64))).pow(j as u32 - 1)).right_e(i);
    &EndOp::sandwich(OreElem::e_pow(c, i), up) - &EndOp::right(down)
}

/// `(M_0)_{ik} = i^{k-1} (L_E^i + (-1)^k R_E^i)`.
fn m0_entry(c: &Rational, i: usize, k: usize) -> EndOp {
    let e = OreElem::e_pow(c, i);
    let sum = &EndOp::left(e.clone()) + &EndOp::right(e).scale(&rational_sign(k));
    sum.scale(&int(i as i64).pow(k as i32 - 1))
}

/// `(P_{R_H}^t)_{kj} = C(j-1, k-1) R_{H^{j-k}}`.
fn pt_entry(c: &Rational, k: usize, j: usize) -> EndOp {
    if k > j {
        return EndOp::zero(c);
    }
    EndOp::right(h_poly(c, Poly::monomial(binomial(j - 1, k - 1), j - k)))
}

/// `(M'_1 - M'_2)_{ik} = L_E^i C(i+k-2, k-1) - R_E^i (-1)^{k-1} C(i, k-1)`.
fn m_prime_diff_entry(c: &Rational, i: usize, k: usize) -> EndOp {
    let e = OreElem::e_pow(c, i);
    let first = EndOp::left(e.clone()).scale(&binomial(i + k - 2, k - 1));
    let second = EndOp::right(e).scale(&(binomial(i, k - 1) * rational_sign(k - 1)));
    &first - &second
}

/// `((P'_{R_H})^t)_{kj} = C(j-1, k-1) R_{(H)_{j-k}}`.
fn ppt_entry(c: &Rational, k: usize, j: usize) -> EndOp {
    if k > j {
        return EndOp::zero(c);
    }
    EndOp::right(h_poly(c, pochhammer(j - k).scale(&binomial(j - 1, k - 1))))
}

/// `(M_0 P_{R_H}^t)_{ij}`.
pub fn m_monomial_entry(c: &Rational, i: usize, j: usize) -> EndOp {
    (1..=j).fold(EndOp::zero(c), |acc, k| &acc + &(&m0_entry(c, i, k) * &pt_entry(c, k, j)))
}

/// `M'_{ij} = ((M'_1 - M'_2) F (P'_{R_H})^t)_{ij}`.
pub fn m_prime_entry(c: &Rational, i: usize, j: usize) -> EndOp {
    (1..=j).fold(EndOp::zero(c), |acc, k| {
        let fk = factorial(k - 1);
        &acc + &(&m_prime_diff_entry(c, i, k) * &ppt_entry(c, k, j)).scale(&fk)
    })
}

/// `(D_{-1} s(S)^t D_{-1})_{kj} = (-1)^{k+j} S(j-1, k-1)`.
fn stirling_change_entry(k: usize, j: usize) -> Rational {
    if k > j {
        return int(0);
    }
    stirling2(j - 1, k - 1) * rational_sign(k + j)
}

/// `(M' D_{-1} s(S)^t D_{-1})_{ij}`.
pub fn m_via_pochhammer_entry(c: &Rational, i: usize, j: usize) -> EndOp {
    (1..=j).fold(EndOp::zero(c), |acc, k| &acc + &m_prime_entry(c, i, k).scale(&stirling_change_entry(k, j)))
}

/// Rewrites the coefficients of `p` between the `t^j` and `(t)_j` bases,
/// one scalar coordinate `E^a H^b` at a time.
pub fn convert_coefficients(p: &OrePoly, direction: BasisDirection) -> Vec<OreElem> {
    let c = p.c().clone();
    let len = p.coeffs().len();
    let mut keys: Vec<(usize, usize)> = Vec::new();
    for m in p.coeffs() {
        for (a, q) in m.terms() {
            for b in 0..q.coeffs().len() {
                if !keys.contains(&(a, b)) {
                    keys.push((a, b));
                }
            }
        }
    }
    let mut out = vec![OreElem::zero(&c); len];
    for (a, b) in keys {
        let column: Vec<Rational> = p.coeffs().iter().map(|m| m.coeff(a).coeff(b)).collect();
        for (j, v) in basis_change(&column, direction).into_iter().enumerate() {
            out[j] = &out[j] + &OreElem::monomial(&c, v, a, b);
        }
    }
    out
}

type EntryFn = fn(&Rational, usize, usize) -> EndOp;

/// Row `n` of the matrix representation applied to the coefficients of `p`,
/// minus the `n`-th system residual. Zero when the representation is
/// faithful on `p`.
pub fn rep_row_residual(p: &OrePoly, n: usize, basis: Basis) -> OreElem {
    let c = p.c().clone();
    let (coeffs, entry): (Vec<OreElem>, EntryFn) = match basis {
        Basis::Monomial => (p.coeffs().to_vec(), m_monomial_entry),
        Basis::Pochhammer => (convert_coefficients(p, BasisDirection::MonomialToPochhammer), m_prime_entry),
    };
    let row = coeffs.iter().enumerate().fold(OreElem::zero(&c), |acc, (j, x)| &acc + &entry(&c, n, j + 1).apply(x));
    &row - &system_residual(p, n)
}

/// Compares `M` with `M_0 P_{R_H}^t` (monomial) or `M' D_{-1} s(S)^t D_{-1}`
/// (Pochhammer) on the `n`-minor, entry by entry, by their action on
/// `E^a H^b` for `a, b <= d`.
pub fn rep_factorization_check(n: usize, d: usize, basis: Basis, c: &Rational) -> CheckReport {
    let parameters =
        params([("n", n.to_string()), ("d", d.to_string()), ("basis", basis.to_string()), ("c", format_rational(c))]);
    CheckReport::timed("rep_factorization", parameters, || {
        for i in 1..=n {
            for j in 1..=n {
                let direct = m_entry(c, i, j);
                let factored = match basis {
                    Basis::Monomial => m_monomial_entry(c, i, j),
                    Basis::Pochhammer => m_via_pochhammer_entry(c, i, j),
                };
                if let Some(((a, b), x, y)) = direct.first_disagreement(&factored, d) {
                    return Outcome::Fail(Witness {
                        i,
                        j,
                        expected: format!("E^{a} H^{b} -> {x}"),
                        actual: format!("E^{a} H^{b} -> {y}"),
                    });
                }
            }
        }
        Outcome::Pass
    })
}
