use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{OreElem, OreError};
use crate::exactpoly::{binomial, format_rational, Poly, Rational};

/// Polynomial `sum_j p_j t^j` in a central variable `t` with coefficients in
/// the Ore algebra. Trailing zero coefficients are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrePoly {
    c: Rational,
    coeffs: Vec<OreElem>,
}

impl OrePoly {
    pub fn zero(c: &Rational) -> Self {
        OrePoly { c: c.clone(), coeffs: Vec::new() }
    }

    /// Panics if a coefficient lives in a different algebra.
    pub fn from_coeffs(c: &Rational, coeffs: Vec<OreElem>) -> Self {
        assert!(coeffs.iter().all(|m| m.c() == c), "coefficients from the same algebra");
        let mut p = OrePoly { c: c.clone(), coeffs };
        p.trim();
        p
    }

    pub fn checked_from_coeffs(c: &Rational, coeffs: Vec<OreElem>) -> Result<Self, OreError> {
        if let Some(bad) = coeffs.iter().find(|m| m.c() != c) {
            return Err(OreError::AlgebraMismatch { left: format_rational(c), right: format_rational(bad.c()) });
        }
        Ok(Self::from_coeffs(c, coeffs))
    }

    pub fn constant(m: OreElem) -> Self {
        let c = m.c().clone();
        Self::from_coeffs(&c, vec![m])
    }

    /// `m t^d`.
    pub fn monomial(m: OreElem, d: usize) -> Self {
        let c = m.c().clone();
        let mut coeffs = vec![OreElem::zero(&c); d];
        coeffs.push(m);
        Self::from_coeffs(&c, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(OreElem::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn coeffs(&self) -> &[OreElem] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> OreElem {
        self.coeffs.get(j).cloned().unwrap_or_else(|| OreElem::zero(&self.c))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn map_coeffs(&self, f: impl Fn(&OreElem) -> OreElem) -> OrePoly {
        Self::from_coeffs(&self.c, self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, s: &Rational) -> OrePoly {
        self.map_coeffs(|m| m.scale(s))
    }

    /// `ad_E^r` applied to every coefficient.
    pub fn ad_e_pow(&self, r: usize) -> OrePoly {
        self.map_coeffs(|m| m.ad_e_pow(r))
    }

    /// `p(t) E^k`.
    pub fn right_e(&self, k: usize) -> OrePoly {
        self.map_coeffs(|m| m.right_e(k))
    }

    /// `p(t + delta)`.
    pub fn shift_t(&self, delta: &Rational) -> OrePoly {
        let n = self.coeffs.len();
        let mut out = vec![OreElem::zero(&self.c); n];
        for (j, pj) in self.coeffs.iter().enumerate() {
            if pj.is_zero() {
                continue;
            }
            let mut power = crate::exactpoly::one();
            for i in (0..=j).rev() {
                out[i] = &out[i] + &pj.scale(&(binomial(j, i) * &power));
                power *= delta;
            }
        }
        Self::from_coeffs(&self.c, out)
    }

    /// Unnormalized backward difference `p(t) - p(t - h)`; `h = 0` gives 0.
    pub fn difference(&self, h: &Rational) -> OrePoly {
        self - &self.shift_t(&-h)
    }

    pub fn difference_pow(&self, h: &Rational, r: usize) -> OrePoly {
        let mut p = self.clone();
        for _ in 0..r {
            if p.is_zero() {
                break;
            }
            p = p.difference(h);
        }
        p
    }

    /// `sum_j p_j (H + delta)^j`, powers of `H + delta` on the right.
    pub fn eval_h_plus(&self, delta: &Rational) -> OreElem {
        let base = Poly::linear(delta.clone());
        let mut power = Poly::one();
        let mut acc = OreElem::zero(&self.c);
        for pj in &self.coeffs {
            if !pj.is_zero() {
                acc = &acc + &pj.right_h_poly(&power);
            }
            power = &power * &base;
        }
        acc
    }

    /// `p(t + H) = sum_i t^i sum_j C(j,i) p_j H^{j-i}`.
    pub fn subst_t_plus_h(&self) -> OrePoly {
        let n = self.coeffs.len();
        let mut out = vec![OreElem::zero(&self.c); n];
        for (j, pj) in self.coeffs.iter().enumerate() {
            if pj.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
                let h_pow = Poly::monomial(binomial(j, i), j - i);
                *slot = &*slot + &pj.right_h_poly(&h_pow);
            }
        }
        Self::from_coeffs(&self.c, out)
    }
}

impl fmt::Display for OrePoly {
    /// Semicolon-separated coefficients, lowest `t`-degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

impl Add for &OrePoly {
    type Output = OrePoly;
    fn add(self, rhs: &OrePoly) -> OrePoly {
        assert_eq!(self.c, rhs.c, "operands from the same algebra");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        OrePoly::from_coeffs(&self.c, (0..n).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect())
    }
}

impl Sub for &OrePoly {
    type Output = OrePoly;
    fn sub(self, rhs: &OrePoly) -> OrePoly {
        self + &(-rhs)
    }
}

impl Neg for &OrePoly {
    type Output = OrePoly;
    fn neg(self) -> OrePoly {
        self.map_coeffs(|m| -m)
    }
}
