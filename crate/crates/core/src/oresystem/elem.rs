use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::OreError;
use crate::exactpoly::{format_rational, int, Poly, Rational};

/// Element `sum_a E^a q_a(H)` of the algebra `k<E, H : HE = E(H + c)>`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OreElem {
    c: Rational,
    terms: BTreeMap<usize, Poly>,
}

impl OreElem {
    pub fn zero(c: &Rational) -> Self {
        OreElem { c: c.clone(), terms: BTreeMap::new() }
    }

    pub fn one(c: &Rational) -> Self {
        Self::from_h_poly(c, Poly::one())
    }

    pub fn constant(c: &Rational, q: Rational) -> Self {
        Self::from_h_poly(c, Poly::constant(q))
    }

    /// `q(H)`.
    pub fn from_h_poly(c: &Rational, q: Poly) -> Self {
        Self::from_terms(c, [(0, q)])
    }

    pub fn e_pow(c: &Rational, a: usize) -> Self {
        Self::from_terms(c, [(a, Poly::one())])
    }

    pub fn h(c: &Rational) -> Self {
        Self::from_h_poly(c, Poly::x())
    }

    /// `q E^a H^b`.
    pub fn monomial(c: &Rational, q: Rational, a: usize, b: usize) -> Self {
        Self::from_terms(c, [(a, Poly::monomial(q, b))])
    }

    /// `sum E^a q_a(H)`; repeated powers are added.
    pub fn from_terms(c: &Rational, terms: impl IntoIterator<Item = (usize, Poly)>) -> Self {
        let mut out = Self::zero(c);
        for (a, q) in terms {
            out.add_term(a, &q);
        }
        out
    }

    fn add_term(&mut self, a: usize, q: &Poly) {
        if q.is_zero() {
            return;
        }
        let sum = match self.terms.get(&a) {
            Some(existing) => existing + q,
            None => q.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&a);
        } else {
            self.terms.insert(a, sum);
        }
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero `(a, q_a)` pairs in increasing `a`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Poly)> {
        self.terms.iter().map(|(a, q)| (*a, q))
    }

    pub fn coeff(&self, a: usize) -> Poly {
        self.terms.get(&a).cloned().unwrap_or_default()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(&self.c);
        }
        OreElem { c: self.c.clone(), terms: self.terms.iter().map(|(a, q)| (*a, q.scale(s))).collect() }
    }

    fn check_same(&self, other: &OreElem) -> Result<(), OreError> {
        if self.c == other.c {
            Ok(())
        } else {
            Err(OreError::AlgebraMismatch { left: format_rational(&self.c), right: format_rational(&other.c) })
        }
    }

    pub fn checked_add(&self, other: &OreElem) -> Result<OreElem, OreError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, q) in &other.terms {
            out.add_term(*a, q);
        }
        Ok(out)
    }

    /// `(E^a q(H)) (E^b r(H)) = E^{a+b} q(H + bc) r(H)`.
    pub fn checked_mul(&self, other: &OreElem) -> Result<OreElem, OreError> {
        self.check_same(other)?;
        let mut out = Self::zero(&self.c);
        for (b, r) in &other.terms {
            let shift = int(*b as i64) * &self.c;
            for (a, q) in &self.terms {
                out.add_term(a + b, &(&q.shift(&shift) * r));
            }
        }
        Ok(out)
    }

    /// `E^k m`.
    pub fn left_e(&self, k: usize) -> OreElem {
        OreElem { c: self.c.clone(), terms: self.terms.iter().map(|(a, q)| (a + k, q.clone())).collect() }
    }

    /// `m E^k`.
    pub fn right_e(&self, k: usize) -> OreElem {
        let shift = int(k as i64) * &self.c;
        OreElem { c: self.c.clone(), terms: self.terms.iter().map(|(a, q)| (a + k, q.shift(&shift))).collect() }
    }

    /// `m q(H)`.
    pub fn right_h_poly(&self, q: &Poly) -> OreElem {
        let mut out = Self::zero(&self.c);
        for (a, p) in &self.terms {
            out.add_term(*a, &(p * q));
        }
        out
    }

    /// `ad_E(m) = E m - m E`.
    pub fn ad_e(&self) -> OreElem {
        &self.left_e(1) - &self.right_e(1)
    }

    pub fn ad_e_pow(&self, r: usize) -> OreElem {
        (0..r).fold(self.clone(), |m, _| m.ad_e())
    }
}

impl fmt::Display for OreElem {
    /// Terms by increasing power of `E`: `q(H)` for `a = 0`, `q E^a` for a
    /// constant `q`, `E^a * (q(H))` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, q)| {
                let body = q.to_string_var("H");
                match (*a, q.is_constant()) {
                    (0, _) => body,
                    (a, true) => format!("{body} E^{a}"),
                    (a, false) => format!("E^{a} * ({body})"),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

// Operator forms panic on mismatched structure constants; the checked
// methods report them as errors instead.
impl Add for &OreElem {
    type Output = OreElem;
    fn add(self, rhs: &OreElem) -> OreElem {
        self.checked_add(rhs).expect("operands from the same algebra")
    }
}

impl Sub for &OreElem {
    type Output = OreElem;
    fn sub(self, rhs: &OreElem) -> OreElem {
        self + &(-rhs)
    }
}

impl Mul for &OreElem {
    type Output = OreElem;
    fn mul(self, rhs: &OreElem) -> OreElem {
        self.checked_mul(rhs).expect("operands from the same algebra")
    }
}

impl Neg for &OreElem {
    type Output = OreElem;
    fn neg(self) -> OreElem {
        OreElem { c: self.c.clone(), terms: self.terms.iter().map(|(a, q)| (*a, -q)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    #[test]
    fn defining_relation() {
        for c in [int(0), int(1), int(2), rat(1, 2), int(-1)] {
            let e = OreElem::e_pow(&c, 1);
            let h = OreElem::h(&c);
            assert_eq!(&e * &OreElem::one(&c), e);
            // [H, E] = cE
            assert_eq!(&(&h * &e) - &(&e * &h), e.scale(&c));
        }
        let c = int(1);
        let he = &OreElem::h(&c) * &OreElem::e_pow(&c, 1);
        assert_eq!(he, OreElem::from_terms(&c, [(1, Poly::from_ints(&[1, 1]))]));
    }

    #[test]
    fn e_squared_h_cubed() {
        let c = int(2);
        let lhs = &OreElem::e_pow(&c, 2) * &OreElem::monomial(&c, int(1), 0, 3);
        let h_minus_4 = OreElem::from_h_poly(&c, Poly::from_ints(&[-4, 1]).pow(3));
        assert_eq!(lhs, &h_minus_4 * &OreElem::e_pow(&c, 2));
        assert_eq!(lhs, OreElem::monomial(&c, int(1), 2, 3));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = OreElem::one(&int(0));
        let b = OreElem::one(&int(1));
        assert!(matches!(a.checked_mul(&b), Err(OreError::AlgebraMismatch { .. })));
    }

    #[test]
    fn adjoint_of_h() {
        for c in [int(0), int(3), rat(-1, 2)] {
            let h = OreElem::h(&c);
            assert_eq!(h.ad_e(), OreElem::e_pow(&c, 1).scale(&-c.clone()));
            assert!(h.ad_e_pow(2).is_zero());
            assert!(OreElem::e_pow(&c, 3).ad_e().is_zero());
        }
    }

    #[test]
    fn display_forms() {
        let c = int(0);
        assert_eq!(OreElem::zero(&c).to_string(), "0");
        assert_eq!(OreElem::monomial(&c, int(2), 2, 0).to_string(), "2 E^2");
        let m = OreElem::from_terms(&c, [(0, Poly::from_ints(&[1, -2, 1])), (1, Poly::from_ints(&[0, 3]))]);
        assert_eq!(m.to_string(), "H^2 - 2*H + 1 + E^1 * (3*H)");
    }
}
