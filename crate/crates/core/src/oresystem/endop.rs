use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::OreElem;
use crate::exactpoly::{int, Rational};

/// Linear operator `m -> sum coeff * left * m * right` on the algebra.
/// Terms with equal `(left, right)` are merged; zero terms are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndOp {
    c: Rational,
    terms: Vec<(OreElem, OreElem, Rational)>,
}

impl EndOp {
    pub fn zero(c: &Rational) -> Self {
        EndOp { c: c.clone(), terms: Vec::new() }
    }

    pub fn identity(c: &Rational) -> Self {
        Self::sandwich(OreElem::one(c), OreElem::one(c))
    }

    /// `m -> left * m * right`.
    pub fn sandwich(left: OreElem, right: OreElem) -> Self {
        let c = left.c().clone();
        let mut op = Self::zero(&c);
        op.push(left, right, int(1));
        op
    }

    /// Left multiplication `L_x`.
    pub fn left(x: OreElem) -> Self {
        let c = x.c().clone();
        Self::sandwich(x, OreElem::one(&c))
    }

    /// Right multiplication `R_x`.
    pub fn right(x: OreElem) -> Self {
        let c = x.c().clone();
        Self::sandwich(OreElem::one(&c), x)
    }

    /// `ad_E = L_E - R_E`.
    pub fn ad_e(c: &Rational) -> Self {
        &Self::left(OreElem::e_pow(c, 1)) - &Self::right(OreElem::e_pow(c, 1))
    }

    fn push(&mut self, left: OreElem, right: OreElem, coeff: Rational) {
        if coeff.is_zero() || left.is_zero() || right.is_zero() {
            return;
        }
        if let Some(pos) = self.terms.iter().position(|(l, r, _)| *l == left && *r == right) {
            self.terms[pos].2 += coeff;
            if self.terms[pos].2.is_zero() {
                self.terms.remove(pos);
            }
        } else {
            self.terms.push((left, right, coeff));
        }
    }

    pub fn terms(&self) -> &[(OreElem, OreElem, Rational)] {
        &self.terms
    }

    pub fn scale(&self, s: &Rational) -> EndOp {
        let mut out = Self::zero(&self.c);
        for (l, r, k) in &self.terms {
            out.push(l.clone(), r.clone(), k * s);
        }
        out
    }

    pub fn apply(&self, m: &OreElem) -> OreElem {
        self.terms.iter().fold(OreElem::zero(&self.c), |acc, (l, r, k)| &acc + &(&(l * m) * r).scale(k))
    }

    /// `self o other`: `(L_a R_b) o (L_x R_y) = L_{ax} R_{yb}`.
    pub fn compose(&self, other: &EndOp) -> EndOp {
        let mut out = Self::zero(&self.c);
        for (l1, r1, k1) in &self.terms {
            for (l2, r2, k2) in &other.terms {
                out.push(l1 * l2, r2 * r1, k1 * k2);
            }
        }
        out
    }

    /// First basis element `E^a H^b` (`a, b <= d`) on which the two operators
    /// act differently, with both images.
    pub fn first_disagreement(&self, other: &EndOp, d: usize) -> Option<((usize, usize), OreElem, OreElem)> {
        for a in 0..=d {
            for b in 0..=d {
                let m = OreElem::monomial(&self.c, int(1), a, b);
                let (x, y) = (self.apply(&m), other.apply(&m));
                if x != y {
                    return Some(((a, b), x, y));
                }
            }
        }
        None
    }
}

impl Add for &EndOp {
    type Output = EndOp;
    fn add(self, rhs: &EndOp) -> EndOp {
        assert_eq!(self.c, rhs.c, "operands from the same algebra");
        let mut out = self.clone();
        for (l, r, k) in &rhs.terms {
            out.push(l.clone(), r.clone(), k.clone());
        }
        out
    }
}

impl Sub for &EndOp {
    type Output = EndOp;
    fn sub(self, rhs: &EndOp) -> EndOp {
        self + &(-rhs)
    }
}

impl Neg for &EndOp {
    type Output = EndOp;
    fn neg(self) -> EndOp {
        self.scale(&int(-1))
    }
}

impl Mul for &EndOp {
    type Output = EndOp;
    fn mul(self, rhs: &EndOp) -> EndOp {
        self.compose(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_and_right_actions_commute() {
        let c = int(2);
        let le = EndOp::left(OreElem::e_pow(&c, 1));
        let rh = EndOp::right(OreElem::h(&c));
        assert!((&le * &rh).first_disagreement(&(&rh * &le), 3).is_none());
    }

    #[test]
    fn composition_order() {
        let c = int(1);
        let (e, h) = (OreElem::e_pow(&c, 1), OreElem::h(&c));
        // R_E o R_H sends m to m H E
        let op = &EndOp::right(e.clone()) * &EndOp::right(h.clone());
        let m = OreElem::one(&c);
        assert_eq!(op.apply(&m), &h * &e);
        let ad = EndOp::ad_e(&c);
        assert_eq!(ad.apply(&h), h.ad_e());
        assert_eq!((&ad - &ad).terms().len(), 0);
    }
}
