use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rational::{self, int, write_rational, Rational};
use super::PolyError;

/// Dense univariate polynomial over the rationals, coefficient `i` multiplying
/// `x^i`. Trailing zero coefficients are never stored, so the zero polynomial
/// has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from coefficients listed lowest degree first.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `x + a`.
    pub fn linear(a: Rational) -> Self {
        Self::from_coeffs(vec![a, rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Substitutes `q` for the variable: returns `self(q(x))`.
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `self(x + delta)`.
    pub fn shift(&self, delta: &Rational) -> Poly {
        if delta.is_zero() {
            return self.clone();
        }
        self.compose(&Poly::linear(delta.clone()))
    }

    /// `self(-x)`.
    pub fn reflect(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by `x^k`.
    pub fn shl(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Euclidean division; `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> Option<(Poly, Poly)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact quotient when `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Canonical text using `var` as the variable name.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            if k == 0 {
                write_rational(&mut out, &mag);
                continue;
            }
            if !mag.is_one() {
                write_rational(&mut out, &mag);
                out.push('*');
            }
            out.push_str(var);
            if k > 1 {
                out.push('^');
                out.push_str(&k.to_string());
            }
        }
        out
    }

    /// Parses the canonical form (and reasonable variations of it) in `var`.
    pub fn parse_var(input: &str, var: &str) -> Result<Poly, PolyError> {
        PolyParser { input, var, pos: 0 }.parse()
    }

    pub fn parse(input: &str) -> Result<Poly, PolyError> {
        Self::parse_var(input, "x")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

struct PolyParser<'a> {
    input: &'a str,
    var: &'a str,
    pos: usize,
}

impl PolyParser<'_> {
    fn err(&self, message: &str) -> PolyError {
        PolyError::Parse { input: self.input.to_string(), position: self.pos, message: message.to_string() }
    }

    fn rest(&self) -> &str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.input.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let start = self.pos;
        self.pos += len;
        Some(self.input[start..start + len].to_string())
    }

    fn parse(mut self) -> Result<Poly, PolyError> {
        let mut acc = Poly::zero();
        let mut first = true;
        loop {
            self.skip_ws();
            if self.pos == self.input.len() {
                if first {
                    return Err(self.err("empty polynomial"));
                }
                return Ok(acc);
            }
            let mut negative = false;
            if self.eat("-") {
                negative = true;
            } else if self.eat("+") {
            } else if !first {
                return Err(self.err("expected '+' or '-'"));
            }
            // a binary operator may be followed by a signed literal: `x + -1`
            if !first && self.eat("-") {
                negative = !negative;
            }
            first = false;
            let (c, k) = self.term()?;
            let c = if negative { -c } else { c };
            acc = &acc + &Poly::monomial(c, k);
        }
    }

    fn term(&mut self) -> Result<(Rational, usize), PolyError> {
        let coeff = match self.digits() {
            Some(n) => {
                let num: Rational = Rational::from_integer(n.parse().map_err(|_| self.err("bad integer"))?);
                if self.eat("/") {
                    let d = self.digits().ok_or_else(|| self.err("expected denominator"))?;
                    let den: Rational = Rational::from_integer(d.parse().map_err(|_| self.err("bad integer"))?);
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    Some(num / den)
                } else {
                    Some(num)
                }
            }
            None => None,
        };
        let has_star = coeff.is_some() && self.eat("*");
        if self.eat(self.var) {
            let k = if self.eat("^") {
                let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
                d.parse().map_err(|_| self.err("bad exponent"))?
            } else {
                1
            };
            Ok((coeff.unwrap_or_else(rational::one), k))
        } else if has_star {
            Err(self.err("expected variable after '*'"))
        } else {
            coeff.map(|c| (c, 0)).ok_or_else(|| self.err("expected a term"))
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, Rational::zero());
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::rat;

    #[test]
    fn canonical_text() {
        assert_eq!(Poly::from_ints(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(Poly::from_ints(&[2, 0, 2]).to_string(), "2*x^2 + 2");
        assert_eq!(Poly::from_ints(&[-1, -1]).to_string(), "-x - 1");
        assert_eq!(Poly::zero().to_string(), "0");
        let p = Poly::from_coeffs(vec![rat(-1, 2), rat(3, 4), int(0), int(-1)]);
        assert_eq!(p.to_string(), "-x^3 + 3/4*x - 1/2");
        assert_eq!(p.to_string_var("H"), "-H^3 + 3/4*H - 1/2");
    }

    #[test]
    fn parse_canonical_and_loose_forms() {
        for s in ["x - 1", "2*x^2 + 2", "-x^3 + 3/4*x - 1/2", "0", "7", "-1/3"] {
            assert_eq!(Poly::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(Poly::parse("x^2+ -2x +1").unwrap(), Poly::from_ints(&[1, -2, 1]));
        assert_eq!(Poly::parse_var("H^2 - 1", "H").unwrap(), Poly::from_ints(&[-1, 0, 1]));
        assert!(Poly::parse("x +").is_err());
        assert!(Poly::parse("").is_err());
        assert!(Poly::parse("2*").is_err());
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(a.exact_div(&b).unwrap(), Poly::from_ints(&[1, 1]));
        assert_eq!(a.gcd(&Poly::from_ints(&[2, 2])), Poly::from_ints(&[1, 1]));
        assert!(a.div_rem(&Poly::zero()).is_none());
        assert_eq!(Poly::from_ints(&[1, 1]).gcd(&Poly::from_ints(&[2])), Poly::one());
    }

    #[test]
    fn shift_and_reflect() {
        let t2 = Poly::monomial(int(1), 2);
        assert_eq!(t2.shift(&int(-1)), Poly::from_ints(&[1, -2, 1]));
        assert_eq!(Poly::from_ints(&[1, 2, 3]).reflect(), Poly::from_ints(&[1, -2, 3]));
    }
}
