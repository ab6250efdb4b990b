use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::Poly;
use super::rational::Rational;
use super::PolyError;

/// Quotient of two polynomials in lowest terms with a monic denominator, so
/// equal rational functions have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    numer: Poly,
    denom: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { numer: p, denom: Poly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Poly::from_int(c))
    }

    /// `None` when the denominator is zero.
    pub fn new(numer: Poly, denom: Poly) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        if numer.is_zero() {
            return Some(Self::zero());
        }
        if denom.is_constant() {
            let inv = denom.coeff(0).recip();
            return Some(Self::from_poly(numer.scale(&inv)));
        }
        let g = numer.gcd(&denom);
        let (numer, denom) = if g.is_one() {
            (numer, denom)
        } else {
            (numer.exact_div(&g).expect("gcd divides"), denom.exact_div(&g).expect("gcd divides"))
        };
        let lead = denom.leading().expect("nonzero").recip();
        Some(RatFunc { numer: numer.scale(&lead), denom: denom.scale(&lead) })
    }

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    pub fn denom(&self) -> &Poly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.numer)
    }

    pub fn recip(&self) -> Option<RatFunc> {
        RatFunc::new(self.denom.clone(), self.numer.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Option<RatFunc> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            if let Some(q) = self.numer.exact_div(&rhs.numer) {
                return Some(Self::from_poly(q));
            }
        }
        RatFunc::new(&self.numer * &rhs.denom, &self.denom * &rhs.numer)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        RatFunc { numer: self.numer.scale(c), denom: self.denom.clone() }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc { numer: self.numer.pow(e), denom: self.denom.pow(e) }
    }

    /// Integer power, negative exponents inverting; `None` for `0^(-k)`.
    pub fn powi(&self, e: i64) -> Option<RatFunc> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e >= 0 {
            Some(p)
        } else {
            p.recip()
        }
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.numer.to_string_var(var)
        } else {
            format!("({})/({})", self.numer.to_string_var(var), self.denom.to_string_var(var))
        }
    }

    /// Inverse of [`RatFunc::to_string_var`]; also accepts bare polynomials.
    pub fn parse_var(input: &str, var: &str) -> Result<RatFunc, PolyError> {
        let s = input.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some(split) = rest.find(")/(") {
                let num = &rest[..split];
                let den = rest[split + 3..].strip_suffix(')').ok_or_else(|| PolyError::Parse {
                    input: input.to_string(),
                    position: input.len(),
                    message: "unterminated denominator".into(),
                })?;
                let num = Poly::parse_var(num, var)?;
                let den = Poly::parse_var(den, var)?;
                return RatFunc::new(num, den).ok_or_else(|| PolyError::Parse {
                    input: input.to_string(),
                    position: 0,
                    message: "zero denominator".into(),
                });
            }
        }
        Poly::parse_var(s, var).map(RatFunc::from_poly)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.denom == rhs.denom {
            if self.is_polynomial() {
                return RatFunc::from_poly(&self.numer + &rhs.numer);
            }
            return RatFunc::new(&self.numer + &rhs.numer, self.denom.clone()).expect("nonzero denominator");
        }
        RatFunc::new(&self.numer * &rhs.denom + &rhs.numer * &self.denom, &self.denom * &rhs.denom)
            .expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFunc::from_poly(&self.numer * &rhs.numer);
        }
        RatFunc::new(&self.numer * &rhs.numer, &self.denom * &rhs.denom).expect("nonzero denominator")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { numer: -&self.numer, denom: self.denom.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}
