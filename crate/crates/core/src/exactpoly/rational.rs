use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::PolyError;

/// Exact rational scalar. `BigRational` keeps itself reduced with a positive
/// denominator, so zero is always `0/1`.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Formats as `a/b`, or `a` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    let mut s = String::new();
    write_rational(&mut s, r);
    s
}

pub(crate) fn write_rational(out: &mut String, r: &Rational) {
    if r.denom().is_one() {
        let _ = write!(out, "{}", r.numer());
    } else {
        let _ = write!(out, "{}/{}", r.numer(), r.denom());
    }
}

/// Parses `a`, `-a`, `a/b` or `-a/b` (surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let s = s.trim();
    let bad = || PolyError::Parse { input: s.to_string(), position: 0, message: "expected a rational literal".into() };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(PolyError::Parse { input: s.to_string(), position: 0, message: "zero denominator".into() });
    }
    Ok(Rational::new(num, den))
}

/// Rising factorial `a (a+1) ... (a+n-1)`; `1` when `n = 0`.
pub fn rising(a: &Rational, n: usize) -> Rational {
    let mut acc = one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += one();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(format_rational(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(format_rational(&rat(0, 5)), "0");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rising_factorial() {
        assert_eq!(rising(&int(3), 0), int(1));
        assert_eq!(rising(&int(3), 3), int(60));
        assert_eq!(rising(&int(-2), 3), int(0));
        assert_eq!(rising(&rat(1, 2), 2), rat(3, 4));
    }
}
