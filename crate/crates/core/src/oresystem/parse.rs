//! Text form of Ore polynomials: `t`-coefficients separated by `;`, lowest
//! degree first, each a sum of terms like `-1/2 E^1 H^2`. A term is a product
//! of rational literals, `E`, `E^k`, `H`, `H^k` (optionally joined by `*`),
//! multiplied in the order written.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{OreElem, OreError, OrePoly};
use crate::exactpoly::{int, Rational};

struct Cursor<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
    end: usize,
}

impl<'a> Cursor<'a> {
    fn error(&self, position: usize, message: impl Into<String>) -> OreError {
        OreError::Parse { input: self.input.to_string(), position, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.end && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        (self.pos < self.end).then(|| self.bytes[self.pos])
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.end && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, &self.input[start..self.pos]))
    }

    fn exponent(&mut self) -> Result<usize, OreError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let (start, text) = self.digits().ok_or_else(|| self.error(self.pos, "expected an exponent"))?;
        text.parse().map_err(|_| self.error(start, "exponent too large"))
    }

    fn literal(&mut self) -> Result<Rational, OreError> {
        let (start, num) = self.digits().expect("caller saw a digit");
        let num: BigInt = num.parse().expect("ascii digits");
        if self.peek() != Some(b'/') {
            return Ok(Rational::from_integer(num));
        }
        self.pos += 1;
        let (_, den) = self.digits().ok_or_else(|| self.error(self.pos, "expected a denominator"))?;
        let den: BigInt = den.parse().expect("ascii digits");
        if den.is_zero() {
            return Err(self.error(start, "zero denominator"));
        }
        Ok(Rational::new(num, den))
    }

    /// Optional signs, then factors up to the next `+`, `-` or end.
    fn term(&mut self, c: &Rational) -> Result<OreElem, OreError> {
        let mut sign = int(1);
        while let Some(s @ (b'+' | b'-')) = self.peek() {
            if s == b'-' {
                sign = -sign;
            }
            self.pos += 1;
        }
        let mut value = OreElem::constant(c, sign);
        let mut factors = 0;
        loop {
            let factor = match self.peek() {
                Some(b'0'..=b'9') => OreElem::constant(c, self.literal()?),
                Some(b'E') => {
                    self.pos += 1;
                    OreElem::e_pow(c, self.exponent()?)
                }
                Some(b'H') => {
                    self.pos += 1;
                    OreElem::monomial(c, int(1), 0, self.exponent()?)
                }
                Some(b'*') if factors > 0 => {
                    self.pos += 1;
                    continue;
                }
                Some(b'+' | b'-') | None if factors > 0 => return Ok(value),
                Some(_) => return Err(self.error(self.pos, "expected a rational literal, E or H")),
                None => return Err(self.error(self.pos, "expected a term")),
            };
            value = &value * &factor;
            factors += 1;
        }
    }

    fn sum(&mut self, c: &Rational) -> Result<OreElem, OreError> {
        if self.peek().is_none() {
            return Err(self.error(self.pos, "empty coefficient"));
        }
        let mut acc = OreElem::zero(c);
        while self.peek().is_some() {
            acc = &acc + &self.term(c)?;
        }
        Ok(acc)
    }
}

fn parse_range(input: &str, start: usize, end: usize, c: &Rational) -> Result<OreElem, OreError> {
    Cursor { input, bytes: input.as_bytes(), pos: start, end }.sum(c)
}

/// Parses one algebra element, e.g. `2 E^1 H^0 + -1/2 H^2`.
pub fn parse_ore_elem(input: &str, c: &Rational) -> Result<OreElem, OreError> {
    parse_range(input, 0, input.len(), c)
}

/// Parses `p_0; p_1; ...` into `p(t) = sum_j p_j t^j`. Reported positions are
/// byte offsets into `input`.
pub fn parse_ore_poly(input: &str, c: &Rational) -> Result<OrePoly, OreError> {
    let mut coeffs = Vec::new();
    let mut start = 0;
    for segment in input.split(';') {
        coeffs.push(parse_range(input, start, start + segment.len(), c)?);
        start += segment.len() + 1;
    }
    Ok(OrePoly::from_coeffs(c, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, Poly};

    #[test]
    fn grammar_example() {
        let c = int(1);
        let p = parse_ore_poly("1; 2 E^1 H^0 + -1/2 E^0 H^2", &c).unwrap();
        let p1 = &OreElem::monomial(&c, int(2), 1, 0) + &OreElem::monomial(&c, rat(-1, 2), 0, 2);
        assert_eq!(p, OrePoly::from_coeffs(&c, vec![OreElem::one(&c), p1]));
        let q = parse_ore_poly("0;1 E^1 H^0", &c).unwrap();
        assert_eq!(q, OrePoly::monomial(OreElem::e_pow(&c, 1), 1));
    }

    #[test]
    fn factors_multiply_in_order() {
        let c = int(3);
        // H E = E (H + 3)
        let he = parse_ore_elem("H*E", &c).unwrap();
        assert_eq!(he, OreElem::from_terms(&c, [(1, Poly::from_ints(&[3, 1]))]));
        assert_eq!(parse_ore_elem("E H - 2", &c).unwrap().to_string(), "-2 + E^1 * (H)");
        assert_eq!(parse_ore_elem(" - -E ", &c).unwrap(), OreElem::e_pow(&c, 1));
    }

    #[test]
    fn errors_carry_positions() {
        let c = int(0);
        let pos = |s: &str| match parse_ore_poly(s, &c) {
            Err(OreError::Parse { position, .. }) => position,
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(pos("1; 2 X"), 5);
        assert_eq!(pos("1;;2"), 2);
        assert_eq!(pos("E^"), 2);
        assert_eq!(pos("1/0"), 0);
        assert_eq!(pos("2 +"), 3);
    }
}
