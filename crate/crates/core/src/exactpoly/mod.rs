//! Exact scalars, polynomials and rational functions over the rationals,
//! together with the finite-difference and combinatorial machinery the rest
//! of the crate is built on.

mod combinat;
mod poly;
mod ratfunc;
mod rational;

use num_traits::Zero;
use thiserror::Error;

pub use combinat::{binomial, combinatorial, factorial, stirling2, Combinatorial};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::{format_rational, int, one, parse_rational, rat, rising, zero, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("discrete derivative step must be nonzero")]
    InvalidStep,
    #[error("parse error at position {position} in {input:?}: {message}")]
    Parse { input: String, position: usize, message: String },
}

/// `(-1)^k` as a rational.
pub fn rational_sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        one()
    } else {
        -one()
    }
}

/// `p(t + delta)`.
pub fn poly_shift(p: &Poly, delta: &Rational) -> Poly {
    p.shift(delta)
}

/// Backward difference `p(t) - p(t - h)`, without the `1/h` normalization.
pub fn difference(p: &Poly, h: &Rational) -> Poly {
    p - &p.shift(&-h)
}

/// `r`-fold `h`-discrete derivative `(p(t) - p(t - h)) / h`.
pub fn discrete_derivative(p: &Poly, h: &Rational, r: usize) -> Result<Poly, PolyError> {
    if h.is_zero() {
        return Err(PolyError::InvalidStep);
    }
    let inv = h.recip();
    let mut q = p.clone();
    for _ in 0..r {
        if q.is_zero() {
            break;
        }
        q = difference(&q, h).scale(&inv);
    }
    Ok(q)
}

/// Rising factorial polynomial `t (t+1) ... (t+n-1)`.
pub fn pochhammer(n: usize) -> Poly {
    (0..n).fold(Poly::one(), |acc, k| &acc * &Poly::linear(int(k as i64)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisDirection {
    MonomialToPochhammer,
    PochhammerToMonomial,
}

/// Converts coefficients between `sum p_j t^j` and `sum a_j (t)_j`.
///
/// The monomial-to-Pochhammer direction uses the signed Stirling expansion
/// `t^j = sum_k (-1)^(j-k) S(j,k) (t)_k`; the reverse expands the Pochhammer
/// polynomials directly, so the two directions are computed independently.
pub fn basis_change(coeffs: &[Rational], direction: BasisDirection) -> Vec<Rational> {
    let n = coeffs.len();
    match direction {
        BasisDirection::MonomialToPochhammer => (0..n)
            .map(|k| {
                let mut acc = Rational::zero();
                for (j, p) in coeffs.iter().enumerate().skip(k) {
                    if p.is_zero() {
                        continue;
                    }
                    let s = stirling2(j, k) * p;
                    if (j - k) % 2 == 0 {
                        acc += s;
                    } else {
                        acc -= s;
                    }
                }
                acc
            })
            .collect(),
        BasisDirection::PochhammerToMonomial => {
            let mut acc = Poly::zero();
            for (k, a) in coeffs.iter().enumerate() {
                acc += &pochhammer(k).scale(a);
            }
            (0..n).map(|j| acc.coeff(j)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_examples() {
        let t2 = Poly::monomial(int(1), 2);
        assert_eq!(poly_shift(&t2, &int(0)), t2);
        assert_eq!(poly_shift(&Poly::x(), &int(1)), Poly::from_ints(&[1, 1]));
        assert_eq!(poly_shift(&t2, &int(-1)), Poly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn derivative_examples() {
        assert!(discrete_derivative(&Poly::from_int(5), &int(1), 1).unwrap().is_zero());
        let t3 = Poly::monomial(int(1), 3);
        assert_eq!(discrete_derivative(&t3, &int(2), 3).unwrap(), Poly::from_int(6));
        assert_eq!(discrete_derivative(&pochhammer(3), &int(1), 1).unwrap(), pochhammer(2).scale(&int(3)));
        assert_eq!(discrete_derivative(&t3, &int(0), 1), Err(PolyError::InvalidStep));
        assert!(discrete_derivative(&t3, &int(1), 4).unwrap().is_zero());
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(0), Poly::one());
        assert_eq!(pochhammer(2), Poly::from_ints(&[0, 1, 1]));
        // direct product t(t+1)(t+2)
        let direct = &(&Poly::x() * &Poly::from_ints(&[1, 1])) * &Poly::from_ints(&[2, 1]);
        assert_eq!(pochhammer(3), direct);
        assert_eq!(pochhammer(3), Poly::from_ints(&[0, 2, 3, 1]));
    }

    #[test]
    fn basis_change_examples() {
        let m2p = BasisDirection::MonomialToPochhammer;
        assert_eq!(basis_change(&[int(0), int(1)], m2p), vec![int(0), int(1)]);
        assert_eq!(basis_change(&[int(0), int(0), int(1)], m2p), vec![int(0), int(-1), int(1)]);
        let v = vec![int(3), rat(-1, 2), int(7), int(2)];
        let back = basis_change(&basis_change(&v, m2p), BasisDirection::PochhammerToMonomial);
        assert_eq!(back, v);
    }
}
