use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combinatorial {
    Binomial,
    Stirling2,
    Factorial,
}

/// Exact combinatorial numbers as rationals. Binomials and Stirling numbers
/// of the second kind are 0 outside their triangle; `Factorial` ignores `j`.
pub fn combinatorial(kind: Combinatorial, i: usize, j: usize) -> Rational {
    let v = match kind {
        Combinatorial::Binomial => binomial_int(i, j),
        Combinatorial::Stirling2 => stirling2_int(i, j),
        Combinatorial::Factorial => factorial_int(i),
    };
    Rational::from_integer(v)
}

pub fn binomial(i: usize, j: usize) -> Rational {
    combinatorial(Combinatorial::Binomial, i, j)
}

pub fn stirling2(i: usize, j: usize) -> Rational {
    combinatorial(Combinatorial::Stirling2, i, j)
}

pub fn factorial(i: usize) -> Rational {
    combinatorial(Combinatorial::Factorial, i, 0)
}

/// Row `i` of Pascal's triangle, built with `C(i,j) = C(i-1,j-1) + C(i-1,j)`.
fn pascal_row(i: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..i {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

pub(crate) fn binomial_int(i: usize, j: usize) -> BigInt {
    if j > i {
        return BigInt::zero();
    }
    pascal_row(i).swap_remove(j)
}

/// `S(i,j) = S(i-1,j-1) + j S(i-1,j)` with `S(0,0) = 1`.
pub(crate) fn stirling2_int(i: usize, j: usize) -> BigInt {
    if j > i {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for n in 1..=i {
        let mut next = vec![BigInt::zero(); n + 1];
        for (k, slot) in next.iter_mut().enumerate().skip(1) {
            let carry = row.get(k).map(|s| s * BigInt::from(k)).unwrap_or_default();
            *slot = &row[k - 1] + carry;
        }
        row = next;
    }
    row.swap_remove(j)
}

pub(crate) fn factorial_int(i: usize) -> BigInt {
    (1..=i).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::int;

    fn stirling2_explicit(i: usize, j: usize) -> Rational {
        let mut acc = BigInt::zero();
        for k in 0..=j {
            let term = binomial_int(j, k) * BigInt::from(j - k).pow(i as u32);
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        Rational::new(acc, factorial_int(j))
    }

    #[test]
    fn stirling_rows() {
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling2(5, 3), int(25));
        for n in 1..=8 {
            assert_eq!(stirling2(n, n), int(1));
        }
        assert_eq!(stirling2(3, 4), int(0));
    }

    #[test]
    fn recurrences_match_closed_forms() {
        for i in 0..=14 {
            for j in 0..=i + 1 {
                assert_eq!(stirling2(i, j), stirling2_explicit(i, j), "S({i},{j})");
                let direct: BigInt =
                    if j > i { BigInt::zero() } else { factorial_int(i) / (factorial_int(j) * factorial_int(i - j)) };
                assert_eq!(binomial(i, j), Rational::from_integer(direct));
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(combinatorial(Combinatorial::Factorial, 4, 99), int(24));
    }
}
