use std::fmt;
use std::str::FromStr;

use super::{Finiteness, InfMatError, InfMatrix, Shape};
use crate::exactpoly::{binomial, factorial, int, pochhammer, rational_sign, stirling2, Poly, RatFunc, Rational};
use crate::jacobi::{jacobi_p, JacobiParams};

macro_rules! matrix_names {
    ($($variant:ident => $key:literal),+ $(,)?) => {
        /// Named matrices with closed-form entries.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum MatrixName {
            $($variant),+
        }

        impl MatrixName {
            pub const ALL: &'static [MatrixName] = &[$(MatrixName::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(MatrixName::$variant => $key),+
                }
            }
        }

        impl FromStr for MatrixName {
            type Err = InfMatError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($key => Ok(MatrixName::$variant),)+
                    _ => Err(InfMatError::UnknownName(s.to_string())),
                }
            }
        }
    };
}

matrix_names! {
    Identity => "identity",
    V => "V",
    Dq => "D_q",
    F => "F",
    P => "P",
    S => "S",
    Px => "P_x",
    PxPrime => "P_x_prime",
    T0P => "T0P",
    T0S => "T0S",
    T0 => "T0",
    T0Inv => "T0_inv",
    M0Tilde => "M0_tilde",
    M1pTilde => "M1p_tilde",
    M2pTilde => "M2p_tilde",
    LpTilde => "Lp_tilde",
    LpInvTilde => "Lp_inv_tilde",
    U1pTilde => "U1p_tilde",
    U2pTilde => "U2p_tilde",
    U0Tilde => "U0_tilde",
    L0Tilde => "L0_tilde",
    SignedStirlingUpper => "signed_stirling_upper",
    OnesLowerBand => "ones_lower_band",
}

impl fmt::Display for MatrixName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Optional catalog parameters; only `D_q` uses one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogParams {
    pub q: Option<Rational>,
}

impl CatalogParams {
    pub fn with_q(q: Rational) -> Self {
        CatalogParams { q: Some(q) }
    }
}

fn x_minus_one() -> Poly {
    Poly::from_ints(&[-1, 1])
}

fn x_pow(k: usize) -> Poly {
    Poly::monomial(int(1), k)
}

fn constant(c: Rational) -> RatFunc {
    RatFunc::from_rational(c)
}

/// `p_n^{a,b}` with the convention that negative degrees give zero.
fn jp(n: i64, a: i64, b: i64) -> Poly {
    if n < 0 {
        return Poly::zero();
    }
    jacobi_p(&JacobiParams::new(n as usize, int(a), int(b)))
}

/// `(x-1)^e` for any integer `e`.
fn x_minus_one_pow(e: i64) -> RatFunc {
    RatFunc::from_poly(x_minus_one()).powi(e).expect("x - 1 is nonzero")
}

/// `(-1)^{i-j} p_{i-j}^{-i,-i}(x)`, the L factor shared by `M'` and `M_0`.
fn l_tilde(i: usize, j: usize) -> RatFunc {
    let (i, j) = (i as i64, j as i64);
    RatFunc::from_poly(jp(i - j, -i, -i).scale(&rational_sign((i - j) as usize)))
}

fn entry_fn(name: MatrixName, q: Option<Rational>) -> Box<dyn Fn(usize, usize) -> RatFunc + Send + Sync> {
    use MatrixName::*;
    let zero = RatFunc::zero;
    match name {
        Identity => Box::new(move |i, j| if i == j { RatFunc::one() } else { zero() }),
        V => Box::new(|i, j| constant(int(i as i64).pow(j as i32 - 1))),
        Dq => {
            let q = q.expect("checked by caller");
            Box::new(move |i, j| if i == j { constant(q.pow(i as i32)) } else { zero() })
        }
        F => Box::new(move |i, j| if i == j { constant(factorial(i - 1)) } else { zero() }),
        P => Box::new(move |i, j| if i >= j { constant(binomial(i - 1, j - 1)) } else { zero() }),
        S => Box::new(move |i, j| if i >= j { constant(stirling2(i, j)) } else { zero() }),
        Px => Box::new(
            move |i, j| {
                if i >= j {
                    RatFunc::from_poly(x_pow(i - j).scale(&binomial(i - 1, j - 1)))
                } else {
                    zero()
                }
            },
        ),
        PxPrime => {
            Box::new(
                move |i, j| {
                    if i >= j {
                        RatFunc::from_poly(pochhammer(i - j).scale(&binomial(i - 1, j - 1)))
                    } else {
                        zero()
                    }
                },
            )
        }
        T0P => Box::new(move |i, j| if i == j || i == j + 1 { RatFunc::one() } else { zero() }),
        T0S => Box::new(move |i, j| match i.checked_sub(j) {
            Some(0) => RatFunc::one(),
            Some(1) => RatFunc::from_int(j as i64),
            _ => zero(),
        }),
        T0 => Box::new(move |i, j| match i.checked_sub(j) {
            Some(0) => RatFunc::one(),
            Some(1) => RatFunc::from_poly(Poly::from_ints(&[-1, -1])),
            Some(2) => RatFunc::from_poly(Poly::x()),
            _ => zero(),
        }),
        T0Inv => Box::new(
            move |i, j| {
                if i >= j {
                    RatFunc::from_poly(Poly::from_coeffs(vec![int(1); i - j + 1]))
                } else {
                    zero()
                }
            },
        ),
        M0Tilde => Box::new(|i, j| {
            let scale = int(i as i64).pow(j as i32 - 1);
            let poly = &x_pow(i) + &Poly::constant(rational_sign(j));
            RatFunc::from_poly(poly.scale(&scale))
        }),
        M1pTilde => Box::new(|i, j| RatFunc::from_poly(x_pow(i).scale(&binomial(i + j - 2, j - 1)))),
        M2pTilde => {
            Box::new(move |i, j| if j <= i + 1 { constant(binomial(i, j - 1) * rational_sign(j - 1)) } else { zero() })
        }
        LpTilde | L0Tilde => Box::new(move |i, j| if i >= j { l_tilde(i, j) } else { zero() }),
        LpInvTilde => Box::new(move |i, j| {
            if i < j {
                return zero();
            }
            let ratio = Rational::new((j as i64).into(), (i as i64).into()) * rational_sign(i - j);
            RatFunc::from_poly(jp((i - j) as i64, j as i64, j as i64).scale(&ratio))
        }),
        U1pTilde => Box::new(move |i, j| {
            if i > j {
                return zero();
            }
            let (ii, jj) = (i as i64, j as i64);
            let p = &jp(jj - ii, -jj, 0) * &Poly::x();
            let p = RatFunc::from_poly(p.scale(&rational_sign(j - i)));
            &p * &x_minus_one_pow(2 * ii - jj - 1)
        }),
        U2pTilde => Box::new(move |i, j| {
            if i > j {
                return zero();
            }
            let (ii, jj) = (i as i64, j as i64);
            let p = RatFunc::from_poly(jp(jj - ii, 2 - jj, -2).scale(&rational_sign(j - i)));
            &p * &x_minus_one_pow(2 * ii - jj - 1)
        }),
        U0Tilde => Box::new(move |i, j| {
            if i > j {
                return zero();
            }
            let (ii, jj) = (i as i64, j as i64);
            let ratio = Rational::new(jj.into(), ii.into()) * rational_sign(j - i);
            let p = RatFunc::from_poly(jp(jj - ii, -jj, -1).scale(&ratio));
            &p * &x_minus_one_pow(2 * ii - jj)
        }),
        SignedStirlingUpper => {
            Box::new(move |i, j| if i <= j { constant(stirling2(j, i) * rational_sign(j - i)) } else { zero() })
        }
        OnesLowerBand => Box::new(move |i, j| if i >= j { RatFunc::one() } else { zero() }),
    }
}

fn shape_of(name: MatrixName) -> (Shape, Finiteness, usize) {
    use MatrixName::*;
    match name {
        Identity | Dq | F => (Shape::Diagonal, Finiteness::Both, 0),
        P | S | Px | PxPrime | T0P | T0S | T0 | T0Inv | LpTilde | LpInvTilde | L0Tilde | OnesLowerBand => {
            (Shape::LowerTriangular, Finiteness::RowFinite, 0)
        }
        U1pTilde | U2pTilde | U0Tilde | SignedStirlingUpper => (Shape::UpperTriangular, Finiteness::ColumnFinite, 0),
        V | M0Tilde | M1pTilde => (Shape::General, Finiteness::Unknown, 0),
        M2pTilde => (Shape::General, Finiteness::RowFinite, 1),
    }
}

/// Builds the named matrix.
pub fn catalog(name: MatrixName, params: &CatalogParams) -> Result<InfMatrix, InfMatError> {
    if name == MatrixName::Dq && params.q.is_none() {
        return Err(InfMatError::MissingParameter("D_q"));
    }
    let (shape, finiteness, band) = shape_of(name);
    let display = match (name, &params.q) {
        (MatrixName::Dq, Some(q)) => format!("D_{}", crate::exactpoly::format_rational(q)),
        _ => name.as_str().to_string(),
    };
    let entry = entry_fn(name, params.q.clone());
    Ok(InfMatrix::new(display, shape, finiteness, band, entry))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infmat::minor;

    fn named(name: &str) -> InfMatrix {
        catalog(name.parse().unwrap(), &CatalogParams::default()).unwrap()
    }

    fn poly(s: &str) -> RatFunc {
        RatFunc::from_poly(Poly::parse(s).unwrap())
    }

    #[test]
    fn spec_entries() {
        assert_eq!(named("M0_tilde").entry(3, 4), poly("27*x^3 + 27"));
        assert_eq!(named("Lp_tilde").entry(3, 2), poly("2*x + 2"));
        assert_eq!(named("signed_stirling_upper").entry(2, 4), RatFunc::from_int(7));
        let row2: Vec<_> = (2..=5).map(|j| named("signed_stirling_upper").entry(2, j)).collect();
        assert_eq!(row2, [1, -3, 7, -15].map(RatFunc::from_int).to_vec());
    }

    #[test]
    fn names_round_trip() {
        for &name in MatrixName::ALL {
            assert_eq!(name.as_str().parse::<MatrixName>().unwrap(), name);
        }
        assert_eq!("W".parse::<MatrixName>(), Err(InfMatError::UnknownName("W".into())));
    }

    #[test]
    fn dq_needs_q() {
        assert_eq!(
            catalog(MatrixName::Dq, &CatalogParams::default()).unwrap_err(),
            InfMatError::MissingParameter("D_q")
        );
        let d = catalog(MatrixName::Dq, &CatalogParams::with_q(crate::exactpoly::rat(1, 2))).unwrap();
        assert_eq!(d.entry(3, 3), RatFunc::from_rational(crate::exactpoly::rat(1, 8)));
        assert_eq!(d.name(), "D_1/2");
    }

    #[test]
    fn every_generator_honors_its_shape() {
        for &name in MatrixName::ALL {
            let m = catalog(name, &CatalogParams::with_q(int(3))).unwrap();
            let _ = minor(&m, 7);
        }
    }

    #[test]
    fn displayed_corners() {
        let m1 = named("M1p_tilde");
        assert_eq!(m1.entry(4, 4), poly("20*x^4"));
        let m2 = named("M2p_tilde");
        let row3: Vec<_> = (1..=5).map(|j| m2.entry(3, j)).collect();
        assert_eq!(row3, [1, -3, 3, -1, 0].map(RatFunc::from_int).to_vec());
        let mp = m1.sub(&m2);
        assert_eq!(mp.entry(3, 4), poly("10*x^3 + 1"));
        assert_eq!(mp.entry(2, 3), poly("3*x^2 - 1"));
        assert_eq!(named("S").entry(5, 3), RatFunc::from_int(25));
        assert_eq!(named("P_x_prime").entry(3, 1), poly("x^2 + x"));
        assert_eq!(named("P_x").entry(3, 1), poly("x^2"));
    }
}
