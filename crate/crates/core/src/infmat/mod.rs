//! Lazily generated infinite matrices with rational-function entries, their
//! finite corners, shifts, products, iterated products and LU factors.

mod catalog;
mod checks;
mod dense;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactpoly::RatFunc;

pub use catalog::{catalog, CatalogParams, MatrixName};
pub use checks::{check, check_all, CheckName};
pub use dense::DenseMinor;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    LowerTriangular,
    UpperTriangular,
    Diagonal,
    General,
}

impl Shape {
    /// Whether the shape forces `entry(i, j) = 0`.
    pub fn forces_zero(self, i: usize, j: usize) -> bool {
        match self {
            Shape::LowerTriangular => j > i,
            Shape::UpperTriangular => i > j,
            Shape::Diagonal => i != j,
            Shape::General => false,
        }
    }

    fn transpose(self) -> Shape {
        match self {
            Shape::LowerTriangular => Shape::UpperTriangular,
            Shape::UpperTriangular => Shape::LowerTriangular,
            s => s,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::LowerTriangular => "lower_triangular",
            Shape::UpperTriangular => "upper_triangular",
            Shape::Diagonal => "diagonal",
            Shape::General => "general",
        })
    }
}

/// Row-finite matrices have `entry(i, j) = 0` for `j > i + band`;
/// column-finite ones have `entry(i, j) = 0` for `i > j + band`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finiteness {
    RowFinite,
    ColumnFinite,
    Both,
    Unknown,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InfMatError {
    #[error("product {left} * {right} is undefined: neither factor guarantees finitely many nonzero terms")]
    ProductUndefined { left: String, right: String },
    #[error("{op} needs a lower triangular matrix, {name} is {shape}")]
    Shape { op: &'static str, name: String, shape: Shape },
    #[error("no LU factorization: the leading {k}x{k} minor is singular")]
    NoLu { k: usize },
    #[error("triangular minor is singular: diagonal entry {index} is zero")]
    Singular { index: usize },
    #[error("minor is not triangular")]
    NotTriangular,
    #[error("unknown matrix name {0:?}")]
    UnknownName(String),
    #[error("matrix {0} needs the parameter q")]
    MissingParameter(&'static str),
}

type Generator = dyn Fn(usize, usize) -> RatFunc + Send + Sync;

/// An infinite matrix given by an entry generator. Cloning is cheap.
#[derive(Clone)]
pub struct InfMatrix {
    name: String,
    shape: Shape,
    finiteness: Finiteness,
    band: usize,
    entry: Arc<Generator>,
}

impl fmt::Debug for InfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InfMatrix")
            .field("name", &self.name)
            .field("shape", &self.shape)
            .field("finiteness", &self.finiteness)
            .field("band", &self.band)
            .finish()
    }
}

impl InfMatrix {
    pub fn new(
        name: impl Into<String>,
        shape: Shape,
        finiteness: Finiteness,
        band: usize,
        entry: impl Fn(usize, usize) -> RatFunc + Send + Sync + 'static,
    ) -> Self {
        InfMatrix { name: name.into(), shape, finiteness, band, entry: Arc::new(entry) }
    }

    /// Triangular and diagonal shapes carry their own finiteness.
    pub fn with_shape(
        name: impl Into<String>,
        shape: Shape,
        entry: impl Fn(usize, usize) -> RatFunc + Send + Sync + 'static,
    ) -> Self {
        let finiteness = match shape {
            Shape::LowerTriangular => Finiteness::RowFinite,
            Shape::UpperTriangular => Finiteness::ColumnFinite,
            Shape::Diagonal => Finiteness::Both,
            Shape::General => Finiteness::Unknown,
        };
        Self::new(name, shape, finiteness, 0, entry)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn finiteness(&self) -> Finiteness {
        self.finiteness
    }

    pub fn band(&self) -> usize {
        self.band
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// 1-based entry.
    pub fn entry(&self, i: usize, j: usize) -> RatFunc {
        assert!(i >= 1 && j >= 1, "matrix indices are 1-based");
        (self.entry)(i, j)
    }

    /// Last column that can be nonzero in row `i`, if bounded.
    fn row_extent(&self, i: usize) -> Option<usize> {
        match (self.shape, self.finiteness) {
            (Shape::LowerTriangular | Shape::Diagonal, _) => Some(i),
            (_, Finiteness::RowFinite | Finiteness::Both) => Some(i + self.band),
            _ => None,
        }
    }

    /// Last row that can be nonzero in column `j`, if bounded.
    fn column_extent(&self, j: usize) -> Option<usize> {
        match (self.shape, self.finiteness) {
            (Shape::UpperTriangular | Shape::Diagonal, _) => Some(j),
            (_, Finiteness::ColumnFinite | Finiteness::Both) => Some(j + self.band),
            _ => None,
        }
    }

    pub fn transpose(&self) -> InfMatrix {
        let finiteness = match self.finiteness {
            Finiteness::RowFinite => Finiteness::ColumnFinite,
            Finiteness::ColumnFinite => Finiteness::RowFinite,
            f => f,
        };
        let inner = self.entry.clone();
        InfMatrix::new(format!("{}^t", self.name), self.shape.transpose(), finiteness, self.band, move |i, j| {
            inner(j, i)
        })
    }

    /// Entrywise difference; the shape is kept only when both agree.
    pub fn sub(&self, other: &InfMatrix) -> InfMatrix {
        let shape = if self.shape == other.shape { self.shape } else { Shape::General };
        let finiteness = if self.finiteness == other.finiteness { self.finiteness } else { Finiteness::Unknown };
        let (a, b) = (self.entry.clone(), other.entry.clone());
        InfMatrix::new(
            format!("({} - {})", self.name, other.name),
            shape,
            finiteness,
            self.band.max(other.band),
            move |i, j| &a(i, j) - &b(i, j),
        )
    }

    /// Lazy product. Each entry sums over the finitely many `k` allowed by the
    /// factors' shapes and finiteness tags.
    pub fn product(&self, other: &InfMatrix) -> Result<InfMatrix, InfMatError> {
        let (left, right) = (self.clone(), other.clone());
        if left.row_extent(1).is_none() && right.column_extent(1).is_none() {
            return Err(InfMatError::ProductUndefined { left: left.name, right: right.name });
        }
        let shape = match (left.shape, right.shape) {
            (Shape::Diagonal, s) | (s, Shape::Diagonal) => s,
            (a, b) if a == b => a,
            _ => Shape::General,
        };
        let row = left.row_extent(1).zip(right.row_extent(1)).map(|(a, b)| a + b - 2);
        let col = left.column_extent(1).zip(right.column_extent(1)).map(|(a, b)| a + b - 2);
        let (finiteness, band) = match (row, col) {
            (Some(r), Some(c)) => (Finiteness::Both, r.max(c)),
            (Some(r), None) => (Finiteness::RowFinite, r),
            (None, Some(c)) => (Finiteness::ColumnFinite, c),
            (None, None) => (Finiteness::Unknown, 0),
        };
        let name = format!("{} * {}", left.name, right.name);
        Ok(InfMatrix::new(name, shape, finiteness, band, move |i, j| {
            if shape.forces_zero(i, j) {
                return RatFunc::zero();
            }
            let upper = match (left.row_extent(i), right.column_extent(j)) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => unreachable!("checked when the product was formed"),
            };
            let mut acc = RatFunc::zero();
            for k in 1..=upper {
                let a = left.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = right.entry(k, j);
                if !b.is_zero() {
                    acc = &acc + &(&a * &b);
                }
            }
            acc
        }))
    }
}

/// Upper-left `n x n` corner. Panics if a generator violates its shape tag.
pub fn minor(a: &InfMatrix, n: usize) -> DenseMinor {
    DenseMinor::from_fn(n, |i, j| {
        let v = a.entry(i, j);
        assert!(
            !(a.shape.forces_zero(i, j) && !v.is_zero()),
            "generator for {} violates its {} shape at ({i}, {j})",
            a.name,
            a.shape
        );
        v
    })
}

/// `s(A) = diag(1, A)`.
pub fn shift(a: &InfMatrix) -> InfMatrix {
    let inner = a.entry.clone();
    InfMatrix::new(format!("s({})", a.name), a.shape, a.finiteness, a.band, move |i, j| match (i, j) {
        (1, 1) => RatFunc::one(),
        (1, _) | (_, 1) => RatFunc::zero(),
        _ => inner(i - 1, j - 1),
    })
}

/// `n`-minor of `AB`.
pub fn product_minor(a: &InfMatrix, b: &InfMatrix, n: usize) -> Result<DenseMinor, InfMatError> {
    if a.shape == Shape::LowerTriangular
        || a.shape == Shape::Diagonal
        || b.shape == Shape::UpperTriangular
        || b.shape == Shape::Diagonal
    {
        return Ok(&minor(a, n) * &minor(b, n));
    }
    Ok(minor(&a.product(b)?, n))
}

fn require_lower(op: &'static str, t: &InfMatrix) -> Result<(), InfMatError> {
    match t.shape {
        Shape::LowerTriangular | Shape::Diagonal => Ok(()),
        shape => Err(InfMatError::Shape { op, name: t.name.clone(), shape }),
    }
}

/// `n`-minor of `T^L = ... s^2(T) s(T) T`. Only `s^k(T)` with `k < n` have
/// non-identity `n`-minors, so the product is finite.
pub fn left_iterated_minor(t: &InfMatrix, n: usize) -> Result<DenseMinor, InfMatError> {
    require_lower("left_iterated_minor", t)?;
    let base = minor(t, n);
    let mut acc = base.clone();
    for k in 1..n {
        acc.left_mul_lower_block(k, &base.corner(n - k));
    }
    Ok(acc)
}

/// `n`-minor of `T^R = T s(T) s^2(T) ...`.
pub fn right_iterated_minor(t: &InfMatrix, n: usize) -> Result<DenseMinor, InfMatError> {
    require_lower("right_iterated_minor", t)?;
    let base = minor(t, n);
    let mut acc = base.clone();
    for k in 1..n {
        acc.right_mul_lower_block(k, &base.corner(n - k));
    }
    Ok(acc)
}

/// Doolittle LU of the `n`-minor over the rational functions: `L` unit
/// lower triangular, `U` upper triangular, no pivoting.
pub fn lu_minor(a: &InfMatrix, n: usize) -> Result<(DenseMinor, DenseMinor), InfMatError> {
    lu_dense(&minor(a, n))
}

pub fn lu_dense(a: &DenseMinor) -> Result<(DenseMinor, DenseMinor), InfMatError> {
    let n = a.n();
    let mut l = DenseMinor::identity(n);
    let mut u = DenseMinor::zeros(n);
    for k in 1..=n {
        for j in k..=n {
            let mut v = a.get(k, j).clone();
            for m in 1..k {
                v = &v - &(l.get(k, m) * u.get(m, j));
            }
            u.set(k, j, v);
        }
        let pivot = u.get(k, k).clone();
        if pivot.is_zero() {
            return Err(InfMatError::NoLu { k });
        }
        for i in k + 1..=n {
            let mut v = a.get(i, k).clone();
            for m in 1..k {
                v = &v - &(l.get(i, m) * u.get(m, k));
            }
            l.set(i, k, v.checked_div(&pivot).expect("pivot is nonzero"));
        }
    }
    Ok((l, u))
}

/// Exact inverse of a lower or upper triangular minor.
pub fn invert_triangular_minor(m: &DenseMinor) -> Result<DenseMinor, InfMatError> {
    if m.is_lower_triangular() {
        invert_lower(m)
    } else if m.is_upper_triangular() {
        Ok(invert_lower(&m.transpose())?.transpose())
    } else {
        Err(InfMatError::NotTriangular)
    }
}

fn invert_lower(m: &DenseMinor) -> Result<DenseMinor, InfMatError> {
    let n = m.n();
    let mut inv = DenseMinor::zeros(n);
    for i in 1..=n {
        let d = m.get(i, i).recip().ok_or(InfMatError::Singular { index: i })?;
        inv.set(i, i, d.clone());
        for j in (1..i).rev() {
            let mut acc = RatFunc::zero();
            for k in j..i {
                acc = &acc + &(m.get(i, k) * inv.get(k, j));
            }
            inv.set(i, j, -&(&acc * &d));
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::Poly;

    fn rf(coeffs: &[i64]) -> RatFunc {
        RatFunc::from_poly(Poly::from_ints(coeffs))
    }

    fn named(name: &str) -> InfMatrix {
        catalog(name.parse().unwrap(), &CatalogParams::default()).unwrap()
    }

    #[test]
    fn minor_examples() {
        assert_eq!(minor(&named("identity"), 3), DenseMinor::identity(3));
        let t0_inv = DenseMinor::from_rows(vec![
            vec![rf(&[1]), rf(&[0]), rf(&[0])],
            vec![rf(&[1, 1]), rf(&[1]), rf(&[0])],
            vec![rf(&[1, 1, 1]), rf(&[1, 1]), rf(&[1])],
        ]);
        assert_eq!(minor(&named("T0_inv"), 3), t0_inv);
        let m0 = DenseMinor::from_rows(vec![vec![rf(&[-1, 1]), rf(&[1, 1])], vec![rf(&[-1, 0, 1]), rf(&[2, 0, 2])]]);
        assert_eq!(minor(&named("M0_tilde"), 2), m0);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(minor(&shift(&named("identity")), 5), DenseMinor::identity(5));
        let st0 = minor(&shift(&named("T0")), 3);
        let expected = DenseMinor::from_rows(vec![
            vec![rf(&[1]), rf(&[0]), rf(&[0])],
            vec![rf(&[0]), rf(&[1]), rf(&[0])],
            vec![rf(&[0]), rf(&[-1, -1]), rf(&[1])],
        ]);
        assert_eq!(st0, expected);
        let p = named("P");
        assert_eq!(shift(&shift(&p)).entry(3, 3), p.entry(1, 1));
        assert_eq!(shift(&p).shape(), Shape::LowerTriangular);
    }

    #[test]
    fn product_examples() {
        let p = named("P");
        assert_eq!(product_minor(&p, &named("identity"), 4).unwrap(), minor(&p, 4));
        let t = InfMatrix::with_shape("bidiag", Shape::LowerTriangular, |i, j| {
            if i == j {
                RatFunc::one()
            } else if i == j + 1 {
                RatFunc::from_int(-1)
            } else {
                RatFunc::zero()
            }
        });
        let tv = product_minor(&t, &named("V"), 2).unwrap();
        assert_eq!(tv, DenseMinor::from_rows(vec![vec![rf(&[1]), rf(&[1])], vec![rf(&[0]), rf(&[1])]]));
        let fst = named("F").product(&named("S").transpose()).unwrap();
        for n in 1..=8 {
            assert_eq!(product_minor(&p, &fst, n).unwrap(), minor(&named("V"), n));
        }
    }

    #[test]
    fn product_of_general_unknown_matrices_is_undefined() {
        let v = named("V");
        assert!(matches!(v.product(&named("M0_tilde")), Err(InfMatError::ProductUndefined { .. })));
        assert!(product_minor(&v, &v, 2).is_err());
        // M2p is row-finite, so it may multiply anything on its right.
        let lazy = named("M2p_tilde").product(&v).unwrap();
        let direct = {
            let wide_left = minor(&named("M2p_tilde"), 4);
            let wide_right = minor(&v, 4);
            (&wide_left * &wide_right).corner(3)
        };
        assert_eq!(minor(&lazy, 3), direct);
    }

    #[test]
    fn iterated_examples() {
        assert_eq!(left_iterated_minor(&named("T0P"), 4).unwrap(), minor(&named("P"), 4));
        assert_eq!(left_iterated_minor(&named("T0S"), 5).unwrap(), minor(&named("S"), 5));
        assert_eq!(left_iterated_minor(&named("identity"), 6).unwrap(), DenseMinor::identity(6));
        assert_eq!(right_iterated_minor(&named("ones_lower_band"), 4).unwrap(), minor(&named("P"), 4));
        assert_eq!(right_iterated_minor(&named("P"), 5).unwrap(), minor(&named("S"), 5));
        let r = right_iterated_minor(&named("T0_inv"), 3).unwrap();
        assert_eq!(r.rows()[2], vec![rf(&[1, 1, 1]), rf(&[2, 2]), rf(&[1])]);
        assert!(matches!(left_iterated_minor(&named("V"), 3), Err(InfMatError::Shape { .. })));
        assert!(matches!(right_iterated_minor(&named("U0_tilde"), 3), Err(InfMatError::Shape { .. })));
    }

    #[test]
    fn iterated_fixed_points() {
        for name in ["T0P", "T0S", "T0", "T0_inv", "P"] {
            let t = named(name);
            for n in 1..=8 {
                let tl = left_iterated_minor(&t, n).unwrap();
                let shifted = if n == 1 {
                    DenseMinor::identity(1)
                } else {
                    left_iterated_minor(&t, n - 1).unwrap().shifted_to(n)
                };
                assert_eq!(tl, &shifted * &minor(&t, n), "{name} n={n}");
                let tr = right_iterated_minor(&t, n).unwrap();
                let shifted = if n == 1 {
                    DenseMinor::identity(1)
                } else {
                    right_iterated_minor(&t, n - 1).unwrap().shifted_to(n)
                };
                assert_eq!(tr, &minor(&t, n) * &shifted, "{name} n={n}");
            }
        }
    }

    #[test]
    fn lu_examples() {
        let (l, u) = lu_minor(&named("identity"), 4).unwrap();
        assert_eq!((l, u), (DenseMinor::identity(4), DenseMinor::identity(4)));
        let (l, u) = lu_minor(&named("M0_tilde"), 3).unwrap();
        let zero = rf(&[0]);
        let expected_l = DenseMinor::from_rows(vec![
            vec![rf(&[1]), zero.clone(), zero.clone()],
            vec![rf(&[1, 1]), rf(&[1]), zero.clone()],
            vec![rf(&[1, 1, 1]), rf(&[2, 2]), rf(&[1])],
        ]);
        let expected_u = DenseMinor::from_rows(vec![
            vec![rf(&[-1, 1]), rf(&[1, 1]), rf(&[-1, 1])],
            vec![zero.clone(), rf(&[1, -2, 1]), rf(&[-3, 0, 3])],
            vec![zero.clone(), zero, rf(&[-2, 6, -6, 2])],
        ]);
        assert_eq!(l, expected_l);
        assert_eq!(u, expected_u);
        let (l, u) = lu_minor(&named("V"), 4).unwrap();
        assert_eq!(l, minor(&named("P"), 4));
        assert_eq!(u, product_minor(&named("F"), &named("S").transpose(), 4).unwrap());
    }

    #[test]
    fn lu_reports_singular_leading_minor() {
        let a = InfMatrix::with_shape("antidiag", Shape::General, |i, j| {
            if i + j == 3 {
                RatFunc::one()
            } else {
                RatFunc::zero()
            }
        });
        assert_eq!(lu_minor(&a, 2), Err(InfMatError::NoLu { k: 1 }));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(invert_triangular_minor(&minor(&named("T0"), 3)).unwrap(), minor(&named("T0_inv"), 3));
        assert_eq!(invert_triangular_minor(&DenseMinor::identity(5)).unwrap(), DenseMinor::identity(5));
        let dm = catalog(MatrixName::Dq, &CatalogParams::with_q(crate::exactpoly::int(-1))).unwrap();
        let expected = &(&minor(&dm, 4) * &minor(&named("P"), 4)) * &minor(&dm, 4);
        assert_eq!(invert_triangular_minor(&minor(&named("P"), 4)).unwrap(), expected);
        let u = minor(&named("U0_tilde"), 4);
        assert_eq!(&u * &invert_triangular_minor(&u).unwrap(), DenseMinor::identity(4));
        let mut singular = DenseMinor::identity(3);
        singular.set(2, 2, RatFunc::zero());
        assert_eq!(invert_triangular_minor(&singular), Err(InfMatError::Singular { index: 2 }));
        assert_eq!(invert_triangular_minor(&minor(&named("V"), 2)), Err(InfMatError::NotTriangular));
    }
}
