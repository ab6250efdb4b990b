use std::ops::{Mul, Sub};

use crate::exactpoly::RatFunc;
use crate::report::Witness;

/// An `n x n` upper-left corner of an infinite matrix. Accessors are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMinor {
    n: usize,
    rows: Vec<Vec<RatFunc>>,
}

impl DenseMinor {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> RatFunc) -> Self {
        let rows = (1..=n).map(|i| (1..=n).map(|j| f(i, j)).collect()).collect();
        DenseMinor { n, rows }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "minor rows must form a square array");
        DenseMinor { n, rows }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { RatFunc::one() } else { RatFunc::zero() })
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| RatFunc::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.rows[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.rows[i - 1][j - 1] = v;
    }

    pub fn rows(&self) -> &[Vec<RatFunc>] {
        &self.rows
    }

    /// Upper-left `k x k` corner.
    pub fn corner(&self, k: usize) -> DenseMinor {
        assert!(k <= self.n);
        Self::from_fn(k, |i, j| self.get(i, j).clone())
    }

    pub fn transpose(&self) -> DenseMinor {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// The `n`-minor of `s(A)`, where `self` holds at least the
    /// `(n-1)`-minor of `A`.
    pub fn shifted_to(&self, n: usize) -> DenseMinor {
        assert!(self.n + 1 >= n, "not enough of the matrix to shift");
        Self::from_fn(n, |i, j| match (i, j) {
            (1, 1) => RatFunc::one(),
            (1, _) | (_, 1) => RatFunc::zero(),
            _ => self.get(i - 1, j - 1).clone(),
        })
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.first_nonzero_where(|i, j| j > i).is_none()
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.first_nonzero_where(|i, j| i > j).is_none()
    }

    /// First (row-major) nonzero entry at a position selected by `pred`.
    pub fn first_nonzero_where(&self, pred: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
        for i in 1..=self.n {
            for j in 1..=self.n {
                if pred(i, j) && !self.get(i, j).is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// First entry (row-major) that is not a polynomial.
    pub fn first_non_polynomial(&self) -> Option<(usize, usize)> {
        for i in 1..=self.n {
            for j in 1..=self.n {
                if !self.get(i, j).is_polynomial() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// First entry (row-major) where `self` (the expected value) and `actual`
    /// differ.
    pub fn first_difference(&self, actual: &DenseMinor) -> Option<Witness> {
        assert_eq!(self.n, actual.n, "compared minors must have equal size");
        for i in 1..=self.n {
            for j in 1..=self.n {
                let (e, a) = (self.get(i, j), actual.get(i, j));
                if e != a {
                    return Some(Witness { i, j, expected: e.to_string(), actual: a.to_string() });
                }
            }
        }
        None
    }

    /// Entries as canonical strings in the variable `x`.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<DenseMinor, crate::exactpoly::PolyError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| RatFunc::parse_var(s, "x")).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        if parsed.iter().any(|r| r.len() != parsed.len()) {
            return Err(crate::exactpoly::PolyError::Parse {
                input: String::new(),
                position: 0,
                message: "minor rows must form a square array".into(),
            });
        }
        Ok(DenseMinor::from_rows(parsed))
    }

    /// Replaces rows `k+1..=n` by `block * rows(k+1..=n)`, where `block` is
    /// `(n-k) x (n-k)`. This is left multiplication by `diag(I_k, block)`.
    #[allow(clippy::needless_range_loop)]
    pub(crate) fn left_mul_lower_block(&mut self, k: usize, block: &DenseMinor) {
        let m = self.n - k;
        debug_assert_eq!(block.n, m);
        let old: Vec<Vec<RatFunc>> = self.rows[k..].to_vec();
        for r in 0..m {
            for c in 0..self.n {
                let mut acc = RatFunc::zero();
                for t in 0..=r {
                    let b = &block.rows[r][t];
                    if !b.is_zero() && !old[t][c].is_zero() {
                        acc = &acc + &(b * &old[t][c]);
                    }
                }
                self.rows[k + r][c] = acc;
            }
        }
    }

    /// Replaces columns `k+1..=n` by `cols(k+1..=n) * block`; right
    /// multiplication by `diag(I_k, block)` with `block` lower triangular.
    #[allow(clippy::needless_range_loop)]
    pub(crate) fn right_mul_lower_block(&mut self, k: usize, block: &DenseMinor) {
        let m = self.n - k;
        debug_assert_eq!(block.n, m);
        for row in self.rows.iter_mut() {
            let old: Vec<RatFunc> = row[k..].to_vec();
            for c in 0..m {
                let mut acc = RatFunc::zero();
                for t in c..m {
                    let b = &block.rows[t][c];
                    if !b.is_zero() && !old[t].is_zero() {
                        acc = &acc + &(&old[t] * b);
                    }
                }
                row[k + c] = acc;
            }
        }
    }
}

impl Mul for &DenseMinor {
    type Output = DenseMinor;
    fn mul(self, rhs: &DenseMinor) -> DenseMinor {
        assert_eq!(self.n, rhs.n, "multiplied minors must have equal size");
        DenseMinor::from_fn(self.n, |i, j| {
            let mut acc = RatFunc::zero();
            for k in 1..=self.n {
                let (a, b) = (self.get(i, k), rhs.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }
}

impl Sub for &DenseMinor {
    type Output = DenseMinor;
    fn sub(self, rhs: &DenseMinor) -> DenseMinor {
        assert_eq!(self.n, rhs.n, "subtracted minors must have equal size");
        DenseMinor::from_fn(self.n, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}
