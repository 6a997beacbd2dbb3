//! Dense matrices over exact rationals.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Row-major dense matrix. Indices are 0-based `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Ok(RationalMatrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_ratios(rows: &[&[(i64, i64)]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&(p, q)| rat(p, q)).collect()).collect())
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    /// Upper-left `rows x cols` block.
    pub fn block(&self, rows: usize, cols: usize) -> Result<Self> {
        if rows > self.rows || cols > self.cols {
            return Err(Error::Shape(format!("block {rows}x{cols} of a {}x{} matrix", self.rows, self.cols)));
        }
        Ok(Self::from_fn(rows, cols, |i, j| self[(i, j)].clone()))
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        mat_mul(self, other)
    }

    pub fn inverse(&self) -> Result<RationalMatrix> {
        mat_inverse(self)
    }

    /// Exact determinant by fraction-preserving elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let mut a = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &p;
                for c in col..n {
                    let delta = &factor * &a[(col, c)];
                    a[(r, c)] -= delta;
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(r1 * self.cols + c, r2 * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Row `i` of `m` scaled to integers, with the scale (lcm of the row's denominators).
fn integral_row(m: &RationalMatrix, i: usize) -> (Vec<BigInt>, BigInt) {
    let scale = m.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let row = m.row(i).iter().map(|x| x.numer() * (&scale / x.denom())).collect();
    (row, scale)
}

/// Exact product. Each row of `a` and column of `b` is brought to a common
/// denominator first, so the inner sums run over integers.
pub fn mat_mul(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    if a.cols != b.rows {
        return Err(Error::Shape(format!("cannot multiply {}x{} by {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    let bt = b.transpose();
    let a_rows: Vec<_> = (0..a.rows).map(|i| integral_row(a, i)).collect();
    let b_cols: Vec<_> = (0..bt.rows).map(|j| integral_row(&bt, j)).collect();
    Ok(RationalMatrix::from_fn(a.rows, b.cols, |i, j| {
        let (row, row_scale) = &a_rows[i];
        let (col, col_scale) = &b_cols[j];
        let mut sum = BigInt::zero();
        for (x, y) in row.iter().zip(col) {
            if !x.is_zero() && !y.is_zero() {
                sum += x * y;
            }
        }
        Rational::new(sum, row_scale * col_scale)
    }))
}

/// Exact inverse by fraction-free Gauss-Jordan elimination.
///
/// Rows are first cleared of denominators, `a = D⁻¹ N` with `D` diagonal, so
/// `a⁻¹ = N⁻¹ D`. Elimination on `[N | I]` keeps every entry an integer minor
/// of `N` (each division by the previous pivot is exact) and ends with
/// `[d I | d N⁻¹]`.
pub fn mat_inverse(a: &RationalMatrix) -> Result<RationalMatrix> {
    if !a.is_square() {
        return Err(Error::Shape(format!("cannot invert a {}x{} matrix", a.rows, a.cols)));
    }
    let n = a.rows;
    let width = 2 * n;
    let mut scales = Vec::with_capacity(n);
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let (mut row, scale) = integral_row(a, i);
        row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
        m.push(row);
        scales.push(scale);
    }
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero()).ok_or(Error::Singular)?;
        m.swap(pivot, k);
        let pivot_row = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = std::mem::take(&mut row[k]);
            for j in (0..width).filter(|&j| j != k) {
                let mut v = &pivot_row[k] * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
        }
        prev = pivot_row[k].clone();
    }
    Ok(RationalMatrix::from_fn(n, n, |i, j| Rational::new(&m[i][n + j] * &scales[j], m[i][i].clone())))
}
