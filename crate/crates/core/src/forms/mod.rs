//! Exact integer matrices and symmetric bilinear forms.
//!
//! Everything here is exact: inertia comes from rational congruence
//! diagonalization, determinants from fraction-free elimination and Smith
//! invariants from unimodular row and column reduction over arbitrary
//! precision integers. No floating point is involved anywhere.

mod inertia;
mod smith;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use inertia::{inertia, Inertia};
pub use smith::{determinant, smith_invariants};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Ragged);
        }
        // An empty row list and a list of empty rows both describe a 0x0 matrix.
        let cols = if n == 0 { 0 } else { cols };
        let rows_count = if cols == 0 { 0 } else { n };
        Ok(IntMatrix {
            rows: rows_count,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        IntMatrix::from_rows(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.to_rows()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (k, v) in self.row(i).iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A symmetric integer matrix, i.e. a symmetric bilinear form on `Z^n`
/// written in some basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct SymIntMatrix(IntMatrix);

impl SymIntMatrix {
    pub fn zeros(n: usize) -> Self {
        SymIntMatrix(IntMatrix::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        SymIntMatrix(IntMatrix::identity(n))
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::try_from(IntMatrix::from_rows(rows)?)
    }

    /// Builds a symmetric matrix from its upper triangle; `f` is only
    /// called with `i <= j`.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        SymIntMatrix(m)
    }

    /// Parses a row-major literal such as `[[3,-1,0],[-1,4,-1],[0,-1,2]]`.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = serde_json::from_str(text.trim()).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: format!("bad matrix literal: {e}"),
        })?;
        Self::from_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0.get(i, j)
    }

    /// Sets entries `(i, j)` and `(j, i)` together.
    pub fn set_sym(&mut self, i: usize, j: usize, v: i64) {
        self.0.set(i, j, v);
        self.0.set(j, i, v);
    }

    pub fn add_sym(&mut self, i: usize, j: usize, delta: i64) {
        let v = self.get(i, j) + delta;
        self.set_sym(i, j, v);
    }

    pub fn as_int(&self) -> &IntMatrix {
        &self.0
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.0.to_rows()
    }

    pub fn inertia(&self) -> Inertia {
        inertia(self)
    }

    pub fn signature(&self) -> i64 {
        inertia(self).signature()
    }

    pub fn determinant(&self) -> num_bigint::BigInt {
        determinant(&self.0)
    }

    pub fn smith_invariants(&self) -> Vec<num_bigint::BigInt> {
        smith_invariants(&self.0)
    }

    /// Block diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &SymIntMatrix) -> SymIntMatrix {
        let (n, m) = (self.dim(), other.dim());
        let mut out = IntMatrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..m {
            for j in 0..m {
                out.set(n + i, n + j, other.get(i, j));
            }
        }
        SymIntMatrix(out)
    }

    /// The matrix with row and column `index` removed.
    pub fn without(&self, index: usize) -> SymIntMatrix {
        let n = self.dim();
        assert!(index < n);
        let keep: Vec<usize> = (0..n).filter(|&k| k != index).collect();
        SymIntMatrix(IntMatrix::from_fn(n - 1, n - 1, |i, j| {
            self.get(keep[i], keep[j])
        }))
    }

    /// Leading principal block of size `k`.
    pub fn leading(&self, k: usize) -> SymIntMatrix {
        assert!(k <= self.dim());
        SymIntMatrix(IntMatrix::from_fn(k, k, |i, j| self.get(i, j)))
    }

    /// Simultaneous permutation of rows and columns: entry `(i, j)` of the
    /// result is entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> SymIntMatrix {
        assert_eq!(perm.len(), self.dim());
        SymIntMatrix(IntMatrix::from_fn(self.dim(), self.dim(), |i, j| {
            self.get(perm[i], perm[j])
        }))
    }

    /// Change of basis `Uᵀ M U`.
    pub fn congruent(&self, u: &IntMatrix) -> SymIntMatrix {
        assert_eq!(u.rows(), self.dim());
        SymIntMatrix(u.transpose().mul(&self.0).mul(u))
    }

    /// True when every row sums to zero.
    pub fn has_zero_row_sums(&self) -> bool {
        (0..self.dim()).all(|i| self.0.row(i).iter().sum::<i64>() == 0)
    }
}

impl TryFrom<IntMatrix> for SymIntMatrix {
    type Error = Error;

    fn try_from(m: IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSymmetric { row: m.rows, col: m.cols });
        }
        for i in 0..m.rows {
            for j in (i + 1)..m.cols {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymIntMatrix(m))
    }
}

impl TryFrom<Vec<Vec<i64>>> for SymIntMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        SymIntMatrix::from_rows(rows)
    }
}

impl From<SymIntMatrix> for Vec<Vec<i64>> {
    fn from(m: SymIntMatrix) -> Self {
        m.to_rows()
    }
}

impl fmt::Debug for SymIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for SymIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
