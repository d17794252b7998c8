use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, q, Q};
use crate::{Error, Result};

/// Dense matrix over `Q`. Zero-sized dimensions are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn diag(entries: &[Q]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn scalar(x: Q) -> Self {
        Self::diag(&[x])
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<Q>>, cols: usize) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "ragged row of length {} (expected {cols})",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(RationalMatrix {
            rows: r,
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|x| q(*x)).collect())
                .collect(),
            cols,
        )
        .expect("ragged literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> Self {
        self.submatrix(i..i + 1, 0..self.cols)
    }

    pub fn col(&self, j: usize) -> Self {
        self.submatrix(0..self.rows, j..j + 1)
    }

    pub fn submatrix(&self, r: std::ops::Range<usize>, c: std::ops::Range<usize>) -> Self {
        let mut out = Self::zeros(r.len(), c.len());
        for (oi, i) in r.clone().enumerate() {
            for (oj, j) in c.clone().enumerate() {
                out[(oi, oj)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{:?} x {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{:?} + {:?}",
                self.shape(),
                other.shape()
            )));
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Horizontal concatenation; all blocks must share the row count `rows`.
    pub fn hstack(rows: usize, blocks: &[&Self]) -> Result<Self> {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            if b.rows != rows {
                return Err(Error::ShapeMismatch(format!(
                    "hstack: block with {} rows, expected {rows}",
                    b.rows
                )));
            }
            out.paste(0, off, b);
            off += b.cols;
        }
        Ok(out)
    }

    /// Vertical concatenation; all blocks must share the column count `cols`.
    pub fn vstack(cols: usize, blocks: &[&Self]) -> Result<Self> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::ShapeMismatch(format!(
                    "vstack: block with {} cols, expected {cols}",
                    b.cols
                )));
            }
            out.paste(off, 0, b);
            off += b.rows;
        }
        Ok(out)
    }

    /// Assembles a block matrix from explicit row heights and column widths.
    pub fn blocks(heights: &[usize], widths: &[usize], grid: &[Vec<Self>]) -> Result<Self> {
        let mut out = Self::zeros(heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (bi, h) in heights.iter().enumerate() {
            let mut c0 = 0;
            for (bj, w) in widths.iter().enumerate() {
                let b = &grid[bi][bj];
                if b.shape() != (*h, *w) {
                    return Err(Error::ShapeMismatch(format!(
                        "block ({bi},{bj}) has shape {:?}, expected {:?}",
                        b.shape(),
                        (h, w)
                    )));
                }
                out.paste(r0, c0, b);
                c0 += w;
            }
            r0 += h;
        }
        Ok(out)
    }

    fn paste(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(r, j)] * &f;
                        m.data[i * m.cols + j] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the row space, as the nonzero rows of the RREF.
    pub fn row_basis(&self) -> Self {
        let (r, p) = self.rref();
        r.submatrix(0..p.len(), 0..self.cols)
    }

    /// A basis of the column space, as columns.
    pub fn col_basis(&self) -> Self {
        self.transpose().row_basis().transpose()
    }

    /// A basis of the kernel, as columns.
    pub fn kernel(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                out[(p, k)] = -r[(i, f)].clone();
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "inverse of non-square {:?}",
                self.shape()
            )));
        }
        let n = self.rows;
        let aug = Self::hstack(n, &[self, &Self::identity(n)])?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n.saturating_sub(1)..].iter().any(|&p| p >= n) {
            return Err(Error::SingularMatrix);
        }
        Ok(r.submatrix(0..n, n..2 * n))
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| format_rational(&self[(i, j)]))
                    .collect()
            })
            .collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed, cols)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of {:?}",
            self.shape()
        );
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of {:?}",
            self.shape()
        );
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_add(&-rhs)
            .expect("matrix difference shape mismatch")
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        self.scale(&-Q::one())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {:?}", self.rows, self.cols, self.to_strings())
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    /// Nested arrays of `"p/q"` strings. A matrix with no rows reads as 0×0;
    /// callers that know the expected shape fix it up.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        Self::from_strings(&rows).map_err(D::Error::custom)
    }
}
