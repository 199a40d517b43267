//! Dense matrices over `F_p` with exact rank, kernel and image computations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use cusp_groebner::PrimeField;

/// A dense `rows × cols` matrix over `F_p`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GfMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl GfMatrix {
    /// The zero matrix.
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    /// The identity matrix of size `n`.
    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows (reduced mod `p`).
    ///
    /// # Panics
    ///
    /// Panics if the rows have different lengths.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * cols + j] = field.from_i64(x);
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, &x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x % field.p();
            }
        }
        m
    }

    /// The coefficient field.
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    /// Sets entry `(i, j)` (reduced mod `p`).
    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x % self.field.p();
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Whether every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Whether the matrix is square with zeros on and below the diagonal.
    pub fn is_strictly_upper(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..=i).all(|j| self.get(i, j) == 0))
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        let data = self.data.iter().map(|&x| f.mul(x, c % f.p())).collect();
        Self { data, ..*self }
    }

    /// `self^k` for a square matrix.
    pub fn pow(&self, k: u32) -> Self {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        (0..k).fold(Self::identity(self.field, self.rows), |acc, _| &acc * self)
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        let p = self.field.p();
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0, |acc, j| (acc + self.get(i, j) * v[j]) % p))
            .collect()
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = Self::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[i * m.cols + j] = self.get(i, j);
            }
            for j in 0..other.cols {
                m.data[i * m.cols + self.cols + j] = other.get(i, j);
            }
        }
        m
    }

    /// The block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert!(a.rows == b.rows && c.rows == d.rows && a.cols == c.cols && b.cols == d.cols);
        let (top, bottom) = (a.hstack(b), c.hstack(d));
        let mut data = top.data;
        data.extend(bottom.data);
        Self { field: a.field, rows: a.rows + c.rows, cols: top.cols, data }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, piv * m.cols + j);
            }
            let inv = f.inv(m.get(r, c));
            for j in 0..m.cols {
                m.data[r * m.cols + j] = f.mul(m.get(r, j), inv);
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i != r && factor != 0 {
                    for j in 0..m.cols {
                        let x = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                        m.data[i * m.cols + j] = x;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// The rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the kernel `{v : self · v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let (m, pivots) = self.rref();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, free));
                }
                v
            })
            .collect()
    }

    /// A basis of the kernel as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Self {
        Self::from_columns(self.field, self.cols, &self.kernel())
    }
}

impl Add for &GfMatrix {
    type Output = GfMatrix;
    fn add(self, other: &GfMatrix) -> GfMatrix {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        GfMatrix { data, ..*self }
    }
}

impl Sub for &GfMatrix {
    type Output = GfMatrix;
    fn sub(self, other: &GfMatrix) -> GfMatrix {
        self + &(-other)
    }
}

impl Neg for &GfMatrix {
    type Output = GfMatrix;
    fn neg(self) -> GfMatrix {
        let f = self.field;
        GfMatrix { data: self.data.iter().map(|&a| f.neg(a)).collect(), ..*self }
    }
}

impl Mul for &GfMatrix {
    type Output = GfMatrix;
    fn mul(self, other: &GfMatrix) -> GfMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let p = self.field.p();
        let mut out = GfMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let x = &mut out.data[i * other.cols + j];
                    *x = (*x + a * other.get(k, j)) % p;
                }
            }
        }
        out
    }
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GfMatrix[F_{}]", self.field.p())?;
        let rows: Vec<Vec<u64>> = (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect();
        write!(f, "{rows:?}")
    }
}
