use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::vector;
use super::Rational;
use crate::error::{dim_mismatch, Result};

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(dim_mismatch("RMatrix::new", rows * cols, data.len()));
        }
        Ok(RMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix {
            rows,
            cols,
            data: vector::zeros(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(dim_mismatch(format!("row {r}"), cols, row.len()));
            }
            data.extend(row);
        }
        Ok(RMatrix { rows: n, cols, data })
    }

    /// Convenience constructor from integer rows.
    ///
    /// # Panics
    ///
    /// Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| super::int(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer matrix")
    }

    /// Builds a `rows × columns.len()` matrix whose columns are the given
    /// vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(dim_mismatch(format!("column {c}"), rows, col.len()));
            }
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        Ok(m)
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

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// First entry (row-major) that is nonzero.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: vector::scale(c, &self.data),
        }
    }

    pub fn checked_mul(&self, rhs: &RMatrix) -> Result<RMatrix> {
        if self.cols != rhs.rows {
            return Err(dim_mismatch(
                "matrix product",
                format!("{} rows on the right", self.cols),
                rhs.rows,
            ));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                vector::axpy(out_row, a, rhs.row(k));
            }
        }
        Ok(out)
    }

    pub fn checked_mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(dim_mismatch("matrix-vector product", self.cols, v.len()));
        }
        let mut out = vector::zeros(self.rows);
        for (j, x) in vector::nonzeros(v) {
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    ///
    /// # Panics
    ///
    /// Panics if `v.len() != self.cols()`.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        self.checked_mul_vec(v).expect("matrix-vector shape")
    }

    fn zip_with(&self, rhs: &RMatrix, what: &str, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<RMatrix> {
        if self.shape() != rhs.shape() {
            return Err(dim_mismatch(
                what,
                format!("{:?}", self.shape()),
                format!("{:?}", rhs.shape()),
            ));
        }
        Ok(RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn checked_add(&self, rhs: &RMatrix) -> Result<RMatrix> {
        self.zip_with(rhs, "matrix sum", |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &RMatrix) -> Result<RMatrix> {
        self.zip_with(rhs, "matrix difference", |a, b| a - b)
    }

    /// Horizontal block `[a | b | ...]`.
    pub fn hstack(blocks: &[&RMatrix]) -> Result<RMatrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            if b.rows != rows {
                return Err(dim_mismatch("hstack", rows, b.rows));
            }
            for r in 0..rows {
                for c in 0..b.cols {
                    out[(r, off + c)] = b[(r, c)].clone();
                }
            }
            off += b.cols;
        }
        Ok(out)
    }

    /// Vertical block `[a; b; ...]`.
    pub fn vstack(blocks: &[&RMatrix]) -> Result<RMatrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(dim_mismatch("vstack", cols, b.cols));
            }
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Ok(RMatrix { rows, cols, data })
    }

    pub fn block_diag(blocks: &[&RMatrix]) -> RMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> RMatrix {
        let mut out = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                out[(r, k)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> RMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        RMatrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(p) = (prow..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, prow);
            let inv = m[(prow, col)].recip();
            for c in col..m.cols {
                let v = &m[(prow, c)] * &inv;
                m[(prow, c)] = v;
            }
            let pivot_row = m.row(prow).to_vec();
            for r in 0..m.rows {
                if r == prow || m[(r, col)].is_zero() {
                    continue;
                }
                let f = -m[(r, col)].clone();
                let cols = m.cols;
                vector::axpy(&mut m.data[r * cols..(r + 1) * cols], &f, &pivot_row);
            }
            pivots.push(col);
            prow += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square matrix, or `None` when singular or not square.
    pub fn inverse(&self) -> Option<RMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::hstack(&[self, &Self::identity(n)]).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.iter().filter(|&&p| p < n).count() < n {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(r.select_columns(&cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Rank and a kernel basis of `m`.
///
/// The basis has one vector per free column `f` of the row echelon form,
/// with a 1 in position `f` and 0 in every other free position, so the
/// output is deterministic.
///
/// ```
/// use lie2::exactlin::{int, rank_kernel, RMatrix};
/// let (rank, ker) = rank_kernel(&RMatrix::from_ints(&[[1, 2], [2, 4]]));
/// assert_eq!(rank, 1);
/// assert_eq!(ker, vec![vec![int(-2), int(1)]]);
/// ```
pub fn rank_kernel(m: &RMatrix) -> (usize, Vec<Vec<Rational>>) {
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis = (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vector::unit(m.cols, f);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect();
    (pivots.len(), basis)
}

/// Solves `m x = b`, returning the solution with zeros in the free
/// coordinates, or `None` if `b` is not in the column space.
///
/// ```
/// use lie2::exactlin::{int, solve_linear, RMatrix};
/// let m = RMatrix::from_ints(&[[1, 2], [2, 4]]);
/// assert_eq!(solve_linear(&m, &[int(1), int(2)]).unwrap(), Some(vec![int(1), int(0)]));
/// assert_eq!(solve_linear(&m, &[int(1), int(0)]).unwrap(), None);
/// ```
pub fn solve_linear(m: &RMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.rows {
        return Err(dim_mismatch("solve_linear right-hand side", m.rows, b.len()));
    }
    let bcol = RMatrix {
        rows: m.rows,
        cols: 1,
        data: b.to_vec(),
    };
    let aug = RMatrix::hstack(&[m, &bcol])?;
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vector::zeros(m.cols);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, m.cols)].clone();
    }
    Ok(Some(x))
}

/// Kronecker product, left factor major:
/// `(a⊗b)[(i,k),(j,l)] = a[i,j]·b[k,l]`.
pub fn kron(a: &RMatrix, b: &RMatrix) -> RMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = RMatrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = &b[(k, l)];
                    if !y.is_zero() {
                        out[(i * b.rows + k, j * b.cols + l)] = x * y;
                    }
                }
            }
        }
    }
    out
}

impl Index<(usize, usize)> for RMatrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

/// Panics on shape mismatch; use [`RMatrix::checked_mul`] for untrusted
/// shapes.
impl Mul for &RMatrix {
    type Output = RMatrix;

    fn mul(self, rhs: &RMatrix) -> RMatrix {
        self.checked_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &RMatrix {
    type Output = RMatrix;

    fn add(self, rhs: &RMatrix) -> RMatrix {
        self.checked_add(rhs).expect("matrix sum shape")
    }
}

impl Sub for &RMatrix {
    type Output = RMatrix;

    fn sub(self, rhs: &RMatrix) -> RMatrix {
        self.checked_sub(rhs).expect("matrix difference shape")
    }
}

impl Neg for &RMatrix {
    type Output = RMatrix;

    fn neg(self) -> RMatrix {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: vector::neg(&self.data),
        }
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let padded: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", padded.join("  "))?;
        }
        Ok(())
    }
}

impl From<RMatrix> for Vec<Vec<Rational>> {
    fn from(m: RMatrix) -> Self {
        m.to_rows()
    }
}
