//! Dense matrices over GF(p): rank, determinant, Pfaffians, structural
//! predicates and principal submatrices.
//!
//! Matrices are immutable values for all algorithmic purposes; every operation
//! here is a pure function. Row and column indices are 0-based at this layer;
//! the 1-based vertex/cell conventions live in the graph and space modules.

use std::fmt;

use thiserror::Error;

use crate::field::{addp, invp, mulp, negp, subp, FieldElem, FieldSpec};

/// Perfect-matching count (n-1)!! becomes impractical beyond this order.
pub const MAX_COMBINATORIAL_PFAFFIAN: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("operation requires a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("matrices belong to different fields")]
    FieldMismatch,
    #[error("Pfaffian requires even order, got {0}")]
    OddOrder(usize),
    #[error("Pfaffian requires an alternating matrix")]
    NotAlternating,
    #[error("order {n} exceeds the combinatorial Pfaffian bound {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("submatrix index {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("ragged or empty row data")]
    BadRowData,
}

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    vals: Vec<u16>,
}

impl Matrix {
    pub fn zero(spec: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { spec, rows, cols, vals: vec![0; rows * cols] }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(spec, n, n);
        for i in 0..n {
            m.vals[i * n + i] = 1 % spec.p();
        }
        m
    }

    /// Builds a matrix from integer rows; entries are reduced mod p.
    pub fn from_rows(spec: FieldSpec, rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::BadRowData);
        }
        let mut m = Matrix::zero(spec, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.vals[i * c + j] = spec.elem(v).value();
            }
        }
        Ok(m)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        self.spec.elem(self.vals[i * self.cols + j] as i64)
    }

    pub(crate) fn raw(&self, i: usize, j: usize) -> u16 {
        self.vals[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        assert_eq!(v.spec(), self.spec, "entry from a different field");
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        self.vals[i * self.cols + j] = v.value();
    }

    pub fn is_zero(&self) -> bool {
        self.vals.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.spec, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.vals[j * self.rows + i] = self.vals[i * self.cols + j];
            }
        }
        t
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<(), MatrixError> {
        if self.spec != other.spec {
            return Err(MatrixError::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_same_shape(other)?;
        let p = self.spec.p();
        let mut out = self.clone();
        for (a, &b) in out.vals.iter_mut().zip(&other.vals) {
            *a = addp(*a, b, p);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_same_shape(other)?;
        let p = self.spec.p();
        let mut out = self.clone();
        for (a, &b) in out.vals.iter_mut().zip(&other.vals) {
            *a = subp(*a, b, p);
        }
        Ok(out)
    }

    pub fn scale(&self, c: FieldElem) -> Matrix {
        assert_eq!(c.spec(), self.spec, "scalar from a different field");
        let p = self.spec.p();
        let mut out = self.clone();
        for a in out.vals.iter_mut() {
            *a = mulp(*a, c.value(), p);
        }
        out
    }

    /// `self += c * other`; shapes and fields must match.
    pub fn add_scaled_assign(&mut self, c: FieldElem, other: &Matrix) {
        self.check_same_shape(other).expect("add_scaled_assign shape");
        let p = self.spec.p();
        for (a, &b) in self.vals.iter_mut().zip(&other.vals) {
            *a = addp(*a, mulp(c.value(), b, p), p);
        }
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.spec != other.spec {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let p = self.spec.p();
        let mut out = Matrix::zero(self.spec, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.vals[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let t = mulp(a, other.vals[k * other.cols + j], p);
                    let cell = &mut out.vals[i * other.cols + j];
                    *cell = addp(*cell, t, p);
                }
            }
        }
        Ok(out)
    }

    /// Row rank by Gaussian elimination with row pivoting.
    pub fn rank(&self) -> usize {
        let p = self.spec.p();
        let mut m = self.vals.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    m.swap(r * cols + j, piv * cols + j);
                }
            }
            let inv = invp(m[r * cols + c], p);
            for i in (r + 1)..rows {
                let f = mulp(m[i * cols + c], inv, p);
                if f == 0 {
                    continue;
                }
                for j in c..cols {
                    let t = mulp(f, m[r * cols + j], p);
                    m[i * cols + j] = subp(m[i * cols + j], t, p);
                }
            }
            r += 1;
            if r == rows {
                break;
            }
        }
        r
    }

    /// Determinant by elimination with sign tracking.
    pub fn det(&self) -> Result<FieldElem, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let p = self.spec.p();
        let mut m = self.vals.clone();
        let mut sign_neg = false;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| m[i * n + c] != 0) else {
                return Ok(self.spec.zero());
            };
            if piv != c {
                for j in 0..n {
                    m.swap(c * n + j, piv * n + j);
                }
                sign_neg = !sign_neg;
            }
            let inv = invp(m[c * n + c], p);
            for i in (c + 1)..n {
                let f = mulp(m[i * n + c], inv, p);
                if f == 0 {
                    continue;
                }
                for j in c..n {
                    let t = mulp(f, m[c * n + j], p);
                    m[i * n + j] = subp(m[i * n + j], t, p);
                }
            }
        }
        let mut acc = 1 % p;
        for i in 0..n {
            acc = mulp(acc, m[i * n + i], p);
        }
        if sign_neg {
            acc = negp(acc, p);
        }
        Ok(self.spec.elem(acc as i64))
    }

    fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Support symmetry: A(i,j) != 0 iff A(j,i) != 0.
    pub fn is_weakly_symmetric(&self) -> Result<bool, MatrixError> {
        let n = self.require_square()?;
        for i in 0..n {
            for j in (i + 1)..n {
                if (self.raw(i, j) != 0) != (self.raw(j, i) != 0) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_symmetric(&self) -> Result<bool, MatrixError> {
        let n = self.require_square()?;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.raw(i, j) != self.raw(j, i) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Skew-symmetric with zero diagonal; over GF(2) this means symmetric
    /// with zero diagonal.
    pub fn is_alternating(&self) -> Result<bool, MatrixError> {
        let n = self.require_square()?;
        let p = self.spec.p();
        for i in 0..n {
            if self.raw(i, i) != 0 {
                return Ok(false);
            }
            for j in (i + 1)..n {
                if self.raw(j, i) != negp(self.raw(i, j), p) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn require_alternating_even(&self) -> Result<usize, MatrixError> {
        let n = self.require_square()?;
        if n % 2 != 0 {
            return Err(MatrixError::OddOrder(n));
        }
        if !self.is_alternating()? {
            return Err(MatrixError::NotAlternating);
        }
        Ok(n)
    }

    /// Pfaffian as the signed sum over all perfect matchings of K_n.
    ///
    /// Matchings are generated with the lowest free vertex first, then sorted
    /// colexicographically; the sign of each matching is evaluated explicitly
    /// as a permutation sign.
    pub fn pfaffian_combinatorial(&self) -> Result<FieldElem, MatrixError> {
        let n = self.require_alternating_even()?;
        if n > MAX_COMBINATORIAL_PFAFFIAN {
            return Err(MatrixError::OrderTooLarge { n, max: MAX_COMBINATORIAL_PFAFFIAN });
        }
        let p = self.spec.p();
        let mut acc = 0u16;
        for m in perfect_matchings(n) {
            let mut prod = 1 % p;
            for &(a, b) in &m {
                prod = mulp(prod, self.raw(a, b), p);
                if prod == 0 {
                    break;
                }
            }
            if prod == 0 {
                continue;
            }
            if matching_sign(&m) < 0 {
                prod = negp(prod, p);
            }
            acc = addp(acc, prod, p);
        }
        Ok(self.spec.elem(acc as i64))
    }

    /// Pfaffian by congruence elimination, O(n^3), valid in every
    /// characteristic including 2.
    ///
    /// Column pairs are processed left to right. If no pivot exists in the
    /// current row the trailing block is singular and the Pfaffian is 0.
    /// Symmetric row/column swaps each flip the accumulated sign; the
    /// congruence row operations leave it unchanged.
    pub fn pfaffian_elimination(&self) -> Result<FieldElem, MatrixError> {
        let n = self.require_alternating_even()?;
        let p = self.spec.p();
        let mut m = self.vals.clone();
        let mut sign_neg = false;
        let mut prod = 1 % p;
        let idx = |i: usize, j: usize| i * n + j;
        let mut k = 0;
        while k < n {
            let Some(piv) = ((k + 1)..n).find(|&j| m[idx(k, j)] != 0) else {
                return Ok(self.spec.zero());
            };
            if piv != k + 1 {
                for j in 0..n {
                    m.swap(idx(k + 1, j), idx(piv, j));
                }
                for i in 0..n {
                    m.swap(idx(i, k + 1), idx(i, piv));
                }
                sign_neg = !sign_neg;
            }
            let pv = m[idx(k, k + 1)];
            let pv_inv = invp(pv, p);
            prod = mulp(prod, pv, p);
            for i in (k + 2)..n {
                // Zero out column k+1 of row i using row k (and symmetrically).
                let f = mulp(m[idx(i, k + 1)], pv_inv, p);
                if f != 0 {
                    // row_i -= f * row_k ; col_i -= f * col_k  (m[k][k+1] = pv)
                    let fneg = negp(f, p);
                    for j in 0..n {
                        let t = mulp(fneg, m[idx(k, j)], p);
                        m[idx(i, j)] = addp(m[idx(i, j)], t, p);
                    }
                    for r in 0..n {
                        let t = mulp(fneg, m[idx(r, k)], p);
                        m[idx(r, i)] = addp(m[idx(r, i)], t, p);
                    }
                }
                // Zero out column k of row i using row k+1 (m[k+1][k] = -pv).
                let g = mulp(m[idx(i, k)], pv_inv, p);
                if g != 0 {
                    for j in 0..n {
                        let t = mulp(g, m[idx(k + 1, j)], p);
                        m[idx(i, j)] = addp(m[idx(i, j)], t, p);
                    }
                    for r in 0..n {
                        let t = mulp(g, m[idx(r, k + 1)], p);
                        m[idx(r, i)] = addp(m[idx(r, i)], t, p);
                    }
                }
            }
            k += 2;
        }
        let mut out = prod;
        if sign_neg {
            out = negp(out, p);
        }
        Ok(self.spec.elem(out as i64))
    }

    /// The |idx| x |idx| submatrix on the given strictly increasing 0-based
    /// row/column indices.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<Matrix, MatrixError> {
        let n = self.require_square()?;
        for w in idx.windows(2) {
            assert!(w[0] < w[1], "submatrix indices must be strictly increasing");
        }
        if let Some(&bad) = idx.iter().find(|&&i| i >= n) {
            return Err(MatrixError::IndexOutOfRange { index: bad, n });
        }
        let m = idx.len();
        let mut out = Matrix::zero(self.spec, m, m);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out.vals[a * m + b] = self.raw(i, j);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.raw(i, j))?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// All perfect matchings of the vertex set 0..n, each as a list of pairs
/// (a, b) with a < b, generated lowest-free-vertex-first and then sorted
/// colexicographically (by (b, a)).
pub(crate) fn perfect_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(free: &[usize], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            let mut m = cur.clone();
            m.sort_by_key(|&(a, b)| (b, a));
            out.push(m);
            return;
        }
        let a = free[0];
        for bi in 1..free.len() {
            let b = free[bi];
            let mut rest: Vec<usize> = free[1..].to_vec();
            rest.remove(bi - 1);
            cur.push((a, b));
            rec(&rest, cur, out);
            cur.pop();
        }
    }
    if n % 2 != 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let free: Vec<usize> = (0..n).collect();
    rec(&free, &mut Vec::new(), &mut out);
    out
}

/// Sign of the permutation sending 0,1,...,n-1 to a1,b1,...,at,bt for a
/// colex-sorted matching.
pub(crate) fn matching_sign(m: &[(usize, usize)]) -> i32 {
    let flat: Vec<usize> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
    permutation_sign(&flat)
}

/// Sign by inversion count.
pub(crate) fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}
