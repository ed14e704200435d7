//! Dense exact matrices and the tensor-product kernels built on them.
//!
//! Index convention for tensor products, used everywhere in the crate: the
//! left factor owns the coarse (slow) index, so for `A ⊗ B`
//! `(A⊗B)[i·rB + k, j·cB + l] = A[i,j]·B[k,l]`, and the basis vector
//! `e_i ⊗ e_k` of `V ⊗ W` sits at position `i·dim W + k`.

use std::fmt;

use thiserror::Error;

use crate::field::Field;
use crate::par;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
}

/// Returned by [`Matrix::try_invert`] for singular or non-square input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotInvertible {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
}

impl NotInvertible {
    pub fn square(&self) -> bool {
        self.rows == self.cols
    }
}

impl fmt::Display for NotInvertible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.square() {
            write!(f, "singular {}x{} matrix of rank {}", self.rows, self.cols, self.rank)
        } else {
            write!(f, "non-square {}x{} matrix (rank {})", self.rows, self.cols, self.rank)
        }
    }
}

/// A surjection `projection: V -> coker` with `projection · A = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cokernel<F: Field> {
    pub projection: Matrix<F>,
    pub dim: usize,
}

#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for row in self.render_rows() {
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, f: impl Fn(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Row-major integer entries.
    pub fn from_i64(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: entries.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Column vector.
    pub fn column(field: &F, entries: Vec<F::Elem>) -> Self {
        let n = entries.len();
        Self::from_vec(field, n, 1, entries)
    }

    pub fn field(&self) -> &F {
        &self.field
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
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &F::Elem) {
        let k = i * self.cols + j;
        self.data[k] = self.field.add(&self.data[k], v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(&self.field, self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f.mul(x, s)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f.neg(x)).collect(),
        }
    }

    fn check_same(&self, other: &Self, op: &'static str) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.shape() != other.shape() {
            return Err(LinalgError::ShapeMismatch { op, left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same(other, "add")?;
        let f = &self.field;
        Ok(Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same(other, "sub")?;
        let f = &self.field;
        Ok(Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect(),
        })
    }

    /// Panics on a shape or field mismatch; see [`checked_add`](Self::checked_add).
    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("matrix add")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("matrix sub")
    }

    /// Matrix product `self · other`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let f = &self.field;
        let (n, m) = (self.rows, other.cols);
        let mut out = vec![f.zero(); n * m];
        let row_kernel = |i: usize, row: &mut [F::Elem]| {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let brow = &other.data[k * m..(k + 1) * m];
                for (acc, b) in row.iter_mut().zip(brow) {
                    if !f.is_zero(b) {
                        f.mul_add_assign(acc, a, b);
                    }
                }
            }
        };
        if n * m * self.cols >= 1 << 16 {
            par::for_each_row(&mut out, m, row_kernel);
        } else if m > 0 {
            out.chunks_mut(m).enumerate().for_each(|(i, row)| row_kernel(i, row));
        }
        Ok(Matrix { field: f.clone(), rows: n, cols: m, data: out })
    }

    /// Panics on a shape or field mismatch; see [`checked_mul`](Self::checked_mul).
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("matrix mul")
    }

    /// Kronecker product; the left factor owns the coarse index.
    pub fn kron(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut data = vec![f.zero(); r * c];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            data[(i * other.rows + k) * c + j * other.cols + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        Ok(Matrix { field: f.clone(), rows: r, cols: c, data })
    }

    /// Infallible Kronecker product for operands known to share a field.
    pub fn tensor(&self, other: &Self) -> Self {
        self.kron(other).expect("tensor of matrices over one field")
    }

    /// `A_1 ⊗ A_2 ⊗ … ⊗ A_n`; the empty product is the 1x1 identity.
    pub fn tensor_all(field: &F, factors: &[&Self]) -> Self {
        factors
            .iter()
            .fold(Self::identity(field, 1), |acc, m| acc.tensor(m))
    }

    /// The permutation `⊗_k V_k -> ⊗_k V_{perm[k]}` that reorders tensor legs:
    /// output leg `k` is input leg `perm[k]`.
    pub fn permute_legs(field: &F, dims: &[usize], perm: &[usize]) -> Self {
        assert_eq!(dims.len(), perm.len());
        let total: usize = dims.iter().product();
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let mut m = Self::zeros(field, total, total);
        let mut idx = vec![0usize; dims.len()];
        for src in 0..total {
            // decode src into multi-index (left leg slowest)
            let mut rem = src;
            for k in (0..dims.len()).rev() {
                idx[k] = rem % dims[k];
                rem /= dims[k];
            }
            let mut dst = 0;
            for k in 0..perm.len() {
                dst = dst * out_dims[k] + idx[perm[k]];
            }
            m.data[dst * total + src] = field.one();
        }
        m
    }

    /// `permute_legs(dims, perm) · self`, computed by moving rows.
    pub fn permute_row_legs(&self, dims: &[usize], perm: &[usize]) -> Self {
        let total: usize = dims.iter().product();
        assert_eq!(total, self.rows, "leg dims must multiply to the row count");
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let mut out = Self::zeros(&self.field, self.rows, self.cols);
        let mut idx = vec![0usize; dims.len()];
        for src in 0..total {
            let mut rem = src;
            for k in (0..dims.len()).rev() {
                idx[k] = rem % dims[k];
                rem /= dims[k];
            }
            let mut dst = 0;
            for k in 0..perm.len() {
                dst = dst * out_dims[k] + idx[perm[k]];
            }
            out.data[dst * self.cols..(dst + 1) * self.cols]
                .clone_from_slice(&self.data[src * self.cols..(src + 1) * self.cols]);
        }
        out
    }

    /// Block-diagonal direct sum.
    pub fn block_diag(field: &F, blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            m.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        m
    }

    /// The flip `V_m ⊗ V_n -> V_n ⊗ V_m`.
    pub fn flip(field: &F, m: usize, n: usize) -> Self {
        Self::permute_legs(field, &[m, n], &[1, 0])
    }

    pub fn hstack(field: &F, rows: usize, blocks: &[&Self]) -> Self {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            m.set_block(0, off, b);
            off += b.cols;
        }
        m
    }

    pub fn vstack(field: &F, cols: usize, blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            m.set_block(off, 0, b);
            off += b.rows;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = b.get(i, j).clone();
            }
        }
    }

    pub fn add_block(&mut self, r0: usize, c0: usize, b: &Self) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                let v = b.get(i, j);
                if !self.field.is_zero(v) {
                    self.add_at(r0 + i, c0 + j, v);
                }
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(&self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            let pivot_row: Vec<F::Elem> = m.data[r * m.cols..(r + 1) * m.cols].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    if f.is_zero(&pivot_row[j]) {
                        continue;
                    }
                    let v = f.sub(m.get(i, j), &f.mul(&factor, &pivot_row[j]));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.rows > self.cols {
            self.transpose().rref().1.len()
        } else {
            self.rref().1.len()
        }
    }

    /// Exact two-sided inverse, or the reason there is none.
    pub fn try_invert(&self) -> Result<Self, NotInvertible> {
        if !self.is_square() {
            return Err(NotInvertible { rows: self.rows, cols: self.cols, rank: self.rank() });
        }
        let n = self.rows;
        let aug = Self::hstack(&self.field, n, &[self, &Self::identity(&self.field, n)]);
        let (red, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Err(NotInvertible { rows: n, cols: n, rank });
        }
        Ok(red.block(0, n, n, n))
    }

    /// Columns form a basis of `{v : self · v = 0}`.
    pub fn kernel_basis(&self) -> Self {
        let f = &self.field;
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(f, self.cols, free.len());
        for (col, &fc) in free.iter().enumerate() {
            k.set(fc, col, f.one());
            for (r, &pc) in pivots.iter().enumerate() {
                let v = red.get(r, fc);
                if !f.is_zero(v) {
                    k.set(pc, col, f.neg(v));
                }
            }
        }
        k
    }

    /// A surjection onto `target / image(self)`; rows span the left kernel.
    pub fn cokernel(&self) -> Cokernel<F> {
        let projection = self.transpose().kernel_basis().transpose();
        let projection = if projection.rows == 0 {
            Self::zeros(&self.field, 0, self.rows)
        } else {
            projection
        };
        let dim = projection.rows;
        Cokernel { projection, dim }
    }

    /// Some `X` with `self · X = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows, "solve row mismatch");
        let f = &self.field;
        let n = self.cols;
        let aug = Self::hstack(f, self.rows, &[self, rhs]);
        let (red, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Self::zeros(f, n, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, red.get(r, n + j).clone());
            }
        }
        Some(x)
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.field.render(self.get(i, j))).collect())
            .collect()
    }
}

/// Builds a composite `f_n ∘ … ∘ f_1` from maps listed in application order.
pub fn compose_chain<F: Field>(maps: &[&Matrix<F>]) -> Matrix<F> {
    let mut it = maps.iter();
    let first = (*it.next().expect("nonempty chain")).clone();
    it.fold(first, |acc, m| m.mul(&acc))
}
