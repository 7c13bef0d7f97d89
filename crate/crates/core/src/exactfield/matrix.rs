use std::fmt::Debug;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{sign, RatFun, Q};
use crate::error::{Error, Result};

/// Minimal field interface shared by ℚ and ℚ(t).
pub trait FieldElem: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn sum(items: Vec<Self>) -> Self {
        items.iter().fold(Self::zero(), |acc, x| acc.add(x))
    }
}

impl FieldElem for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl FieldElem for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        RatFun::inv(self).ok()
    }
    fn sum(items: Vec<Self>) -> Self {
        RatFun::sum(items)
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type QMatrix = Matrix<Q>;
pub type RatMatrix = Matrix<RatFun>;

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: FieldElem> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn from_columns(cols: &[Vec<T>]) -> Self {
        let r = cols.first().map_or(0, Vec::len);
        Self::from_fn(r, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: FieldElem>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U: FieldElem>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix dimension mismatch");
        Self::from_fn(self.rows, o.cols, |i, j| {
            let terms = (0..self.cols)
                .filter(|&k| !self[(i, k)].is_zero() && !o[(k, j)].is_zero())
                .map(|k| self[(i, k)].mul(&o[(k, j)]))
                .collect();
            T::sum(terms)
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].add(&o[(i, j)]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].sub(&o[(i, j)]))
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self[(i, j)].is_zero() {
                        acc = acc.add(&self[(i, j)].mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    /// `Bᵀ · self · B`.
    pub fn congruence(&self, b: &Self) -> Self {
        b.transpose().mul(self).mul(b)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Reduced row echelon form and the pivot columns.
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
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m[(r, j)].mul(&inv);
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in 0..m.cols {
                        if !m[(r, j)].is_zero() {
                            let v = m[(i, j)].sub(&f.mul(&m[(r, j)]));
                            m[(i, j)] = v;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = r[(row, f)].neg();
                }
                v
            })
            .collect()
    }

    /// Basis of the column space taken from the original columns
    /// (first-nonzero pivoting), with the chosen column indices.
    pub fn column_basis(&self) -> (Vec<Vec<T>>, Vec<usize>) {
        let (_, pivots) = self.rref();
        (pivots.iter().map(|&c| self.column(c)).collect(), pivots)
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    /// Solves `self · x = b`; errors if inconsistent.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        let n = self.cols;
        let aug = Self::from_fn(self.rows, n + 1, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&n) {
            return Err(Error::Singular);
        }
        let mut x = vec![T::zero(); n];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, n)].clone();
        }
        Ok(x)
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = self.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return T::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = det.neg();
            }
            let piv = m[(c, c)].clone();
            det = det.mul(&piv);
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].mul(&inv);
                for j in c..n {
                    if !m[(c, j)].is_zero() {
                        let v = m[(i, j)].sub(&f.mul(&m[(c, j)]));
                        m[(i, j)] = v;
                    }
                }
            }
        }
        det
    }
}

impl QMatrix {
    /// Inertia `(p, q, z)` of a symmetric rational matrix by congruence
    /// diagonalization.
    pub fn inertia(&self) -> (usize, usize, usize) {
        let mut m = self.clone();
        let n = m.rows;
        let (mut p, mut q) = (0, 0);
        let mut active: Vec<usize> = (0..n).collect();
        while !active.is_empty() {
            let diag = active.iter().copied().find(|&i| !Zero::is_zero(&m[(i, i)]));
            let piv = match diag {
                Some(i) => i,
                None => {
                    let off = active.iter().flat_map(|&i| active.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !Zero::is_zero(&m[(i, j)]));
                    let Some((i, j)) = off else { break };
                    add_row_col(&mut m, i, j);
                    i
                }
            };
            let d = m[(piv, piv)].clone();
            match sign(&d) {
                1 => p += 1,
                _ => q += 1,
            }
            active.retain(|&i| i != piv);
            for &i in &active {
                if Zero::is_zero(&m[(i, piv)]) {
                    continue;
                }
                let f = &m[(i, piv)] / &d;
                for &j in &active {
                    let v = &m[(i, j)] - &f * &m[(piv, j)];
                    m[(i, j)] = v;
                }
            }
            for &i in &active {
                m[(i, piv)] = <Q as Zero>::zero();
                m[(piv, i)] = <Q as Zero>::zero();
            }
        }
        (p, q, n - p - q)
    }
}

/// Replaces basis vector `i` by `e_i + e_j` in a symmetric matrix.
pub(crate) fn add_row_col<T: FieldElem>(m: &mut Matrix<T>, i: usize, j: usize) {
    for c in 0..m.cols {
        let v = m[(i, c)].add(&m[(j, c)]);
        m[(i, c)] = v;
    }
    for r in 0..m.rows {
        let v = m[(r, i)].add(&m[(r, j)]);
        m[(r, i)] = v;
    }
}

impl RatMatrix {
    pub fn eval(&self, t0: &Q) -> Option<QMatrix> {
        let data = self.data.iter().map(|f| f.eval(t0)).collect::<Option<Vec<_>>>()?;
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn from_q(m: &QMatrix) -> Self {
        m.map(|x| RatFun::constant(x.clone()))
    }
}
