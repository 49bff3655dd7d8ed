//! Dense linear algebra over exact rationals.
//!
//! Everything here works over [`Rational`] (arbitrary precision); there is no
//! floating point anywhere in the crate. Long eliminations poll a
//! [`CancelToken`] once per pivot column.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Cooperative cancellation flag shared between a caller and a running
/// computation.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }

    pub fn check(&self) -> Result<()> {
        if self.is_cancelled() {
            Err(Error::Cancelled)
        } else {
            Ok(())
        }
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vec<Rational>>,
    ncols: usize,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix {
            rows: vec![vec![Rational::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::SizeMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix { rows, ncols })
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.rows[i][i] = e.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Rational>> {
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.rows[i][j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, v)| i == j || v.is_zero()))
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.rows.iter().map(|r| dot(r, v)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols != other.nrows() {
            return Err(Error::SizeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols,
                other.nrows(),
                other.ncols
            )));
        }
        let mut out = Matrix::zeros(self.nrows(), other.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.rows[k].iter().enumerate() {
                    if !b.is_zero() {
                        out.rows[i][j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Matrix {
            rows,
            ncols: self.ncols,
        }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x * s).collect())
                .collect(),
            ncols: self.ncols,
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.nrows().min(self.ncols))
            .map(|i| self.rows[i][i].clone())
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub fn rank(&self) -> usize {
        rref(self.rows.clone(), self.ncols, &CancelToken::new())
            .expect("fresh token")
            .1
            .len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn nullspace(&self, cancel: &CancelToken) -> Result<Vec<Vec<Rational>>> {
        nullspace(self.rows.clone(), self.ncols, cancel)
    }

    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::SizeMismatch(
                "determinant of non-square matrix".into(),
            ));
        }
        let n = self.ncols;
        let mut a = self.rows.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &pivot;
                let (top, bottom) = a.split_at_mut(r);
                for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x -= &f * y;
                }
            }
        }
        Ok(det)
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients lowest degree
    /// first. Reduces to Hessenberg form by similarity, then expands.
    pub fn charpoly(&self) -> Result<Vec<Rational>> {
        if !self.is_square() {
            return Err(Error::SizeMismatch("charpoly of non-square matrix".into()));
        }
        let n = self.ncols;
        let mut h = self.rows.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            for j in m + 1..n {
                if h[j][m - 1].is_zero() {
                    continue;
                }
                let u = &h[j][m - 1] / &h[m][m - 1];
                let pivot_row = h[m].clone();
                for (x, y) in h[j].iter_mut().zip(&pivot_row) {
                    *x -= &u * y;
                }
                for row in h.iter_mut() {
                    let t = &u * &row[j];
                    row[m] += t;
                }
            }
        }
        // p[k] is the charpoly of the leading k x k block
        let mut p: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
        for m in 1..=n {
            let mut next = vec![Rational::zero(); m + 1];
            for (d, c) in p[m - 1].iter().enumerate() {
                next[d + 1] += c;
                next[d] -= &h[m - 1][m - 1] * c;
            }
            let mut prod = Rational::one();
            for i in (1..m).rev() {
                prod *= &h[i][i - 1];
                if prod.is_zero() {
                    break;
                }
                let t = &h[i - 1][m - 1] * &prod;
                for (d, c) in p[i - 1].iter().enumerate() {
                    next[d] -= &t * c;
                }
            }
            p.push(next);
        }
        Ok(p.pop().expect("nonempty"))
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot
/// columns.
pub fn rref(
    mut rows: Vec<Vec<Rational>>,
    ncols: usize,
    cancel: &CancelToken,
) -> Result<(Vec<Vec<Rational>>, Vec<usize>)> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        cancel.check()?;
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(p, rank);
        let inv = rows[rank][col].recip();
        if !inv.is_one() {
            for x in rows[rank][col..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut rows[rank]);
        let support: Vec<usize> = (col..ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row.is_empty() || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for &j in &support {
                row[j] -= &f * &pivot_row[j];
            }
        }
        rows[rank] = pivot_row;
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Ok((rows, pivots))
}

pub fn nullspace(
    rows: Vec<Vec<Rational>>,
    ncols: usize,
    cancel: &CancelToken,
) -> Result<Vec<Vec<Rational>>> {
    let (reduced, pivots) = rref(rows, ncols, cancel)?;
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = -row[free].clone();
            }
        }
        basis.push(v);
    }
    Ok(basis)
}

/// A linear subspace of `ℚ^ambient`, stored as an RREF basis.
///
/// With an RREF basis the coordinates of a member vector are its entries in
/// the pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = Matrix::identity(ambient).into_rows();
        Subspace {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<Rational>>, cancel: &CancelToken) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::SizeMismatch(format!(
                "vectors must have length {ambient}"
            )));
        }
        let (basis, pivots) = rref(vectors, ambient, cancel)?;
        Ok(Subspace {
            ambient,
            basis,
            pivots,
        })
    }

    /// Span of coordinate vectors `e_i` for the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let basis = idx
            .iter()
            .map(|&i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::one();
                v
            })
            .collect();
        Subspace {
            ambient,
            basis,
            pivots: idx,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo this subspace: zero in every
    /// pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, y) in out.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (row, c) in self.basis.iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= c * y;
                }
            }
        }
        is_zero_vec(&residual).then_some(coords)
    }

    /// Vector with the given coordinates in the stored basis.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient];
        for (row, c) in self.basis.iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x += c * y;
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace, cancel: &CancelToken) -> Result<Subspace> {
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, vectors, cancel)
    }

    /// Vectors of this subspace that complete `lower` (assumed contained in
    /// it) to a basis, reduced modulo `lower`.
    pub fn complement_of(&self, lower: &Subspace) -> Vec<Vec<Rational>> {
        let reduced: Vec<Vec<Rational>> = self.basis.iter().map(|v| lower.reduce(v)).collect();
        rref(reduced, self.ambient, &CancelToken::new())
            .expect("fresh token")
            .0
    }
}

/// Incrementally built echelon basis: each stored row is normalized at its
/// pivot and vanishes at the pivots of all earlier rows.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    len: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }

    /// Adds `v` if it is independent of the stored rows; returns whether it
    /// was added.
    pub fn push(&mut self, mut v: Vec<Rational>) -> bool {
        debug_assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn into_subspace(self, cancel: &CancelToken) -> Result<Subspace> {
        Subspace::span(self.len, self.rows, cancel)
    }
}

/// Largest absolute row sum; bounds every eigenvalue's absolute value.
pub fn inf_norm(m: &Matrix) -> Rational {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|x| x.abs()).sum::<Rational>())
        .max()
        .unwrap_or_else(Rational::zero)
}
