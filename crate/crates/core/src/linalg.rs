//! Minimal dense linear algebra for desk-scale spectral computations.
//!
//! Everything here operates on small matrices (truncations of band
//! operators, Hankel matrices, Riemann-Hilbert grids), so the
//! implementations favor robustness over blocking: Householder reduction
//! to tridiagonal form plus Sturm-sequence bisection for symmetric
//! eigenvalues, and partial-pivot LU for complex solves.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // f64 math via libm when built without std
use num_traits::Float;

use crate::{Error, Result};

/// Dense row-major `f64` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Build from explicit rows. Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// `self * v` for a column vector.
    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            let mut acc = 0.0;
            let row = self.row(i);
            for (a, x) in row.iter().zip(v) {
                acc += a * x;
            }
            out[i] = acc;
        }
        out
    }

    /// `u^T * self` for a row vector.
    pub fn vecmat(&self, u: &[f64]) -> Vec<f64> {
        assert_eq!(self.rows, u.len());
        let mut out = vec![0.0; self.cols];
        for (i, ui) in u.iter().enumerate() {
            if *ui == 0.0 {
                continue;
            }
            let row = self.row(i);
            for j in 0..self.cols {
                out[j] += ui * row[j];
            }
        }
        out
    }

    /// Repeated squaring is pointless at these sizes; plain iteration keeps
    /// the floating-point result independent of the exponent's bit pattern.
    pub fn pow(&self, t: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut out = Matrix::identity(self.rows);
        for _ in 0..t {
            out = out.mul(self);
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn scale(&self, k: f64) -> Matrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= k;
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (v, w) in out.data.iter_mut().zip(&other.data) {
            *v += w;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (v, w) in out.data.iter_mut().zip(&other.data) {
            *v -= w;
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_asymmetry(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// Eigenvalues of a symmetric matrix, ascending.
    pub fn symmetric_eigenvalues(&self) -> Result<Vec<f64>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Ok(Vec::new());
        }
        if n == 1 {
            return Ok(vec![self.get(0, 0)]);
        }
        let (d, e) = householder_tridiagonalize(self);
        sym_tridiag_eigenvalues(&d, &e)
    }
}

/// Reduce a symmetric matrix to tridiagonal form by Householder
/// reflections, without accumulating the transformation. Returns
/// `(diagonal, off-diagonal)` with `off.len() == n - 1`.
fn householder_tridiagonalize(m: &Matrix) -> (Vec<f64>, Vec<f64>) {
    let n = m.rows();
    let mut a = m.clone();
    let mut off = vec![0.0; n - 1];

    for k in 0..n.saturating_sub(2) {
        // Annihilate column k below row k+1.
        let mut norm2 = 0.0;
        for i in (k + 1)..n {
            norm2 += a.get(i, k) * a.get(i, k);
        }
        let norm = norm2.sqrt();
        if norm == 0.0 {
            off[k] = 0.0;
            continue;
        }
        let x0 = a.get(k + 1, k);
        let alpha = if x0 >= 0.0 { -norm } else { norm };

        // v = x - alpha * e_{k+1}, H = I - beta v v^T
        let mut v = vec![0.0; n];
        v[k + 1] = x0 - alpha;
        for i in (k + 2)..n {
            v[i] = a.get(i, k);
        }
        let vtv = 2.0 * (norm2 - x0 * alpha);
        if vtv == 0.0 {
            off[k] = alpha;
            continue;
        }
        let beta = 2.0 / vtv;

        // p = beta * A v; w = p - (beta/2)(p.v) v; A <- A - v w^T - w v^T
        let mut p = vec![0.0; n];
        for i in 0..n {
            let mut acc = 0.0;
            for j in (k + 1)..n {
                acc += a.get(i, j) * v[j];
            }
            p[i] = beta * acc;
        }
        let pv: f64 = p.iter().zip(&v).map(|(x, y)| x * y).sum();
        let half = 0.5 * beta * pv;
        let w: Vec<f64> = p.iter().zip(&v).map(|(pi, vi)| pi - half * vi).collect();
        for i in 0..n {
            for j in 0..n {
                let upd = v[i] * w[j] + w[i] * v[j];
                if upd != 0.0 {
                    let cur = a.get(i, j);
                    a.set(i, j, cur - upd);
                }
            }
        }
        off[k] = alpha;
        // Zero the eliminated entries explicitly to keep roundoff out of the
        // later sweeps.
        a.set(k + 1, k, alpha);
        a.set(k, k + 1, alpha);
        for i in (k + 2)..n {
            a.set(i, k, 0.0);
            a.set(k, i, 0.0);
        }
    }
    if n >= 2 {
        off[n - 2] = a.get(n - 1, n - 2);
    }
    let d = (0..n).map(|i| a.get(i, i)).collect();
    (d, off)
}

/// Sturm count: number of eigenvalues of the symmetric tridiagonal matrix
/// `(d, e)` strictly below `x`.
fn sturm_count(d: &[f64], e: &[f64], x: f64) -> usize {
    let n = d.len();
    let mut count = 0usize;
    let mut q = d[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let e2 = e[i - 1] * e[i - 1];
        let denom = if q == 0.0 { f64::MIN_POSITIVE } else { q };
        q = d[i] - x - e2 / denom;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Eigenvalues of a symmetric tridiagonal matrix by bisection on Sturm
/// counts, ascending. `e` holds the `n - 1` off-diagonal entries.
pub fn sym_tridiag_eigenvalues(d: &[f64], e: &[f64]) -> Result<Vec<f64>> {
    let n = d.len();
    assert!(n >= 1 && e.len() + 1 == n, "off-diagonal length mismatch");
    if n == 1 {
        return Ok(vec![d[0]]);
    }

    // Gershgorin bounds.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let mut r = 0.0;
        if i > 0 {
            r += e[i - 1].abs();
        }
        if i + 1 < n {
            r += e[i].abs();
        }
        lo = lo.min(d[i] - r);
        hi = hi.max(d[i] + r);
    }
    let pad = 1e-12 * (1.0 + hi.abs().max(lo.abs()));
    lo -= pad;
    hi += pad;

    let mut eigs = Vec::with_capacity(n);
    for k in 0..n {
        // Find x with count(x) <= k < count above; converges unconditionally.
        let (mut a, mut b) = (lo, hi);
        for _ in 0..120 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(d, e, mid) > k {
                b = mid;
            } else {
                a = mid;
            }
        }
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::EigenFailure);
        }
        eigs.push(0.5 * (a + b));
    }
    Ok(eigs)
}

/// Solve `A x = b` for complex `A` (row-major `n*n`) by LU with partial
/// pivoting. `A` is consumed as scratch.
pub fn complex_solve(mut a: Vec<Complex64>, mut b: Vec<Complex64>) -> Result<Vec<Complex64>> {
    let n = b.len();
    assert_eq!(a.len(), n * n);
    for col in 0..n {
        let mut pivot = col;
        let mut best = a[col * n + col].norm_sqr();
        for r in (col + 1)..n {
            let mag = a[r * n + col].norm_sqr();
            if mag > best {
                best = mag;
                pivot = r;
            }
        }
        if best == 0.0 {
            return Err(Error::EigenFailure);
        }
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
            }
            b.swap(col, pivot);
        }
        let inv = a[col * n + col].inv();
        for r in (col + 1)..n {
            let factor = a[r * n + col] * inv;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in col..n {
                let sub = factor * a[col * n + j];
                a[r * n + j] -= sub;
            }
            let rhs = factor * b[col];
            b[r] -= rhs;
        }
    }
    // Back substitution.
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for col in (0..n).rev() {
        let mut acc = b[col];
        for j in (col + 1)..n {
            acc -= a[col * n + j] * x[j];
        }
        x[col] = acc / a[col * n + col];
    }
    Ok(x)
}
