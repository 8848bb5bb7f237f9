//! The spectral map from a reversible banded chain to its moment sequence
//! and the equivalent Jacobi operator, by two independent routes.
//!
//! Route one is pure moment algebra: `m_k = (e_0, P^k e_0)` computed exactly
//! on band-locality truncations, then an LDL^T factorization of the Hankel
//! matrix `(m_{i+j})` whose pivots give `a_j` and `b_j^2` (the square-root
//! free form keeps the computation rational when the moments are). Route two
//! is symmetric Lanczos tridiagonalization of the symmetrized truncation
//! started at `e_0`, with full reorthogonalization. The two must agree; that
//! cross-check replaces a general closed-form derivation of the higher
//! coefficients, of which only the first few are classical:
//! `a_0 = m_1`, `b_0^2 = m_2 - a_0^2`, ...

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_rational::BigRational;
#[allow(unused_imports)] // f64 math via libm when built without std
use num_traits::Float;

use crate::chain::{symmetrize, truncate, BandedChain};
use crate::linalg::{sym_tridiag_eigenvalues, Matrix};
use crate::measure::DiscreteMeasure;
use crate::rational;
use crate::{Error, Result};

/// Symmetric tridiagonal operator: diagonal `a_j`, off-diagonal `b_j > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiOperator {
    a: Vec<f64>,
    b: Vec<f64>,
}

impl JacobiOperator {
    pub fn new(a: Vec<f64>, b: Vec<f64>) -> Self {
        assert_eq!(
            b.len() + 1,
            a.len(),
            "need one more diagonal than off-diagonal entry"
        );
        assert!(
            b.iter().all(|&x| x > 0.0),
            "off-diagonal entries must be positive"
        );
        JacobiOperator { a, b }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.a
    }

    pub fn off_diagonal(&self) -> &[f64] {
        &self.b
    }

    /// Dense `k x k` truncation.
    pub fn truncation(&self, k: usize) -> Matrix {
        assert!(k >= 1 && k <= self.len());
        let mut m = Matrix::zeros(k, k);
        for i in 0..k {
            m.set(i, i, self.a[i]);
            if i + 1 < k {
                m.set(i, i + 1, self.b[i]);
                m.set(i + 1, i, self.b[i]);
            }
        }
        m
    }

    /// Orthonormal polynomials of the operator:
    /// `p_0 = 1`, `b_j p_{j+1} = (x - a_j) p_j - b_{j-1} p_{j-1}`.
    /// With these, `p_j(T) e_0 = e_j`.
    pub fn orthonormal_all(&self, n: usize, x: f64) -> Vec<f64> {
        assert!(n >= 1 && n <= self.len());
        let mut out = Vec::with_capacity(n);
        out.push(1.0);
        if n == 1 {
            return out;
        }
        out.push((x - self.a[0]) / self.b[0]);
        for j in 1..(n - 1) {
            let next = ((x - self.a[j]) * out[j] - self.b[j - 1] * out[j - 1]) / self.b[j];
            out.push(next);
        }
        out
    }

    pub fn orthonormal_eval(&self, j: usize, x: f64) -> f64 {
        *self.orthonormal_all(j + 1, x).last().unwrap()
    }

    /// Gauss rule with `k` nodes: eigenvalues of the `k x k` truncation,
    /// weights `1 / sum_{l<k} p_l(x)^2`.
    pub fn gauss_rule(&self, k: usize) -> Result<DiscreteMeasure> {
        assert!(k >= 1 && k <= self.len());
        let nodes = sym_tridiag_eigenvalues(&self.a[..k], &self.b[..k.saturating_sub(1)])?;
        for w in nodes.windows(2) {
            if w[1] - w[0] < 1e-12 {
                return Err(Error::DegenerateSpectrum { gap: w[1] - w[0] });
            }
        }
        let weights = nodes
            .iter()
            .map(|&x| {
                let p = self.orthonormal_all(k, x);
                1.0 / p.iter().map(|v| v * v).sum::<f64>()
            })
            .collect();
        Ok(DiscreteMeasure::new(nodes, weights))
    }

    /// `(e_0, T^k e_0)` on a truncation large enough to be exact.
    pub fn moment(&self, k: usize) -> f64 {
        let size = (k / 2 + 2).min(self.len());
        let t = self.truncation(size);
        let mut v = vec![0.0; size];
        v[0] = 1.0;
        for _ in 0..k {
            v = t.matvec(&v);
        }
        v[0]
    }
}

/// Moment sequence `m_k = (e_0, P^k e_0)`, `k = 0..=k_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence {
    m: Vec<f64>,
}

impl MomentSequence {
    pub fn new(m: Vec<f64>) -> Self {
        assert!(!m.is_empty());
        assert!((m[0] - 1.0).abs() < 1e-12, "m_0 must be 1");
        assert!(
            m.iter().all(|x| x.abs() <= 1.0 + 1e-12),
            "|m_k| <= 1 for a Markov operator"
        );
        MomentSequence { m }
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    pub fn get(&self, k: usize) -> f64 {
        self.m[k]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.m
    }

    /// Hankel matrix `(m_{i+j})`, size `(r+1) x (r+1)`.
    pub fn hankel(&self, r: usize) -> Matrix {
        assert!(2 * r < self.len());
        let mut h = Matrix::zeros(r + 1, r + 1);
        for i in 0..=r {
            for j in 0..=r {
                h.set(i, j, self.m[i + j]);
            }
        }
        h
    }
}

/// Moments through `k_max` on the band-locality truncation `N = m k_max + 2`.
pub fn moments_from_operator(chain: &BandedChain, k_max: usize) -> MomentSequence {
    let n = chain.bandwidth() * k_max + 2;
    let trunc = truncate(chain, n);
    let mut u = vec![0.0; n];
    u[0] = 1.0;
    let mut m = Vec::with_capacity(k_max + 1);
    m.push(1.0);
    for _ in 0..k_max {
        u = trunc.vecmat(&u);
        m.push(u[0]);
    }
    MomentSequence::new(m)
}

/// Exact-rational variant of [`moments_from_operator`].
pub fn moments_from_operator_exact(chain: &BandedChain, k_max: usize) -> Vec<BigRational> {
    rational::moments_exact(chain, k_max)
}

/// First `n` Jacobi coefficients from a moment sequence, via the LDL^T
/// pivots of the Hankel matrix. Needs `2n` moments; returns `a_0..a_{n-1}`
/// and `b_0..b_{n-2}`.
pub fn jacobi_from_moments(moments: &MomentSequence, n: usize) -> Result<JacobiOperator> {
    assert!(n >= 1);
    assert!(moments.len() >= 2 * n, "need moments m_0..m_{}", 2 * n - 1);
    let m = moments.as_slice();

    let mut l = vec![vec![0.0f64; n]; n + 1];
    let mut d = vec![0.0f64; n];
    for i in 0..=n {
        let jmax = i.min(n - 1);
        for j in 0..=jmax {
            if j == i {
                let mut acc = m[2 * i];
                for k in 0..i {
                    acc -= l[i][k] * l[i][k] * d[k];
                }
                d[i] = acc;
                if i >= 1 && (d[i] <= 0.0 || d[i] / d[i - 1] <= 1e-12) {
                    return Err(Error::IllConditioned { index: i - 1 });
                }
            } else {
                let mut acc = m[i + j];
                for k in 0..j {
                    acc -= l[i][k] * l[j][k] * d[k];
                }
                l[i][j] = acc / d[j];
            }
        }
    }

    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n - 1);
    for j in 0..n {
        let prev = if j == 0 { 0.0 } else { l[j][j - 1] };
        a.push(l[j + 1][j] - prev);
        if j + 1 < n {
            b.push((d[j + 1] / d[j]).sqrt());
        }
    }
    Ok(JacobiOperator::new(a, b))
}

/// Exact-moment variant: the LDL^T runs in rational arithmetic and only the
/// final square roots are floating point. This sidesteps the exponential
/// conditioning of Hankel matrices for the dyadic example chains.
pub fn jacobi_from_moments_exact(moments: &[BigRational], n: usize) -> Result<JacobiOperator> {
    let (a, b_sq) = rational::jacobi_from_moments_exact(moments, n)?;
    let a = a.iter().map(rational::rational_to_f64).collect();
    let b = b_sq
        .iter()
        .map(|x| rational::rational_to_f64(x).sqrt())
        .collect();
    Ok(JacobiOperator::new(a, b))
}

/// Symmetric Lanczos from `e_0` on the symmetrized truncation
/// `N = m n + 2` (exact for the first `n` steps by band locality), with
/// full reorthogonalization.
pub fn lanczos_jacobi(chain: &BandedChain, n: usize) -> Result<JacobiOperator> {
    assert!(n >= 1);
    let size = chain.bandwidth() * n + 2;
    let s = symmetrize(chain, size)?;

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut v = vec![0.0; size];
    v[0] = 1.0;
    basis.push(v);

    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n - 1);
    for j in 0..n {
        let vj = basis[j].clone();
        let mut w = s.matvec(&vj);
        let aj: f64 = w.iter().zip(&vj).map(|(x, y)| x * y).sum();
        a.push(aj);
        if j + 1 == n {
            break;
        }
        for (wi, vi) in w.iter_mut().zip(&vj) {
            *wi -= aj * vi;
        }
        if j > 0 {
            let bj = b[j - 1];
            for (wi, vi) in w.iter_mut().zip(&basis[j - 1]) {
                *wi -= bj * vi;
            }
        }
        // full reorthogonalization, twice
        for _ in 0..2 {
            for prev in &basis {
                let overlap: f64 = w.iter().zip(prev).map(|(x, y)| x * y).sum();
                if overlap != 0.0 {
                    for (wi, vi) in w.iter_mut().zip(prev) {
                        *wi -= overlap * vi;
                    }
                }
            }
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Err(Error::Breakdown { step: j });
        }
        for wi in &mut w {
            *wi /= norm;
        }
        b.push(norm);
        basis.push(w);
    }
    Ok(JacobiOperator::new(a, b))
}

/// Resolvent continued fraction
/// `G(z) = 1 / (a_0 - z - b_0^2 / (a_1 - z - ...))` truncated at depth `k`.
pub fn resolvent_from_jacobi(jac: &JacobiOperator, z: Complex64, k: usize) -> Complex64 {
    let k = k.min(jac.len());
    let mut acc = Complex64::new(0.0, 0.0);
    for j in (0..k).rev() {
        let tail = if j + 1 < k {
            Complex64::new(jac.b[j] * jac.b[j], 0.0) * acc
        } else {
            Complex64::new(0.0, 0.0)
        };
        acc = (Complex64::new(jac.a[j], 0.0) - z - tail).inv();
    }
    acc
}

/// `G(z) = (e_0, (P - zI)^{-1} e_0)`.
///
/// For `|z| > 1.05` this sums the Neumann series `-(sum m_t / z^{t+1})`
/// with an explicit geometric tail bound below 1e-12. Closer to the
/// spectrum (off the real axis) it runs a deep Lanczos pass once and
/// evaluates the resolvent continued fraction, doubling the depth until
/// the value settles to 1e-10.
pub fn resolvent_g(chain: &BandedChain, z: Complex64) -> Result<Complex64> {
    let r = z.norm();
    if r > 1.05 {
        // tail after T terms: r^{-T-2} / (1 - 1/r)
        let target = 1e-12 * (1.0 - 1.0 / r);
        let t_max = ((target.ln() / (1.0 / r).ln()).ceil() as usize).clamp(8, 2000);
        let moments = moments_from_operator(chain, t_max);
        let mut acc = Complex64::new(0.0, 0.0);
        let zinv = z.inv();
        let mut zpow = zinv; // z^{-(t+1)}
        for t in 0..=t_max {
            acc -= moments.get(t) * zpow;
            zpow *= zinv;
        }
        return Ok(acc);
    }
    if z.im == 0.0 {
        return Err(Error::OutsideDomain { value: z.re });
    }
    let jac = lanczos_jacobi(chain, 256)?;
    let mut prev = resolvent_from_jacobi(&jac, z, 64);
    for k in [128usize, 256] {
        let cur = resolvent_from_jacobi(&jac, z, k);
        if (cur - prev).norm() < 1e-10 {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NotConverged)
}
