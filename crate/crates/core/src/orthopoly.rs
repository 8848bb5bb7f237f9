//! The eigenvector polynomial system `Q_j` of a tridiagonal chain.
//!
//! For a birth-death chain the eigenvector equation `lambda q = P q` with
//! `Q_0 = 1` generates a sequence of polynomials, `deg Q_j = j`:
//!
//! ```text
//! lambda Q_k = q_k Q_{k-1} + (1 - q_k - p_k) Q_k + p_k Q_{k+1}
//! ```
//!
//! `sqrt(pi_j) Q_j` is the orthonormal family for the spectral measure,
//! with leading coefficient `k_j = 1 / (sqrt(p_0..p_{j-1}) sqrt(q_1..q_j))`;
//! dividing by `k_j` gives the monic family `P_j`. The zeros of `Q_n` are
//! exactly the eigenvalues of the symmetrized `n x n` truncation, which is
//! how they are computed here.

use alloc::vec;
use alloc::vec::Vec;

use core::ops::{Mul, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
#[allow(unused_imports)] // f64 math via libm when built without std
use num_traits::Float;
use num_traits::One;

use crate::chain::BandedChain;
use crate::linalg::sym_tridiag_eigenvalues;
use crate::rational;
use crate::{Error, Result};

/// Recurrence data for the polynomials of one tridiagonal chain, prepared
/// for indices `j <= capacity`.
#[derive(Debug, Clone)]
pub struct OrthoPolySystem {
    p: Vec<f64>,
    q: Vec<f64>,
    r: Vec<f64>,
    pi: Vec<f64>,
    kcoef: Vec<f64>,
    prod_p: Vec<f64>,
}

impl OrthoPolySystem {
    /// Extract recurrence data from a bandwidth-1 chain.
    ///
    /// Fails with `BandwidthTooLarge` for wider bands (those are handled by
    /// the vector-solution machinery in [`crate::banded`]).
    pub fn from_chain(chain: &BandedChain, capacity: usize) -> Result<Self> {
        if chain.bandwidth() != 1 {
            return Err(Error::BandwidthTooLarge {
                bandwidth: chain.bandwidth(),
            });
        }
        let n = capacity + 1;
        let mut p = vec![0.0; n];
        let mut q = vec![0.0; n];
        let mut r = vec![0.0; n];
        for k in 0..n {
            let row = chain.row(k);
            q[k] = row[0];
            r[k] = row[1];
            p[k] = row[2];
        }
        // pi and the orthonormal leading coefficients, by running products
        let mut pi = vec![1.0; n];
        let mut kcoef = vec![1.0; n];
        let mut prod_p = vec![1.0; n];
        for j in 1..n {
            pi[j] = pi[j - 1] * p[j - 1] / q[j];
            kcoef[j] = kcoef[j - 1] / (p[j - 1] * q[j]).sqrt();
            prod_p[j] = prod_p[j - 1] * p[j - 1];
        }
        Ok(OrthoPolySystem {
            p,
            q,
            r,
            pi,
            kcoef,
            prod_p,
        })
    }

    /// Largest admissible polynomial index.
    pub fn capacity(&self) -> usize {
        self.p.len() - 1
    }

    pub fn forward_prob(&self, k: usize) -> f64 {
        self.p[k]
    }

    pub fn backward_prob(&self, k: usize) -> f64 {
        self.q[k]
    }

    /// Reversibility weight `pi_j = p_0..p_{j-1} / (q_1..q_j)`.
    pub fn pi(&self, j: usize) -> f64 {
        self.pi[j]
    }

    /// Leading coefficient `k_j` of the orthonormal polynomial
    /// `sqrt(pi_j) Q_j`.
    pub fn leading_k(&self, j: usize) -> f64 {
        self.kcoef[j]
    }

    fn eval_generic<T>(&self, j: usize, lambda: T) -> T
    where
        T: Copy + One + Mul<T, Output = T> + Mul<f64, Output = T> + Sub<T, Output = T>,
    {
        assert!(j <= self.capacity(), "index {j} exceeds system capacity");
        let mut prev = T::one();
        if j == 0 {
            return prev;
        }
        // row 0: lambda Q_0 = r_0 Q_0 + p_0 Q_1
        let mut cur = (lambda - T::one() * self.r[0]) * (1.0 / self.p[0]);
        for k in 1..j {
            let next = (lambda * cur - prev * self.q[k] - cur * self.r[k]) * (1.0 / self.p[k]);
            prev = cur;
            cur = next;
        }
        cur
    }

    /// `Q_j(lambda)` by the forward recurrence.
    pub fn evaluate_q(&self, j: usize, lambda: f64) -> f64 {
        self.eval_generic(j, lambda)
    }

    /// `Q_j(z)` for complex arguments (Cauchy transforms, resolvents).
    pub fn evaluate_q_complex(&self, j: usize, z: Complex64) -> Complex64 {
        self.eval_generic(j, z)
    }

    /// `Q_0(lambda), ..., Q_{n-1}(lambda)` in one sweep.
    pub fn evaluate_all_q(&self, n: usize, lambda: f64) -> Vec<f64> {
        assert!(n >= 1 && n - 1 <= self.capacity());
        let mut out = Vec::with_capacity(n);
        out.push(1.0);
        if n == 1 {
            return out;
        }
        out.push((lambda - self.r[0]) / self.p[0]);
        for k in 1..(n - 1) {
            let next = (lambda * out[k] - self.q[k] * out[k - 1] - self.r[k] * out[k]) / self.p[k];
            out.push(next);
        }
        out
    }

    /// Monomial-basis coefficients of `Q_j`, constant term first. The
    /// leading coefficient equals `1 / (p_0 .. p_{j-1})`. Capped at
    /// `j <= 64`: monomial coefficients blow up fast, and evaluation never
    /// goes through them.
    pub fn coefficients_q(&self, j: usize) -> Vec<f64> {
        assert!(j <= 64, "monomial coefficients are limited to j <= 64");
        assert!(j <= self.capacity());
        let mut prev = vec![1.0]; // Q_0
        if j == 0 {
            return prev;
        }
        let step = |cur: &[f64], prev: &[f64], qk: f64, rk: f64, pk: f64| -> Vec<f64> {
            let mut out = vec![0.0; cur.len() + 1];
            for (idx, c) in cur.iter().enumerate() {
                out[idx + 1] += c; // lambda * Q_k
                out[idx] -= rk * c;
            }
            for (idx, c) in prev.iter().enumerate() {
                out[idx] -= qk * c;
            }
            for v in &mut out {
                *v /= pk;
            }
            out
        };
        let mut cur = step(&prev, &[], 0.0, self.r[0], self.p[0]);
        for k in 1..j {
            let next = step(&cur, &prev, self.q[k], self.r[k], self.p[k]);
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Exact-rational coefficients of `Q_j`; limited to `j <= 64` where the
    /// monomial basis is still meaningful.
    pub fn coefficients_q_exact(&self, j: usize) -> Result<Vec<BigRational>> {
        if j > 64 {
            return Err(Error::DegreeTooHigh {
                required: j,
                available: 64,
            });
        }
        assert!(j <= self.capacity());
        Ok(rational::q_coefficients_exact(&self.p, &self.q, &self.r, j))
    }

    /// Monic rescaling `P_j = sqrt(pi_j) Q_j / k_j = (p_0 .. p_{j-1}) Q_j`.
    pub fn monic_p(&self, j: usize, lambda: f64) -> f64 {
        self.prod_p[j] * self.evaluate_q(j, lambda)
    }

    pub fn monic_p_complex(&self, j: usize, z: Complex64) -> Complex64 {
        self.evaluate_q_complex(j, z) * self.prod_p[j]
    }

    /// Orthonormal rescaling `sqrt(pi_j) Q_j`.
    pub fn orthonormal(&self, j: usize, lambda: f64) -> f64 {
        self.pi[j].sqrt() * self.evaluate_q(j, lambda)
    }

    /// Christoffel sum `sum_{k<n} pi_k Q_k(lambda)^2`: the reciprocal of the
    /// Gauss weight when `lambda` is a zero of `Q_n`.
    pub fn christoffel_sum(&self, n: usize, lambda: f64) -> f64 {
        let q = self.evaluate_all_q(n, lambda);
        q.iter().enumerate().map(|(k, v)| self.pi[k] * v * v).sum()
    }

    /// Jacobi coefficients of the symmetrized truncation:
    /// `a_k = 1 - p_k - q_k`, `b_k = sqrt(p_k q_{k+1})`.
    pub fn jacobi_coefficients(&self, n: usize) -> (Vec<f64>, Vec<f64>) {
        assert!(n <= self.capacity());
        let a = self.r[..n].to_vec();
        let b = (0..n.saturating_sub(1))
            .map(|k| (self.p[k] * self.q[k + 1]).sqrt())
            .collect();
        (a, b)
    }

    /// Zeros of `Q_n`, ascending — the eigenvalues of the symmetrized
    /// `n x n` truncation. Zeros of these systems are simple; a gap below
    /// 1e-12 is reported as `DegenerateSpectrum`.
    pub fn roots_qn(&self, n: usize) -> Result<Vec<f64>> {
        assert!(n >= 1);
        let (a, b) = self.jacobi_coefficients(n);
        let roots = sym_tridiag_eigenvalues(&a, &b)?;
        for w in roots.windows(2) {
            let gap = w[1] - w[0];
            if gap < 1e-12 {
                return Err(Error::DegenerateSpectrum { gap });
            }
        }
        Ok(roots)
    }
}

/// Convenience: system of the reflecting simple walk, whose polynomials are
/// the Chebyshev polynomials of the first kind.
pub fn chebyshev_system(capacity: usize) -> OrthoPolySystem {
    OrthoPolySystem::from_chain(&crate::chain::chebyshev_chain(), capacity)
        .expect("reflecting walk is tridiagonal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{chebyshev_chain, BirthDeathChain};
    use core::f64::consts::PI;

    fn cheb(n: usize) -> OrthoPolySystem {
        chebyshev_system(n)
    }

    #[test]
    fn q_matches_chebyshev_t() {
        let sys = cheb(40);
        for &lambda in &[-0.97, -0.5, 0.0, 0.3, 0.77, 1.0] {
            for j in 0..20usize {
                let expect = (j as f64 * f64::acos(lambda)).cos();
                let got = sys.evaluate_q(j, lambda);
                assert!((got - expect).abs() < 1e-10, "j={j} lambda={lambda}");
            }
        }
        // spot values
        assert_eq!(sys.evaluate_q(0, 0.123), 1.0);
        assert_eq!(sys.evaluate_q(1, 0.4), 0.4);
        let q3 = sys.evaluate_q(3, 0.3);
        assert!((q3 - (-0.792)).abs() < 1e-14);
    }

    #[test]
    fn coefficients_match_recurrence() {
        let sys = cheb(24);
        let c2 = sys.coefficients_q(2);
        assert_eq!(c2, vec![-1.0, 0.0, 2.0]);
        let c0 = sys.coefficients_q(0);
        assert_eq!(c0, vec![1.0]);

        // evaluation agreement between the two paths
        for j in 0..=20usize {
            let coef = sys.coefficients_q(j);
            for step in 0..100 {
                let lambda = -1.0 + 2.0 * (step as f64 + 0.5) / 100.0;
                let horner = coef.iter().rev().fold(0.0, |acc, c| acc * lambda + c);
                let direct = sys.evaluate_q(j, lambda);
                assert!(
                    (horner - direct).abs() <= 1e-9,
                    "j={j} lambda={lambda} horner={horner} direct={direct}"
                );
            }
        }
    }

    #[test]
    fn exact_coefficients_agree_with_float() {
        let sys = cheb(16);
        for j in [0usize, 1, 5, 12] {
            let exact = sys.coefficients_q_exact(j).unwrap();
            let float = sys.coefficients_q(j);
            for (e, f) in exact.iter().zip(&float) {
                assert!((rational::rational_to_f64(e) - f).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn first_row_relation_for_lazy_walk() {
        // p_0 = 1/2, q_k = p_k = 1/2: Q_1 = 2 lambda - 1
        let bd = BirthDeathChain::new(vec![0.5], vec![0.5]).unwrap();
        let sys = OrthoPolySystem::from_chain(&bd.to_banded(), 8).unwrap();
        let c = sys.coefficients_q(1);
        assert_eq!(c, vec![-1.0, 2.0]);
    }

    #[test]
    fn monic_and_orthonormal_scalings() {
        let sys = cheb(8);
        // j = 1: orthonormal = sqrt(2) lambda, monic = lambda
        let lambda = 0.37;
        assert!((sys.orthonormal(1, lambda) - 2.0f64.sqrt() * lambda).abs() < 1e-15);
        assert!((sys.monic_p(1, lambda) - lambda).abs() < 1e-15);
        // j = 2: monic = lambda^2 - 1/2
        assert!((sys.monic_p(2, lambda) - (lambda * lambda - 0.5)).abs() < 1e-15);
        // j = 0
        assert_eq!(sys.orthonormal(0, lambda), 1.0);
        assert_eq!(sys.monic_p(0, lambda), 1.0);
        // k_1 = sqrt(2)
        assert!((sys.leading_k(1) - 2.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn orthonormal_leading_coefficient_is_kj() {
        let sys = cheb(24);
        for j in 1..=20usize {
            let coef = sys.coefficients_q(j);
            let lead = coef[j] * sys.pi(j).sqrt();
            assert!(
                (lead - sys.leading_k(j)).abs() < 1e-10 * sys.leading_k(j).abs(),
                "j={j}"
            );
        }
    }

    #[test]
    fn roots_are_chebyshev_nodes() {
        let sys = cheb(40);
        let r2 = sys.roots_qn(2).unwrap();
        assert!((r2[0] + core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);
        assert!((r2[1] - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);

        let r1 = sys.roots_qn(1).unwrap();
        assert_eq!(r1.len(), 1);
        assert!(r1[0].abs() < 1e-15);

        for n in [3usize, 8, 17, 32] {
            let roots = sys.roots_qn(n).unwrap();
            for k in 0..n {
                let expect = (PI / (2.0 * n as f64) + PI * k as f64 / n as f64).cos();
                let got = roots[n - 1 - k];
                assert!((got - expect).abs() < 1e-12, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn roots_interlace() {
        let sys = cheb(42);
        for n in 1..=40usize {
            let rn = sys.roots_qn(n).unwrap();
            let rn1 = sys.roots_qn(n + 1).unwrap();
            for k in 0..n {
                assert!(
                    rn1[k] < rn[k] && rn[k] < rn1[k + 1],
                    "interlacing failed at n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn eigenvector_consistency() {
        // (Q_0(root), ..., Q_{n-1}(root)) is a right eigenvector of the
        // truncation
        let chain = chebyshev_chain();
        let sys = cheb(20);
        for n in [2usize, 5, 11] {
            let a = crate::chain::truncate(&chain, n);
            for &root in &sys.roots_qn(n).unwrap() {
                let v = sys.evaluate_all_q(n, root);
                let av = a.matvec(&v);
                let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                let mut worst = 0.0f64;
                for i in 0..n {
                    worst = worst.max((av[i] - root * v[i]).abs());
                }
                assert!(worst / norm < 1e-8, "n={n} root={root} residual={worst}");
            }
        }
    }

    #[test]
    fn banded_chain_is_rejected() {
        let err =
            OrthoPolySystem::from_chain(&crate::chain::pentadiagonal_chebyshev(), 8).unwrap_err();
        assert_eq!(err, Error::BandwidthTooLarge { bandwidth: 2 });
    }

    #[test]
    fn christoffel_closed_form() {
        let sys = cheb(20);
        assert_eq!(sys.christoffel_sum(1, 0.42), 1.0);
        // lambda = cos x: sum = n - 1/2 + sin((2n-1)x) / (2 sin x)
        for n in [2usize, 5, 9] {
            for step in 1..50 {
                let x = PI * step as f64 / 50.0;
                let lambda = x.cos();
                let closed = n as f64 - 0.5 + ((2.0 * n as f64 - 1.0) * x).sin() / (2.0 * x.sin());
                let direct = sys.christoffel_sum(n, lambda);
                assert!((closed - direct).abs() < 1e-10, "n={n} x={x}");
            }
        }
        // n = 2 at lambda = 1/sqrt(2) (x = pi/4): direct sum is 2
        let v = sys.christoffel_sum(2, core::f64::consts::FRAC_1_SQRT_2);
        assert!((v - 2.0).abs() < 1e-14);
    }
}
