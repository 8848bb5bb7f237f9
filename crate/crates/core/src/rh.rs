//! Numerical verification of the Riemann-Hilbert characterization of
//! orthogonal polynomials (Fokas-Its-Kitaev).
//!
//! For a weight `w` on the interval `Sigma`, the matrix
//!
//! ```text
//! m(z) = [ P_n(z)                      C(P_n w)(z)                   ]
//!        [ -2 pi i k_{n-1}^2 P_{n-1}   -2 pi i k_{n-1}^2 C(P_{n-1}w) ]
//! ```
//!
//! (monic `P_j`, orthonormal leading coefficients `k_j`, Cauchy transform
//! `C`) is analytic off `Sigma`, jumps by `v(x) = [[1, w(x)], [0, 1]]`
//! across it, and is normalized by `m(z) diag(z^-n, z^n) -> I`. These three
//! properties are verified numerically here, along with the identification
//! of the `(1,2)` entry with the generating function `G_{0,n}`.

use alloc::vec::Vec;

use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // f64 math via libm when built without std
use num_traits::Float;

use crate::jacobi::JacobiOperator;
use crate::measure::DensityMeasure;
use crate::orthopoly::OrthoPolySystem;
use crate::{Error, Result};

/// Where the monic polynomials and their leading-coefficient data come
/// from: a birth-death recurrence system, or the three-term recurrence of
/// a Jacobi operator (`pi_{k+1} = (z - a_k) pi_k - b_{k-1}^2 pi_{k-1}`).
/// Both describe the same family when the measures coincide.
enum MonicFamily<'a> {
    ChainSystem(&'a OrthoPolySystem),
    JacobiOp(&'a JacobiOperator),
}

impl MonicFamily<'_> {
    fn monic_complex(&self, j: usize, z: Complex64) -> Complex64 {
        match self {
            MonicFamily::ChainSystem(sys) => sys.monic_p_complex(j, z),
            MonicFamily::JacobiOp(jac) => {
                let mut prev = Complex64::new(1.0, 0.0);
                if j == 0 {
                    return prev;
                }
                let a = jac.diagonal();
                let b = jac.off_diagonal();
                let mut cur = z - a[0];
                for k in 1..j {
                    let next = (z - a[k]) * cur - prev * (b[k - 1] * b[k - 1]);
                    prev = cur;
                    cur = next;
                }
                cur
            }
        }
    }

    fn monic_real(&self, j: usize, x: f64) -> f64 {
        match self {
            MonicFamily::ChainSystem(sys) => sys.monic_p(j, x),
            MonicFamily::JacobiOp(_) => self.monic_complex(j, Complex64::new(x, 0.0)).re,
        }
    }

    /// Leading coefficient `k_j` of the orthonormal family:
    /// `1 / (b_0 .. b_{j-1})`.
    fn leading_k(&self, j: usize) -> f64 {
        match self {
            MonicFamily::ChainSystem(sys) => sys.leading_k(j),
            MonicFamily::JacobiOp(jac) => 1.0 / jac.off_diagonal()[..j].iter().product::<f64>(),
        }
    }
}

/// The matrix-valued function `m^(n)(z)` for one polynomial index.
pub struct RhMatrix<'a> {
    n: usize,
    measure: &'a DensityMeasure,
    family: MonicFamily<'a>,
}

impl<'a> RhMatrix<'a> {
    pub fn new(n: usize, measure: &'a DensityMeasure, sys: &'a OrthoPolySystem) -> Self {
        RhMatrix {
            n,
            measure,
            family: MonicFamily::ChainSystem(sys),
        }
    }

    /// Monic polynomials taken from a Jacobi operator instead of a chain
    /// recurrence; `jac` must carry at least `n` coefficient pairs.
    pub fn from_jacobi(n: usize, measure: &'a DensityMeasure, jac: &'a JacobiOperator) -> Self {
        assert!(jac.len() >= n.max(1));
        RhMatrix {
            n,
            measure,
            family: MonicFamily::JacobiOp(jac),
        }
    }

    pub fn index(&self) -> usize {
        self.n
    }

    /// Evaluate all four entries at `z` (off the support).
    pub fn eval(&self, z: Complex64) -> Result<[[Complex64; 2]; 2]> {
        let n = self.n;
        if n == 0 {
            let c = self.measure.cauchy(&|_| 1.0, z)?;
            return Ok([
                [Complex64::new(1.0, 0.0), c],
                [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            ]);
        }
        let family = &self.family;
        let p_n = family.monic_complex(n, z);
        let c_n = self.measure.cauchy(&|s| family.monic_real(n, s), z)?;
        let k2 = family.leading_k(n - 1) * family.leading_k(n - 1);
        let factor = Complex64::new(0.0, -2.0 * PI) * k2;
        let p_prev = family.monic_complex(n - 1, z);
        let c_prev = self.measure.cauchy(&|s| family.monic_real(n - 1, s), z)?;
        Ok([[p_n, c_n], [factor * p_prev, factor * c_prev]])
    }
}

/// Convenience wrapper constructing and evaluating in one call.
pub fn build_mn(
    n: usize,
    measure: &DensityMeasure,
    sys: &OrthoPolySystem,
    z: Complex64,
) -> Result<[[Complex64; 2]; 2]> {
    RhMatrix::new(n, measure, sys).eval(z)
}

/// Neville extrapolation to `eps = 0` of a complex quantity sampled at the
/// given epsilon values.
fn extrapolate(eps: &[f64], values: &[Complex64]) -> Complex64 {
    let k = eps.len();
    let mut table: Vec<Complex64> = values.to_vec();
    for level in 1..k {
        for i in 0..(k - level) {
            let x0 = eps[i];
            let x1 = eps[i + level];
            // P(0) of the polynomial through (x0, table[i]), (x1, table[i+1])
            table[i] = (table[i + 1] * x0 - table[i] * x1) / (x0 - x1);
        }
    }
    table[0]
}

fn jump_residual(rh: &RhMatrix<'_>, x: f64, eps_list: &[f64]) -> Result<f64> {
    assert!(!eps_list.is_empty());
    let mut above: Vec<[[Complex64; 2]; 2]> = Vec::with_capacity(eps_list.len());
    let mut below: Vec<[[Complex64; 2]; 2]> = Vec::with_capacity(eps_list.len());
    for &eps in eps_list {
        above.push(rh.eval(Complex64::new(x, eps))?);
        below.push(rh.eval(Complex64::new(x, -eps))?);
    }
    let collect = |samples: &[[[Complex64; 2]; 2]], r: usize, c: usize| -> Vec<Complex64> {
        samples.iter().map(|m| m[r][c]).collect()
    };
    let mut m_plus = [[Complex64::new(0.0, 0.0); 2]; 2];
    let mut m_minus = [[Complex64::new(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            m_plus[r][c] = extrapolate(eps_list, &collect(&above, r, c));
            m_minus[r][c] = extrapolate(eps_list, &collect(&below, r, c));
        }
    }

    let w = rh.measure.density_at(x);
    // m_- * v with v = [[1, w], [0, 1]]
    let jumped = [
        [m_minus[0][0], m_minus[0][0] * w + m_minus[0][1]],
        [m_minus[1][0], m_minus[1][0] * w + m_minus[1][1]],
    ];
    let mut residual = 0.0f64;
    for r in 0..2 {
        for c in 0..2 {
            residual = residual.max((m_plus[r][c] - jumped[r][c]).norm());
        }
    }
    if !residual.is_finite() {
        return Err(Error::PoleOnSupport);
    }
    Ok(residual)
}

/// Jump-condition residual `max | m_+(x) - m_-(x) v(x) |` at an interior
/// point `x` of the support, with the boundary values obtained by
/// Richardson extrapolation of `m(x +- i eps)` over `eps_list`.
pub fn check_jump(
    n: usize,
    measure: &DensityMeasure,
    sys: &OrthoPolySystem,
    x: f64,
    eps_list: &[f64],
) -> Result<f64> {
    jump_residual(&RhMatrix::new(n, measure, sys), x, eps_list)
}

/// [`check_jump`] with the polynomial family of a Jacobi operator (used to
/// verify weights whose chains are not tridiagonal, over the real pieces
/// of their support).
pub fn check_jump_jacobi(
    n: usize,
    measure: &DensityMeasure,
    jac: &JacobiOperator,
    x: f64,
    eps_list: &[f64],
) -> Result<f64> {
    jump_residual(&RhMatrix::from_jacobi(n, measure, jac), x, eps_list)
}

fn asymptotic_deviations(rh: &RhMatrix<'_>, z_list: &[Complex64]) -> Result<Vec<f64>> {
    let n = rh.n;
    let mut out = Vec::with_capacity(z_list.len());
    for &z in z_list {
        let m = rh.eval(z)?;
        let zn = z.powi(n as i32);
        let scaled = [[m[0][0] / zn, m[0][1] * zn], [m[1][0] / zn, m[1][1] * zn]];
        let mut dev = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                let target = if r == c {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                dev = dev.max((scaled[r][c] - target).norm());
            }
        }
        out.push(dev);
    }
    Ok(out)
}

/// Normalization deviation `max | m(z) diag(z^-n, z^n) - I |` for each `z`.
pub fn check_asymptotics(
    n: usize,
    measure: &DensityMeasure,
    sys: &OrthoPolySystem,
    z_list: &[Complex64],
) -> Result<Vec<f64>> {
    asymptotic_deviations(&RhMatrix::new(n, measure, sys), z_list)
}

/// [`check_asymptotics`] over a Jacobi-operator polynomial family.
pub fn check_asymptotics_jacobi(
    n: usize,
    measure: &DensityMeasure,
    jac: &JacobiOperator,
    z_list: &[Complex64],
) -> Result<Vec<f64>> {
    asymptotic_deviations(&RhMatrix::from_jacobi(n, measure, jac), z_list)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let cov: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

/// Extract the generating function from the `(1,2)` entry:
/// `G_{0,n}(z) = -2 pi i k_n sqrt(pi_n) z m12(z)`.
///
/// (The prefactor is `1/(q_1..q_n)`; the `z` power is pinned numerically by
/// `G_{0,0}(2) = 2/sqrt(3)` and by agreement with the series route.)
pub fn gf_from_rh(
    n: usize,
    measure: &DensityMeasure,
    sys: &OrthoPolySystem,
    z: Complex64,
) -> Result<Complex64> {
    let m = build_mn(n, measure, sys, z)?;
    let scale = sys.leading_k(n) * sys.pi(n).sqrt();
    Ok(Complex64::new(0.0, -2.0 * PI) * scale * z * m[0][1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::generating_function;
    use crate::measure::arcsine_measure;
    use crate::orthopoly::chebyshev_system;

    fn setup() -> (DensityMeasure, OrthoPolySystem) {
        (arcsine_measure(), chebyshev_system(16))
    }

    #[test]
    fn entries_at_simple_points() {
        let (measure, sys) = setup();
        let z = Complex64::new(0.0, 2.0);
        let m = build_mn(1, &measure, &sys, z).unwrap();
        // monic P_1 = lambda
        assert!((m[0][0] - z).norm() < 1e-14);
        // (2,1) / P_0 = -2 pi i k_0^2 = -2 pi i
        assert!((m[1][0] - Complex64::new(0.0, -2.0 * PI)).norm() < 1e-12);

        // (1,2) at z = 2: (1/2 pi i)(1 - 2/sqrt(3))
        let m2 = build_mn(1, &measure, &sys, Complex64::new(2.0, 0.0)).unwrap();
        let expect = Complex64::new(1.0 - 2.0 / 3.0f64.sqrt(), 0.0) / Complex64::new(0.0, 2.0 * PI);
        assert!(
            (m2[0][1] - expect).norm() < 1e-10,
            "{} vs {expect}",
            m2[0][1]
        );
    }

    #[test]
    fn n_zero_normalization() {
        let (measure, sys) = setup();
        let m = build_mn(0, &measure, &sys, Complex64::new(8.0, 3.0)).unwrap();
        assert_eq!(m[1][0], Complex64::new(0.0, 0.0));
        assert_eq!(m[1][1], Complex64::new(1.0, 0.0));
        assert!(m[0][1].norm() < 0.02, "C(w) decays at infinity");
    }

    #[test]
    fn jump_condition_holds() {
        let (measure, sys) = setup();
        let eps = [1e-3, 1e-4, 1e-5];
        for n in [1usize, 2, 3] {
            for &x in &[-0.5, 0.3] {
                let r = check_jump(n, &measure, &sys, x, &eps).unwrap();
                assert!(r <= 1e-6, "n={n} x={x}: residual {r}");
            }
        }
    }

    #[test]
    fn polynomial_column_has_no_jump() {
        // real parts of the first column agree across the cut exactly
        // (conjugate-symmetric evaluation); the full column residual only
        // vanishes in the eps -> 0 limit.
        let (measure, sys) = setup();
        let x = 0.3;
        let eps = 1e-4;
        let above = build_mn(2, &measure, &sys, Complex64::new(x, eps)).unwrap();
        let below = build_mn(2, &measure, &sys, Complex64::new(x, -eps)).unwrap();
        // (1,1) is a real-coefficient polynomial: conjugate values
        assert!((above[0][0].re - below[0][0].re).abs() < 1e-12);
        assert!((above[0][0].im + below[0][0].im).abs() < 1e-12);
        // (2,1) carries the -2 pi i prefactor, which swaps the roles
        assert!((above[1][0].im - below[1][0].im).abs() < 1e-12);
        assert!((above[1][0].re + below[1][0].re).abs() < 1e-12);
    }

    #[test]
    fn asymptotic_normalization_decays() {
        let (measure, sys) = setup();
        let radii = [4.0, 8.0, 16.0];
        for n in 0..=3usize {
            let zs: Vec<Complex64> = radii
                .iter()
                .map(|&r| Complex64::new(r * 0.8, r * 0.6))
                .collect();
            let devs = check_asymptotics(n, &measure, &sys, &zs).unwrap();
            assert!(devs[0] > devs[1] && devs[1] > devs[2], "n={n}: {devs:?}");
            let slope = loglog_slope(&radii, &devs);
            assert!((slope + 1.0).abs() <= 0.2, "n={n}: slope {slope}");
        }
    }

    #[test]
    fn generating_function_from_rh_matches_kernel() {
        let (measure, sys) = setup();
        // n = 0 anchor: G_00(2) = 2/sqrt(3)
        let g = gf_from_rh(0, &measure, &sys, Complex64::new(2.0, 0.0)).unwrap();
        assert!((g.re - 2.0 / 3.0f64.sqrt()).abs() < 1e-9, "{g}");
        assert!(g.im.abs() < 1e-10);

        for n in 0..=3usize {
            for &z in &[
                Complex64::new(2.0, 0.0),
                Complex64::new(1.5, 0.8),
                Complex64::new(-1.2, 1.4),
                Complex64::new(0.0, 3.0),
            ] {
                let rh_route = gf_from_rh(n, &measure, &sys, z).unwrap();
                let kernel_route = generating_function(&sys, &measure, 0, n, z).unwrap();
                assert!(
                    (rh_route - kernel_route).norm() < 1e-6,
                    "n={n} z={z}: {rh_route} vs {kernel_route}"
                );
            }
        }
    }

    #[test]
    fn gf_vanishes_at_infinity_for_positive_n() {
        let (measure, sys) = setup();
        let z = Complex64::new(300.0, 0.0);
        for n in 1..=3usize {
            let g = gf_from_rh(n, &measure, &sys, z).unwrap();
            assert!(g.norm() < 1e-2 / (n as f64), "n={n}: {g}");
        }
    }

    #[test]
    fn entry_22_is_the_previous_generating_function() {
        // (k_{n-1} / sqrt(pi_{n-1})) z^{-1} G_{0,n-1}(z) = m22
        let (measure, sys) = setup();
        for n in 1..=3usize {
            for &z in &[Complex64::new(2.2, 0.0), Complex64::new(1.4, 1.1)] {
                let m = build_mn(n, &measure, &sys, z).unwrap();
                let g_prev = generating_function(&sys, &measure, 0, n - 1, z).unwrap();
                let scale = sys.leading_k(n - 1) / sys.pi(n - 1).sqrt();
                let predicted = g_prev * scale / z;
                assert!(
                    (m[1][1] - predicted).norm() < 1e-6,
                    "n={n} z={z}: {} vs {predicted}",
                    m[1][1]
                );
            }
        }
    }

    #[test]
    fn jacobi_family_reproduces_the_chain_family() {
        // on the arcsine weight the two polynomial sources describe the
        // same monic family, so the matrices must agree entrywise
        let (measure, sys) = setup();
        let jac = crate::jacobi::lanczos_jacobi(&crate::chain::chebyshev_chain(), 6).unwrap();
        for n in 0..=4usize {
            for &z in &[Complex64::new(1.8, 0.0), Complex64::new(0.5, 1.2)] {
                let via_sys = RhMatrix::new(n, &measure, &sys).eval(z).unwrap();
                let via_jac = RhMatrix::from_jacobi(n, &measure, &jac).eval(z).unwrap();
                for r in 0..2 {
                    for c in 0..2 {
                        assert!(
                            (via_sys[r][c] - via_jac[r][c]).norm() < 1e-10,
                            "n={n} z={z} entry ({r},{c})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pentadiagonal_weight_satisfies_the_jump_condition() {
        // FIK over a two-interval support: the weight of the pentadiagonal
        // walk with the monic family of its Jacobi operator, verified on
        // interior points of both real pieces
        let measure = crate::measure::pentadiagonal_measure();
        let jac =
            crate::jacobi::lanczos_jacobi(&crate::chain::pentadiagonal_chebyshev(), 8).unwrap();
        let eps = [1e-3, 1e-4, 1e-5];
        for n in 1..=3usize {
            for &x in &[-0.45, -0.2, 0.3, 0.7] {
                let r = check_jump_jacobi(n, &measure, &jac, x, &eps).unwrap();
                assert!(r <= 1e-6, "n={n} x={x}: residual {r}");
            }
        }
    }

    #[test]
    fn pentadiagonal_weight_normalization_decays() {
        let measure = crate::measure::pentadiagonal_measure();
        let jac =
            crate::jacobi::lanczos_jacobi(&crate::chain::pentadiagonal_chebyshev(), 8).unwrap();
        let radii = [4.0, 8.0, 16.0];
        for n in 0..=3usize {
            let zs: Vec<Complex64> = radii
                .iter()
                .map(|&r| Complex64::new(0.8 * r, 0.6 * r))
                .collect();
            let devs = check_asymptotics_jacobi(n, &measure, &jac, &zs).unwrap();
            assert!(devs[0] > devs[1] && devs[1] > devs[2], "n={n}: {devs:?}");
            let slope = loglog_slope(&radii, &devs);
            assert!((slope + 1.0).abs() <= 0.2, "n={n}: slope {slope}");
        }
    }
}
