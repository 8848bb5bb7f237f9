//! Transition probabilities and generating functions from spectral data,
//! cross-checked against exact matrix-power oracles.
//!
//! `pt_oracle` is the reference implementation: a truncated matrix power
//! sized by the band-locality bound, hence exact. `pt_spectral` evaluates
//! the spectral representation `pi_j Integral(s^t Q_i Q_j dpsi)`;
//! `pt_fbasis` evaluates the same integral in the orthonormal basis
//! `f_j = Q_j(P) e_0` built from the equivalent Jacobi operator, which works
//! for banded chains where no scalar polynomial family exists.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // f64 math via libm when built without std
use num_traits::Float;

use crate::chain::{pi_weights, symmetrize, truncate, BandedChain};
use crate::jacobi::{lanczos_jacobi, JacobiOperator};
use crate::linalg::Matrix;
use crate::measure::{DensityMeasure, DiscreteMeasure, QUAD_TOL};
use crate::orthopoly::OrthoPolySystem;
use crate::{Error, Result};

/// Exact `p_t(i, j)` via a truncated matrix power with
/// `N = max(i, j) + m t + 1`.
pub fn pt_oracle(chain: &BandedChain, i: usize, j: usize, t: usize) -> f64 {
    let n = i.max(j) + chain.bandwidth() * t + 1;
    let a = truncate(chain, n);
    let mut v = vec![0.0; n];
    v[i] = 1.0;
    for _ in 0..t {
        v = a.vecmat(&v);
    }
    v[j]
}

/// Spectral route on a discrete measure:
/// `pi_j sum_k w_k s_k^t Q_i(s_k) Q_j(s_k)`.
///
/// For `psi_n` the sum is Gauss-exact only while `2n - 1 >= t + i + j`;
/// outside that range the query is refused (`DegreeTooHigh`).
pub fn pt_spectral(
    sys: &OrthoPolySystem,
    measure: &DiscreteMeasure,
    i: usize,
    j: usize,
    t: usize,
) -> Result<f64> {
    let n = measure.len();
    if 2 * n < t + i + j + 1 {
        return Err(Error::DegreeTooHigh {
            required: t + i + j,
            available: 2 * n - 1,
        });
    }
    let val = measure.integrate(|s| s.powi(t as i32) * sys.evaluate_q(i, s) * sys.evaluate_q(j, s));
    Ok(sys.pi(j) * val)
}

/// Spectral route integrating against a density (quadrature error around
/// 1e-10, versus exact Gauss sums for the discrete route).
pub fn pt_spectral_density(
    sys: &OrthoPolySystem,
    measure: &DensityMeasure,
    i: usize,
    j: usize,
    t: usize,
) -> Result<f64> {
    let val = measure.integrate(
        &|s: f64| s.powi(t as i32) * sys.evaluate_q(i, s) * sys.evaluate_q(j, s),
        QUAD_TOL,
    )?;
    Ok(sys.pi(j) * val)
}

/// Generating function
/// `G_ij(z) = sum_t z^{-t} p_t(i,j) = -z pi_j Integral(Q_i Q_j / (s - z) dpsi)`
/// for `|z| > 1`, via the Cauchy transform of the density.
pub fn generating_function(
    sys: &OrthoPolySystem,
    measure: &DensityMeasure,
    i: usize,
    j: usize,
    z: Complex64,
) -> Result<Complex64> {
    let two_pi_i = Complex64::new(0.0, 2.0 * core::f64::consts::PI);
    let c = measure.cauchy(&|s| sys.evaluate_q(i, s) * sys.evaluate_q(j, s), z)?;
    Ok(-z * sys.pi(j) * two_pi_i * c)
}

/// Discrete-measure variant of [`generating_function`].
pub fn generating_function_discrete(
    sys: &OrthoPolySystem,
    measure: &DiscreteMeasure,
    i: usize,
    j: usize,
    z: Complex64,
) -> Result<Complex64> {
    let two_pi_i = Complex64::new(0.0, 2.0 * core::f64::consts::PI);
    let c = measure.cauchy(|s| sys.evaluate_q(i, s) * sys.evaluate_q(j, s), z)?;
    Ok(-z * sys.pi(j) * two_pi_i * c)
}

/// Orthonormal basis `f_j = Q_j(P) e_0`, `j < n`, as columns over the
/// symmetrized truncation of size `N = m n + 2`. `jac` must supply at least
/// `n` coefficients.
pub fn f_basis_with(chain: &BandedChain, jac: &JacobiOperator, n: usize) -> Result<Matrix> {
    assert!(n >= 1 && jac.len() >= n);
    let size = chain.bandwidth() * n + 2;
    let s = symmetrize(chain, size)?;

    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut e0 = vec![0.0; size];
    e0[0] = 1.0;
    cols.push(e0);
    for j in 0..(n - 1) {
        // b_j f_{j+1} = (S - a_j) f_j - b_{j-1} f_{j-1}
        let mut w = s.matvec(&cols[j]);
        let aj = jac.diagonal()[j];
        for (wi, vi) in w.iter_mut().zip(&cols[j]) {
            *wi -= aj * vi;
        }
        if j > 0 {
            let bprev = jac.off_diagonal()[j - 1];
            for (wi, vi) in w.iter_mut().zip(&cols[j - 1]) {
                *wi -= bprev * vi;
            }
        }
        let bj = jac.off_diagonal()[j];
        if bj < 1e-12 {
            return Err(Error::Breakdown { step: j });
        }
        for wi in &mut w {
            *wi /= bj;
        }
        cols.push(w);
    }

    let mut f = Matrix::zeros(size, n);
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            f.set(i, j, *v);
        }
    }
    Ok(f)
}

/// [`f_basis_with`] deriving the Jacobi coefficients by Lanczos.
pub fn f_basis(chain: &BandedChain, n: usize) -> Result<Matrix> {
    let jac = lanczos_jacobi(chain, n)?;
    f_basis_with(chain, &jac, n)
}

/// `p_t(i, j)` through the F-basis diagonalization:
/// `(F [Integral(s^t Q_a Q_b dpsi)]_{ab} F^T)[i][j]`, de-symmetrized by
/// `sqrt(pi_j / pi_i)`. `measure` must be a Gauss rule of `jac` with
/// `2k - 1 >= t + 2(n - 1)` nodes.
pub fn pt_fbasis(
    chain: &BandedChain,
    jac: &JacobiOperator,
    measure: &DiscreteMeasure,
    i: usize,
    j: usize,
    t: usize,
) -> Result<f64> {
    let n = jac.len();
    let k = measure.len();
    if 2 * k < t + 2 * (n - 1) + 1 {
        return Err(Error::DegreeTooHigh {
            required: t + 2 * (n - 1),
            available: 2 * k - 1,
        });
    }
    let f = f_basis_with(chain, jac, n)?;
    assert!(
        i < f.rows() && j < f.rows(),
        "states must lie inside the truncation"
    );

    // M_ab = sum_k w_k s_k^t p_a(s_k) p_b(s_k)
    let mut m = Matrix::zeros(n, n);
    for (idx, &s) in measure.nodes().iter().enumerate() {
        let w = measure.weights()[idx] * s.powi(t as i32);
        let p = jac.orthonormal_all(n, s);
        for a in 0..n {
            for b in 0..n {
                let cur = m.get(a, b);
                m.set(a, b, cur + w * p[a] * p[b]);
            }
        }
    }

    let mut acc = 0.0;
    for a in 0..n {
        for b in 0..n {
            acc += f.get(i, a) * m.get(a, b) * f.get(j, b);
        }
    }
    let pi = pi_weights(chain, i.max(j) + 1)?;
    Ok(acc * (pi.get(j) / pi.get(i)).sqrt())
}

/// Convenience wrapper sizing the Lanczos depth and Gauss rule from the
/// query: `n_basis` basis vectors, rule large enough for time `t`.
pub fn pt_fbasis_auto(
    chain: &BandedChain,
    i: usize,
    j: usize,
    t: usize,
    n_basis: usize,
) -> Result<f64> {
    let k_rule = (t + 2 * (n_basis - 1)) / 2 + 1;
    let depth = n_basis.max(k_rule);
    let jac = lanczos_jacobi(chain, depth)?;
    let jac_basis = JacobiOperator::new(
        jac.diagonal()[..n_basis].to_vec(),
        jac.off_diagonal()[..n_basis - 1].to_vec(),
    );
    let rule = jac.gauss_rule(k_rule)?;
    pt_fbasis(chain, &jac_basis, &rule, i, j, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{chebyshev_chain, pentadiagonal_chebyshev};
    use crate::measure::{arcsine_measure, psi_n};
    use crate::orthopoly::chebyshev_system;
    use crate::rational;

    #[test]
    fn oracle_time_zero_is_identity() {
        let chain = pentadiagonal_chebyshev();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert_eq!(pt_oracle(&chain, i, j, 0), expect);
            }
        }
    }

    #[test]
    fn oracle_example_values() {
        assert_eq!(pt_oracle(&pentadiagonal_chebyshev(), 0, 0, 2), 0.25);
        assert_eq!(pt_oracle(&chebyshev_chain(), 0, 0, 2), 0.5);
        // exact-rational cross-check on a handful of entries
        for (i, j, t) in [(0usize, 0usize, 4usize), (1, 3, 3), (2, 0, 5)] {
            let exact = rational::pt_exact(&pentadiagonal_chebyshev(), i, j, t);
            let float = pt_oracle(&pentadiagonal_chebyshev(), i, j, t);
            assert!((rational::rational_to_f64(&exact) - float).abs() < 1e-15);
        }
    }

    #[test]
    fn oracle_band_locality() {
        // enlarging the truncation beyond the bound changes nothing, bit for bit
        let chain = pentadiagonal_chebyshev();
        let (i, j, t) = (1usize, 2usize, 5usize);
        let n = i.max(j) + chain.bandwidth() * t + 1;
        for extra in [0usize, 5] {
            let a = truncate(&chain, n + extra);
            let mut v = vec![0.0; n + extra];
            v[i] = 1.0;
            for _ in 0..t {
                v = a.vecmat(&v);
            }
            assert_eq!(v[j], pt_oracle(&chain, i, j, t));
        }
    }

    #[test]
    fn spectral_matches_oracle_on_gauss_rule() {
        let chain = chebyshev_chain();
        let sys = chebyshev_system(40);
        let psi = psi_n(&sys, 16).unwrap();
        for i in 0..4usize {
            for j in 0..4usize {
                for t in 0..12usize {
                    let spectral = pt_spectral(&sys, &psi, i, j, t).unwrap();
                    let oracle = pt_oracle(&chain, i, j, t);
                    assert!(
                        (spectral - oracle).abs() < 1e-10,
                        "i={i} j={j} t={t}: {spectral} vs {oracle}"
                    );
                }
            }
        }
    }

    #[test]
    fn spectral_orthogonality_at_time_zero() {
        let sys = chebyshev_system(16);
        let psi = psi_n(&sys, 8).unwrap();
        for i in 0..6usize {
            for j in 0..6usize {
                let v = pt_spectral(&sys, &psi, i, j, 0).unwrap();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((v - expect).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn spectral_density_route() {
        let sys = chebyshev_system(16);
        let arcsine = arcsine_measure();
        let v = pt_spectral_density(&sys, &arcsine, 0, 0, 4).unwrap();
        assert!((v - 0.375).abs() < 1e-7);
        // two-step 0 -> 2 against the oracle (paths 0 -> 1 -> 2)
        let psi = psi_n(&sys, 8).unwrap();
        let v = pt_spectral(&sys, &psi, 0, 2, 2).unwrap();
        let oracle = pt_oracle(&chebyshev_chain(), 0, 2, 2);
        assert!((v - oracle).abs() < 1e-12);
        assert!((oracle - 0.5).abs() < 1e-15);
    }

    #[test]
    fn degree_precondition_enforced() {
        let sys = chebyshev_system(16);
        let psi = psi_n(&sys, 2).unwrap();
        let err = pt_spectral(&sys, &psi, 0, 0, 4).unwrap_err();
        assert!(matches!(err, Error::DegreeTooHigh { .. }));
    }

    #[test]
    fn chapman_kolmogorov() {
        let chain = pentadiagonal_chebyshev();
        let (s, t) = (3usize, 4usize);
        for i in 0..3usize {
            for j in 0..3usize {
                let reach = i.max(j) + chain.bandwidth() * (s + t) + 1;
                let mut acc = 0.0;
                for k in 0..reach {
                    acc += pt_oracle(&chain, i, k, s) * pt_oracle(&chain, k, j, t);
                }
                let direct = pt_oracle(&chain, i, j, s + t);
                assert!((acc - direct).abs() < 1e-10, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn detailed_balance_symmetry_of_pt() {
        let chain = pentadiagonal_chebyshev();
        let pi = pi_weights(&chain, 8).unwrap();
        for t in [1usize, 3, 6] {
            for i in 0..6usize {
                for j in 0..6usize {
                    let lhs = pi.get(i) * pt_oracle(&chain, i, j, t);
                    let rhs = pi.get(j) * pt_oracle(&chain, j, i, t);
                    assert!((lhs - rhs).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn generating_function_known_value() {
        let sys = chebyshev_system(16);
        let arcsine = arcsine_measure();
        let z = Complex64::new(2.0, 0.0);
        let g = generating_function(&sys, &arcsine, 0, 0, z).unwrap();
        let expect = 2.0 / 3.0f64.sqrt();
        assert!((g.re - expect).abs() < 1e-9, "{g}");
        assert!(g.im.abs() < 1e-10);
    }

    #[test]
    fn g00_is_minus_z_times_the_resolvent() {
        let chain = chebyshev_chain();
        let sys = chebyshev_system(16);
        let arcsine = arcsine_measure();
        for &z in &[
            Complex64::new(2.0, 0.0),
            Complex64::new(1.4, 1.1),
            Complex64::new(0.0, 3.0),
        ] {
            let g = generating_function(&sys, &arcsine, 0, 0, z).unwrap();
            let r = crate::jacobi::resolvent_g(&chain, z).unwrap();
            assert!((g - (-z * r)).norm() < 1e-9, "z={z}: {g} vs {}", -z * r);
        }
    }

    #[test]
    fn generating_function_matches_partial_sums() {
        let chain = chebyshev_chain();
        let sys = chebyshev_system(16);
        let arcsine = arcsine_measure();
        let z = Complex64::new(2.0, 0.0);
        for (i, j) in [(0usize, 0usize), (0, 1), (1, 2)] {
            let g = generating_function(&sys, &arcsine, i, j, z).unwrap();
            let mut partial = 0.0;
            for t in 0..=30 {
                partial += pt_oracle(&chain, i, j, t) / 2.0f64.powi(t as i32);
            }
            let tail = 2.0f64.powi(-30) / (1.0 - 0.5);
            assert!(
                (g.re - partial).abs() <= tail + 1e-9,
                "i={i} j={j}: {} vs {partial}",
                g.re
            );
        }
    }

    #[test]
    fn generating_function_large_z_is_kronecker() {
        let sys = chebyshev_system(16);
        let arcsine = arcsine_measure();
        let z = Complex64::new(4000.0, 0.0);
        for (i, j, expect) in [(0usize, 0usize, 1.0), (0, 1, 0.0), (2, 2, 1.0)] {
            let g = generating_function(&sys, &arcsine, i, j, z).unwrap();
            assert!((g.re - expect).abs() < 1e-3, "i={i} j={j} {g}");
        }
    }

    #[test]
    fn generating_function_discrete_agrees_with_density() {
        let sys = chebyshev_system(24);
        let arcsine = arcsine_measure();
        let psi = psi_n(&sys, 20).unwrap();
        let z = Complex64::new(1.7, 0.4);
        for (i, j) in [(0usize, 0usize), (1, 1), (0, 2)] {
            let g1 = generating_function(&sys, &arcsine, i, j, z).unwrap();
            let g2 = generating_function_discrete(&sys, &psi, i, j, z).unwrap();
            // psi_n approximates the full measure at O((1/|z|)^{2n}) here
            assert!((g1 - g2).norm() < 1e-6, "i={i} j={j}: {g1} vs {g2}");
        }
    }

    #[test]
    fn f_basis_first_column_and_tridiagonal_case() {
        let chain = chebyshev_chain();
        let f = f_basis(&chain, 5).unwrap();
        // f_j = e_j for a chain that is already tridiagonal
        for j in 0..5 {
            for i in 0..f.rows() {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((f.get(i, j) - expect).abs() < 1e-12, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn f_basis_is_orthonormal_for_pentadiagonal() {
        let chain = pentadiagonal_chebyshev();
        let f = f_basis(&chain, 4).unwrap();
        let gram = f.transpose().mul(&f);
        for a in 0..4 {
            for b in 0..4 {
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!(
                    (gram.get(a, b) - expect).abs() < 1e-8,
                    "gram[{a}][{b}] = {}",
                    gram.get(a, b)
                );
            }
        }
    }

    #[test]
    fn fbasis_pt_matches_oracle_on_row_zero() {
        // Entries touching state 0 are exact: e_0 lies in the cyclic
        // subspace, so the projection cross-terms vanish.
        let chain = pentadiagonal_chebyshev();
        for (i, j, t) in [
            (0usize, 0usize, 0usize),
            (0, 0, 3),
            (0, 1, 1),
            (0, 2, 4),
            (0, 3, 7),
            (3, 0, 5),
        ] {
            let v = pt_fbasis_auto(&chain, i, j, t, 12).unwrap();
            let oracle = pt_oracle(&chain, i, j, t);
            assert!(
                (v - oracle).abs() < 1e-10,
                "i={i} j={j} t={t}: {v} vs {oracle}"
            );
        }
        // named values
        let v = pt_fbasis_auto(&chain, 0, 0, 3, 6).unwrap();
        assert!((v - 3.0 / 32.0).abs() < 1e-7);
        let v = pt_fbasis_auto(&chain, 0, 1, 1, 6).unwrap();
        assert!((v - 0.5).abs() < 1e-7);
    }

    #[test]
    fn fbasis_interior_entries_see_the_cyclic_projection() {
        // The pentadiagonal operator has spectral multiplicity two, so e_0
        // is not cyclic: the F-route returns (Pi e_i, S^t Pi e_j) with Pi
        // the projection onto the cyclic subspace. At t = 0 the diagonal
        // entries for states 1 and 2 equal ||Pi e_1||^2 < 1, and they
        // coincide because T_2 = 2s - T_1 along the curve.
        let chain = pentadiagonal_chebyshev();
        let v11 = pt_fbasis_auto(&chain, 1, 1, 0, 24).unwrap();
        let v22 = pt_fbasis_auto(&chain, 2, 2, 0, 24).unwrap();
        assert!((v11 - v22).abs() < 1e-10, "{v11} vs {v22}");
        assert!(v11 < 0.8, "projection norm must fall below 1, got {v11}");
        assert!(v11 > 0.6);
        // whereas a tridiagonal chain is pointwise exact everywhere
        let cheb = chebyshev_chain();
        for (i, j, t) in [(1usize, 1usize, 0usize), (2, 3, 5), (1, 2, 4)] {
            let v = pt_fbasis_auto(&cheb, i, j, t, 12).unwrap();
            let oracle = pt_oracle(&cheb, i, j, t);
            assert!((v - oracle).abs() < 1e-10, "i={i} j={j} t={t}");
        }
    }
}
