//! Banded-extension invariants: characteristic roots of the pentadiagonal
//! recurrence against an independent quartic solver, determinant spectra
//! against the dense eigensolver, and the contour diagonalization against
//! the matrix-power oracle.

use kmspec_core::banded::{
    contour_pt, mu_branches, s_compose_check, spectrum_det_normalized, zhukovskiy,
};
use kmspec_core::chain::{pentadiagonal_chebyshev, symmetrize};
use kmspec_core::kernel::pt_oracle;
use num_complex::Complex64;

/// Independent oracle: Durand-Kerner iteration for a monic quartic.
fn quartic_roots(coeffs: [f64; 5]) -> Vec<Complex64> {
    let lead = coeffs[4];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..4).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..200 {
        let snapshot = roots.clone();
        for i in 0..4 {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..4 {
                if i != j {
                    denom *= snapshot[i] - snapshot[j];
                }
            }
            roots[i] = snapshot[i] - eval(snapshot[i]) / denom;
        }
    }
    roots
}

#[test]
fn characteristic_roots_project_onto_the_branches() {
    // recurrence c_{n+2} + c_{n+1} - 4 lambda c_n + c_{n-1} + c_{n-2} = 0:
    // quartic z^4 + z^3 - 4 lambda z^2 + z + 1
    let samples_by_piece = [
        (-0.5562f64, -0.01f64), // interior of (-9/16, 0)
        (0.01, 0.99),           // interior of (0, 1)
    ];
    for (lo, hi) in samples_by_piece {
        for step in 0..25 {
            let lambda = lo + (hi - lo) * (step as f64 + 0.5) / 25.0;
            let roots = quartic_roots([1.0, 1.0, -4.0 * lambda, 1.0, 1.0]);
            let (plus, minus) = mu_branches(lambda).unwrap();

            // Zhukovskiy projections recover {mu+, mu+, mu-, mu-}
            let mut projections: Vec<f64> = roots
                .iter()
                .map(|&z| {
                    let p = zhukovskiy(z);
                    assert!(p.im.abs() < 1e-9, "projection must be real, got {p}");
                    p.re
                })
                .collect();
            projections.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut expected = [minus, minus, plus, plus];
            expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (got, want) in projections.iter().zip(&expected) {
                assert!(
                    (got - want).abs() < 1e-10,
                    "lambda={lambda}: {got} vs {want}"
                );
            }

            // branches with |mu| <= 1 correspond to unit-circle root pairs
            for &z in &roots {
                let x = zhukovskiy(z).re;
                if x.abs() <= 1.0 {
                    assert!(
                        (z.norm() - 1.0).abs() < 1e-10,
                        "lambda={lambda}: root {z} with Re-branch {x} off the circle"
                    );
                } else {
                    assert!(z.im.abs() < 1e-9, "off-circle roots are real");
                }
            }
        }
    }
}

#[test]
fn determinant_zeros_match_dense_spectra_up_to_n_12() {
    let chain = pentadiagonal_chebyshev();
    for n in [2usize, 5, 8, 12] {
        let eigs = symmetrize(&chain, n)
            .unwrap()
            .symmetric_eigenvalues()
            .unwrap();

        // locate the determinant zeros by sign-change bisection
        let grid = 1600;
        let mut zeros = Vec::new();
        let mut prev_x = -1.0 + 1e-9;
        let mut prev = spectrum_det_normalized(&chain, n, prev_x).unwrap();
        for k in 1..=grid {
            let x = -1.0 + 2.0 * k as f64 / grid as f64 - 1e-9;
            let cur = spectrum_det_normalized(&chain, n, x).unwrap();
            if prev.signum() != cur.signum() {
                let (mut a, mut b) = (prev_x, x);
                let mut fa = prev;
                for _ in 0..80 {
                    let mid = 0.5 * (a + b);
                    let fm = spectrum_det_normalized(&chain, n, mid).unwrap();
                    if fa.signum() != fm.signum() {
                        b = mid;
                    } else {
                        a = mid;
                        fa = fm;
                    }
                }
                zeros.push(0.5 * (a + b));
            }
            prev_x = x;
            prev = cur;
        }

        assert_eq!(
            zeros.len(),
            eigs.len(),
            "n={n}: zeros {zeros:?} vs eigs {eigs:?}"
        );
        for (z, e) in zeros.iter().zip(&eigs) {
            assert!(
                (z - e).abs() <= 1e-7,
                "n={n}: determinant zero {z}, eigenvalue {e}"
            );
        }
    }
}

#[test]
fn composition_identity_across_sizes() {
    for n in [8usize, 16, 32] {
        assert_eq!(s_compose_check(n), 0.0, "N={n}");
    }
}

#[test]
fn contour_diagonalization_reproduces_the_kernel() {
    let chain = pentadiagonal_chebyshev();
    for i in 0..=3usize {
        for j in 0..=3usize {
            for t in [0usize, 2, 5, 10] {
                let via_contour = contour_pt(i, j, t).unwrap();
                let oracle = pt_oracle(&chain, i, j, t);
                assert!(
                    (via_contour - oracle).abs() < 1e-6,
                    "i={i} j={j} t={t}: {via_contour} vs {oracle}"
                );
            }
        }
    }
}

#[test]
fn contour_orthogonality_at_time_zero() {
    for i in 0..=4usize {
        for j in 0..=4usize {
            let v = contour_pt(i, j, 0).unwrap();
            let expect = if i == j { 1.0 } else { 0.0 };
            assert!((v - expect).abs() < 1e-6, "i={i} j={j}: {v}");
        }
    }
}
