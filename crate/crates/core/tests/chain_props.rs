//! Operator-level invariants on all example chains: stochasticity, detailed
//! balance, spectrum preservation under symmetrization, band locality.

use kmspec_core::chain::{
    chebyshev_chain, pentadiagonal_chebyshev, pi_weights, random_reversible_banded, symmetrize,
    truncate, BandedChain, BirthDeathChain,
};
use kmspec_core::orthopoly::OrthoPolySystem;

fn example_chains() -> Vec<(&'static str, BandedChain)> {
    vec![
        ("chebyshev", chebyshev_chain()),
        ("pentadiagonal", pentadiagonal_chebyshev()),
        (
            "drifted birth-death",
            BirthDeathChain::new(vec![2.0 / 3.0], vec![1.0 / 3.0])
                .unwrap()
                .to_banded(),
        ),
        ("random m=1", random_reversible_banded(1, 5)),
        ("random m=2", random_reversible_banded(2, 6)),
        ("random m=3", random_reversible_banded(3, 7)),
    ]
}

#[test]
fn rows_are_stochastic_up_to_64() {
    for (name, chain) in example_chains() {
        chain
            .validate_rows(64)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        for i in 0..64 {
            let sum: f64 = chain.row(i).iter().sum();
            assert!((sum - 1.0).abs() <= 1e-14, "{name} row {i} sums to {sum}");
        }
    }
}

#[test]
fn detailed_balance_holds_on_truncations() {
    for (name, chain) in example_chains() {
        let n = 64;
        let pi = pi_weights(&chain, n).unwrap_or_else(|e| panic!("{name}: {e}"));
        for i in 0..n {
            for j in 0..n {
                let r = pi.get(i) * chain.entry(i, j) - pi.get(j) * chain.entry(j, i);
                assert!(
                    r.abs() <= 1e-12 * pi.get(i).max(pi.get(j)),
                    "{name} ({i},{j}): {r}"
                );
            }
        }
    }
}

#[test]
fn symmetrization_preserves_the_spectrum() {
    // Similar matrices share eigenvalue multisets; numerically compare
    // power traces (Newton sums determine the multiset) plus, where an
    // independent eigenvalue route exists, the sorted spectra themselves.
    for (name, chain) in example_chains() {
        for n in [3usize, 8, 16] {
            let a = truncate(&chain, n);
            let s = symmetrize(&chain, n).unwrap();
            let mut pow_a = kmspec_core::linalg::Matrix::identity(n);
            let mut pow_s = kmspec_core::linalg::Matrix::identity(n);
            for t in 1..=n.min(10) {
                pow_a = pow_a.mul(&a);
                pow_s = pow_s.mul(&s);
                let tr_a: f64 = (0..n).map(|i| pow_a.get(i, i)).sum();
                let tr_s: f64 = (0..n).map(|i| pow_s.get(i, i)).sum();
                assert!(
                    (tr_a - tr_s).abs() < 1e-10,
                    "{name} n={n} t={t}: {tr_a} vs {tr_s}"
                );
            }
        }
    }
}

#[test]
fn tridiagonal_spectra_match_polynomial_roots() {
    // sorted spectra route: eigenvalues of the symmetrized truncation are
    // exactly the zeros of Q_n
    let chain = chebyshev_chain();
    let sys = OrthoPolySystem::from_chain(&chain, 24).unwrap();
    for n in [2usize, 7, 16] {
        let from_matrix = symmetrize(&chain, n)
            .unwrap()
            .symmetric_eigenvalues()
            .unwrap();
        let from_roots = sys.roots_qn(n).unwrap();
        for (a, b) in from_matrix.iter().zip(&from_roots) {
            assert!((a - b).abs() < 1e-10, "n={n}: {a} vs {b}");
        }
    }
}

#[test]
fn band_locality_makes_truncated_powers_exact() {
    // (truncate(chain, N)^t)[i][j] does not depend on N once
    // N > max(i,j) + m t; equality is bitwise.
    for (name, chain) in example_chains() {
        let m = chain.bandwidth();
        for (i, j, t) in [(0usize, 0usize, 6usize), (2, 4, 4), (5, 1, 3)] {
            let n0 = i.max(j) + m * t + 1;
            let mut reference = None;
            for n in [n0, n0 + 5] {
                let a = truncate(&chain, n);
                let mut v = vec![0.0; n];
                v[i] = 1.0;
                for _ in 0..t {
                    v = a.vecmat(&v);
                }
                match reference {
                    None => reference = Some(v[j]),
                    Some(r) => assert_eq!(r, v[j], "{name} ({i},{j},{t})"),
                }
            }
        }
    }
}
