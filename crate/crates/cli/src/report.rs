//! The acceptance battery: every quantitative claim the library makes,
//! checked end to end at pinned tolerances. The `report` subcommand and the
//! `acceptance` test target both run these functions.

use num_complex::Complex64;
use serde::Serialize;

use kmspec_core::banded::{contour_pt, s_compose_check};
use kmspec_core::chain::{
    chebyshev_chain, pentadiagonal_chebyshev, pi_weights, random_reversible_banded, BandedChain,
    BirthDeathChain,
};
use kmspec_core::jacobi::{
    jacobi_from_moments_exact, lanczos_jacobi, moments_from_operator, moments_from_operator_exact,
    resolvent_g,
};
use kmspec_core::kernel::{generating_function, pt_fbasis_auto, pt_oracle, pt_spectral};
use kmspec_core::measure::{arcsine_measure, pentadiagonal_measure, psi_n, two_sided_measure};
use kmspec_core::orthopoly::{chebyshev_system, OrthoPolySystem};
use kmspec_core::rational::{self, rational_from_f64};
use kmspec_core::rh::{check_asymptotics, check_jump, gf_from_rh, loglog_slope};

use crate::mc::simulate_trajectory;

/// One pass/fail record of the acceptance report.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub tolerance: f64,
    pub pass: bool,
}

impl CriterionResult {
    fn new(
        id: &str,
        description: &str,
        expected: impl Into<String>,
        actual: impl Into<String>,
        tolerance: f64,
        pass: bool,
    ) -> Self {
        CriterionResult {
            id: id.to_string(),
            description: description.to_string(),
            expected: expected.into(),
            actual: actual.into(),
            tolerance,
            pass,
        }
    }

    pub fn print_line(&self) {
        let status = if self.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:<3} {status}  {} (expected {}, actual {}, tol {:.1e})",
            self.id, self.description, self.expected, self.actual, self.tolerance
        );
    }
}

fn dev_result(
    id: &str,
    description: &str,
    expected: &str,
    worst: f64,
    tolerance: f64,
) -> CriterionResult {
    CriterionResult::new(
        id,
        description,
        expected,
        format!("max deviation {worst:.3e}"),
        tolerance,
        worst <= tolerance,
    )
}

/// Pentadiagonal moments: exact rational values and quadrature agreement.
pub fn criterion_1() -> Vec<CriterionResult> {
    let chain = pentadiagonal_chebyshev();
    let exact = moments_from_operator_exact(&chain, 4);
    let expected = [0.0, 0.25, 3.0 / 32.0, 9.0 / 64.0].map(rational_from_f64);
    let exact_ok = exact[1..].iter().zip(&expected).all(|(a, b)| a == b);
    let mut out = vec![CriterionResult::new(
        "1a",
        "pentadiagonal moments m_1..m_4 in rational mode",
        "(0, 1/4, 3/32, 9/64) exactly",
        if exact_ok {
            "exact match".to_string()
        } else {
            format!("{exact:?}")
        },
        0.0,
        exact_ok,
    )];

    let measure = pentadiagonal_measure();
    let mut worst = 0.0f64;
    for (k, target) in expected.iter().enumerate() {
        let quad = measure.moment(k + 1).unwrap();
        worst = worst.max((quad - rational::rational_to_f64(target)).abs());
    }
    out.push(dev_result(
        "1b",
        "spectral density reproduces the moments by quadrature",
        "m_1..m_4 via singularity-aware quadrature",
        worst,
        1e-8,
    ));
    out
}

fn random_chain_suite() -> Vec<(String, BandedChain)> {
    let mut out = vec![("pentadiagonal".to_string(), pentadiagonal_chebyshev())];
    for (idx, (m, seed)) in [(1usize, 1u64), (2, 2), (3, 3), (2, 4), (3, 5)]
        .iter()
        .enumerate()
    {
        out.push((
            format!("random#{idx} (m={m})"),
            random_reversible_banded(*m, *seed),
        ));
    }
    out
}

/// Jacobi reconstruction by the two independent routes.
pub fn criterion_2() -> Vec<CriterionResult> {
    let chain = pentadiagonal_chebyshev();
    let target = [0.0, 0.5, 0.375, 11.0f64.sqrt() / 8.0];

    let exact = moments_from_operator_exact(&chain, 6);
    let via_moments = jacobi_from_moments_exact(&exact, 3).unwrap();
    let via_lanczos = lanczos_jacobi(&chain, 3).unwrap();
    let mut worst = 0.0f64;
    for jac in [&via_moments, &via_lanczos] {
        worst = worst.max((jac.diagonal()[0] - target[0]).abs());
        worst = worst.max((jac.off_diagonal()[0] - target[1]).abs());
        worst = worst.max((jac.diagonal()[1] - target[2]).abs());
        worst = worst.max((jac.off_diagonal()[1] - target[3]).abs());
    }
    let mut out = vec![dev_result(
        "2a",
        "both routes recover (a0, b0, a1, b1) = (0, 1/2, 3/8, sqrt(11)/8)",
        "pentadiagonal Jacobi coefficients",
        worst,
        1e-10,
    )];

    let mut route_worst = 0.0f64;
    for (_, chain) in random_chain_suite() {
        let n = 8;
        let exact = moments_from_operator_exact(&chain, 2 * n);
        let a = jacobi_from_moments_exact(&exact, n).unwrap();
        let b = lanczos_jacobi(&chain, n).unwrap();
        for j in 0..n {
            route_worst = route_worst.max((a.diagonal()[j] - b.diagonal()[j]).abs());
        }
        for j in 0..(n - 1) {
            route_worst = route_worst.max((a.off_diagonal()[j] - b.off_diagonal()[j]).abs());
        }
    }
    out.push(dev_result(
        "2b",
        "moment route and Lanczos route agree to n = 8 on 6 banded chains",
        "coefficient agreement",
        route_worst,
        1e-8,
    ));
    out
}

/// Reflecting-walk spectral identities.
pub fn criterion_3() -> Vec<CriterionResult> {
    let sys = chebyshev_system(40);
    let pi = core::f64::consts::PI;

    let mut root_worst = 0.0f64;
    for n in 1..=32usize {
        let roots = sys.roots_qn(n).unwrap();
        for k in 0..n {
            let expect = (pi / (2.0 * n as f64) + pi * k as f64 / n as f64).cos();
            root_worst = root_worst.max((roots[n - 1 - k] - expect).abs());
        }
    }
    let mut out = vec![dev_result(
        "3a",
        "zeros of Q_n equal cos(pi/(2n) + pi k/n) for n <= 32",
        "closed-form Chebyshev nodes",
        root_worst,
        1e-10,
    )];

    // arcsine moments: m_{2j} = m_{2j-2} (2j-1)/(2j), odd moments vanish
    let mut moment_worst = 0.0f64;
    for n in [2usize, 4, 8, 16] {
        let psi = psi_n(&sys, n).unwrap();
        let mut even = 1.0;
        for k in 0..(2 * n) {
            let closed = if k % 2 == 1 {
                0.0
            } else {
                if k > 0 {
                    even *= (k - 1) as f64 / k as f64;
                }
                even
            };
            moment_worst = moment_worst.max((psi.moment(k) - closed).abs());
        }
    }
    out.push(dev_result(
        "3b",
        "psi_n moments equal arcsine moments for k <= 2n - 1",
        "Gauss exactness",
        moment_worst,
        1e-10,
    ));

    let mut christoffel_worst = 0.0f64;
    for n in [2usize, 5, 9, 16] {
        for step in 1..=50 {
            let x = pi * step as f64 / 51.0;
            let lambda = x.cos();
            let closed = n as f64 - 0.5 + ((2.0 * n as f64 - 1.0) * x).sin() / (2.0 * x.sin());
            let direct = sys.christoffel_sum(n, lambda);
            christoffel_worst = christoffel_worst.max((closed - direct).abs());
        }
    }
    out.push(dev_result(
        "3c",
        "Christoffel sum matches its closed form at 50 points",
        "n - 1/2 + sin((2n-1)x) / (2 sin x) at lambda = cos x",
        christoffel_worst,
        1e-10,
    ));
    out
}

/// Transition kernel: spectral and F-basis routes against the oracle.
pub fn criterion_4() -> Vec<CriterionResult> {
    let chain = chebyshev_chain();
    let sys = chebyshev_system(40);
    let psi = psi_n(&sys, 16).unwrap();
    let mut worst = 0.0f64;
    for i in 0..=5usize {
        for j in 0..=5usize {
            for t in 0..=20usize {
                let spectral = pt_spectral(&sys, &psi, i, j, t).unwrap();
                let oracle = pt_oracle(&chain, i, j, t);
                worst = worst.max((spectral - oracle).abs());
            }
        }
    }
    let mut out = vec![dev_result(
        "4a",
        "pt via psi_16 equals the matrix-power oracle (i,j <= 5, t <= 20)",
        "Gauss-exact spectral kernel",
        worst,
        1e-10,
    )];

    // The F-basis sweep over all i,j <= 3 cannot meet 1e-7 for entries with
    // min(i,j) >= 1: the pentadiagonal operator has spectral multiplicity
    // two, so the basis spans only the cyclic subspace of e_0 and the route
    // returns the projected kernel there (see the two-sided contour route
    // for the exact diagonalization). Reported as measured.
    let chain = pentadiagonal_chebyshev();
    let mut fb_worst = 0.0f64;
    let mut failing_cells = 0usize;
    let mut total_cells = 0usize;
    for i in 0..=3usize {
        for j in 0..=3usize {
            for t in 0..=10usize {
                let v = pt_fbasis_auto(&chain, i, j, t, 12).unwrap();
                let oracle = pt_oracle(&chain, i, j, t);
                let dev = (v - oracle).abs();
                total_cells += 1;
                if dev > 1e-7 {
                    failing_cells += 1;
                }
                fb_worst = fb_worst.max(dev);
            }
        }
    }
    out.push(CriterionResult::new(
        "4b",
        "pt via F-basis equals the oracle (pentadiagonal, i,j <= 3, t <= 10)",
        "agreement within 1e-7 on all cells",
        format!(
            "max deviation {fb_worst:.3e}; {failing_cells}/{total_cells} cells exceed tolerance \
             (structural: multiplicity-two spectrum, F-basis spans only the cyclic subspace)"
        ),
        1e-7,
        fb_worst <= 1e-7,
    ));
    out
}

/// Two-sided contour diagonalization.
pub fn criterion_5() -> Vec<CriterionResult> {
    let chain = pentadiagonal_chebyshev();
    let mut worst = 0.0f64;
    for i in 0..=3usize {
        for j in 0..=3usize {
            for t in 0..=10usize {
                let v = contour_pt(i, j, t).unwrap();
                worst = worst.max((v - pt_oracle(&chain, i, j, t)).abs());
            }
        }
    }
    let mut out = vec![dev_result(
        "5a",
        "contour kernel equals the oracle (i,j <= 3, t <= 10)",
        "two-sided contour diagonalization",
        worst,
        1e-6,
    )];

    let mut ortho_worst = 0.0f64;
    for i in 0..=4usize {
        for j in 0..=4usize {
            let v = contour_pt(i, j, 0).unwrap();
            let expect = if i == j { 1.0 } else { 0.0 };
            ortho_worst = ortho_worst.max((v - expect).abs());
        }
    }
    out.push(dev_result(
        "5b",
        "contour kernel at t = 0 is the identity",
        "branch-resolved orthogonality",
        ortho_worst,
        1e-6,
    ));

    let contour = two_sided_measure();
    let flat = pentadiagonal_measure();
    let mut measure_worst = (contour.total_mass().unwrap() - 1.0).abs();
    measure_worst = measure_worst.max((contour.moment(4).unwrap() - 9.0 / 64.0).abs());
    for step in 0..200 {
        let s = -9.0 / 16.0 + (1.0 + 9.0 / 16.0) * (step as f64 + 0.5) / 200.0;
        let mut stacked = 0.0;
        for p in contour.pieces() {
            if s >= p.interval.0 && s < p.interval.1 {
                stacked += p.density_at(s);
            }
        }
        let expect = flat.density_at(s);
        measure_worst = measure_worst.max((stacked - expect).abs() / expect.max(1.0));
    }
    out.push(dev_result(
        "5c",
        "contour measure mass, moment m_4, and projection identity",
        "mass 1, m_4 = 9/64, piecewise densities sum to the real-line density",
        measure_worst,
        1e-8,
    ));
    out
}

/// Generating functions and resolvents.
pub fn criterion_6() -> Vec<CriterionResult> {
    let chain = chebyshev_chain();
    let sys = chebyshev_system(24);
    let arcsine = arcsine_measure();

    let g = generating_function(&sys, &arcsine, 0, 0, Complex64::new(2.0, 0.0)).unwrap();
    let dev = (g - Complex64::new(2.0 / 3.0f64.sqrt(), 0.0)).norm();
    let mut out = vec![dev_result(
        "6a",
        "G_00(2) = 2/sqrt(3)",
        "arcsine Stieltjes value",
        dev,
        1e-9,
    )];

    let z_values = [
        Complex64::new(1.5, 0.0),
        Complex64::new(2.0, 0.0),
        Complex64::new(-2.5, 0.0),
        Complex64::new(4.0, 0.0),
        Complex64::new(1.2, 1.2),
        Complex64::new(0.0, 2.0),
        Complex64::new(-1.5, 2.0),
        Complex64::new(3.0, -1.5),
    ];
    let t_cut = 60usize;
    let mut series_worst = 0.0f64;
    for &z in &z_values {
        let r = z.norm();
        let tail = r.powi(-(t_cut as i32 + 1)) / (1.0 - 1.0 / r);
        for (i, j) in [(0usize, 0usize), (0, 1), (1, 1)] {
            let g = generating_function(&sys, &arcsine, i, j, z).unwrap();
            let mut partial = Complex64::new(0.0, 0.0);
            let mut zpow = Complex64::new(1.0, 0.0);
            for t in 0..=t_cut {
                partial += pt_oracle(&chain, i, j, t) * zpow;
                zpow /= z;
            }
            let excess = ((g - partial).norm() - tail).max(0.0);
            series_worst = series_worst.max(excess);
        }
    }
    out.push(dev_result(
        "6b",
        "spectral G matches kernel partial sums plus tail bound (8 z values)",
        "series agreement",
        series_worst,
        1e-8,
    ));

    // Fourier-integral oracle for the pentadiagonal resolvent
    let fourier = |z: Complex64| -> Complex64 {
        let m = 8192usize;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..m {
            let theta = 2.0 * core::f64::consts::PI * k as f64 / m as f64;
            let symbol = 0.5 * (theta.cos() + (2.0 * theta).cos());
            acc += (Complex64::new(symbol, 0.0) - z).inv();
        }
        acc / m as f64
    };
    let penta = pentadiagonal_chebyshev();
    let mut res_worst = 0.0f64;
    for &z in &[
        Complex64::new(2.0, 0.0),
        Complex64::new(1.5, 1.0),
        Complex64::new(0.0, 3.0),
    ] {
        let g = resolvent_g(&penta, z).unwrap();
        res_worst = res_worst.max((g - fourier(z)).norm());
    }
    out.push(dev_result(
        "6c",
        "pentadiagonal resolvent equals the Fourier integral at 3 points",
        "(1/2pi) Integral dtheta / ((cos + cos2)/2 - z)",
        res_worst,
        1e-7,
    ));
    out
}

/// Riemann-Hilbert verification.
pub fn criterion_7() -> Vec<CriterionResult> {
    let sys = chebyshev_system(16);
    let arcsine = arcsine_measure();
    let eps = [1e-3, 1e-4, 1e-5];
    let points = [-0.8, -0.4, 0.1, 0.45, 0.85];

    let mut jump_worst = 0.0f64;
    for n in 0..=4usize {
        for &x in &points {
            let r = check_jump(n, &arcsine, &sys, x, &eps).unwrap();
            jump_worst = jump_worst.max(r);
        }
    }
    let mut out = vec![dev_result(
        "7a",
        "jump condition m_+ = m_- v across the support (n <= 4, 5 points)",
        "Plemelj boundary relation",
        jump_worst,
        1e-6,
    )];

    let radii = [4.0, 8.0, 16.0];
    let mut slope_worst = 0.0f64;
    let mut monotone = true;
    for n in 0..=4usize {
        let zs: Vec<Complex64> = radii
            .iter()
            .map(|&r| Complex64::new(0.8 * r, 0.6 * r))
            .collect();
        let devs = check_asymptotics(n, &arcsine, &sys, &zs).unwrap();
        monotone &= devs[0] > devs[1] && devs[1] > devs[2];
        let slope = loglog_slope(&radii, &devs);
        slope_worst = slope_worst.max((slope + 1.0).abs());
    }
    out.push(CriterionResult::new(
        "7b",
        "normalization deviation decays like 1/|z| (n <= 4)",
        "log-log slope -1 +- 0.2, monotone over |z| = 4, 8, 16",
        format!("max |slope + 1| = {slope_worst:.3}, monotone = {monotone}"),
        0.2,
        slope_worst <= 0.2 && monotone,
    ));

    let z_values = [
        Complex64::new(1.5, 0.0),
        Complex64::new(2.0, 0.0),
        Complex64::new(-2.5, 0.0),
        Complex64::new(4.0, 0.0),
        Complex64::new(1.2, 1.2),
        Complex64::new(0.0, 2.0),
        Complex64::new(-1.5, 2.0),
        Complex64::new(3.0, -1.5),
    ];
    let mut gf_worst = 0.0f64;
    for n in 0..=4usize {
        for &z in &z_values {
            let a = gf_from_rh(n, &arcsine, &sys, z).unwrap();
            let b = generating_function(&sys, &arcsine, 0, n, z).unwrap();
            gf_worst = gf_worst.max((a - b).norm());
        }
    }
    out.push(dev_result(
        "7c",
        "generating function extracted from the RH matrix matches the kernel",
        "entry (1,2) identification",
        gf_worst,
        1e-6,
    ));
    out
}

/// Polynomial composition identity.
pub fn criterion_8() -> Vec<CriterionResult> {
    let mut worst = 0.0f64;
    for n in [8usize, 16, 32] {
        worst = worst.max(s_compose_check(n));
    }
    vec![CriterionResult::new(
        "8",
        "s(P_ch) equals the pentadiagonal operator on interior rows (N = 8, 16, 32)",
        "residual exactly 0 in dyadic arithmetic",
        format!("max residual {worst:e}"),
        0.0,
        worst == 0.0,
    )]
}

/// Monte Carlo validation of the kernel.
pub fn criterion_9(seed: u64, trials: u64) -> Vec<CriterionResult> {
    let mut worst_z = 0.0f64;
    let mut violations = 0usize;
    let mut checked = 0usize;
    for (name, chain) in [
        ("chebyshev", chebyshev_chain()),
        ("pentadiagonal", pentadiagonal_chebyshev()),
    ] {
        let rows = simulate_trajectory(&chain, 10, trials, seed);
        for t in 0..=10usize {
            for j in 0..=6usize {
                let est = &rows[t][j];
                let oracle = pt_oracle(&chain, 0, j, t);
                let dev = (est.estimate - oracle).abs();
                checked += 1;
                if est.std_error > 0.0 {
                    worst_z = worst_z.max(dev / est.std_error);
                }
                if dev > 4.0 * est.std_error {
                    violations += 1;
                    eprintln!(
                        "  mc violation: {name} t={t} j={j} est={} oracle={oracle} se={}",
                        est.estimate, est.std_error
                    );
                }
            }
        }
    }
    vec![CriterionResult::new(
        "9",
        "Monte Carlo estimates within 4 standard errors of the oracle",
        format!("{checked} cells, both chains, t <= 10, j <= 6, {trials} trials"),
        format!("{violations} violations, max z-score {worst_z:.2}"),
        4.0,
        violations == 0,
    )]
}

/// Property suites rolled into one criterion.
pub fn criterion_10() -> Vec<CriterionResult> {
    let mut out = Vec::new();

    // detailed balance
    let mut chains: Vec<(String, BandedChain)> = vec![
        ("chebyshev".into(), chebyshev_chain()),
        ("pentadiagonal".into(), pentadiagonal_chebyshev()),
        (
            "birth-death 2/3".into(),
            BirthDeathChain::new(vec![2.0 / 3.0], vec![1.0 / 3.0])
                .unwrap()
                .to_banded(),
        ),
    ];
    chains.extend(random_chain_suite().into_iter().skip(1));
    let mut balance_worst = 0.0f64;
    for (_, chain) in &chains {
        let n = 64;
        let pi = pi_weights(chain, n).unwrap();
        for i in 0..n {
            for j in 0..n {
                let r = (pi.get(i) * chain.entry(i, j) - pi.get(j) * chain.entry(j, i)).abs();
                balance_worst = balance_worst.max(r / pi.get(i).max(pi.get(j)).max(1.0));
            }
        }
    }
    out.push(dev_result(
        "10a",
        "detailed balance on all example chains (n = 64)",
        "pi_i P(i,j) = pi_j P(j,i)",
        balance_worst,
        1e-12,
    ));

    // Chapman-Kolmogorov
    let mut ck_worst = 0.0f64;
    for chain in [chebyshev_chain(), pentadiagonal_chebyshev()] {
        let m = chain.bandwidth();
        for (s, t) in [(1usize, 2usize), (3, 4), (5, 5)] {
            for i in 0..=4usize {
                for j in 0..=4usize {
                    let reach = i.max(j) + m * (s + t) + 1;
                    let mut acc = 0.0;
                    for k in 0..reach {
                        acc += pt_oracle(&chain, i, k, s) * pt_oracle(&chain, k, j, t);
                    }
                    ck_worst = ck_worst.max((acc - pt_oracle(&chain, i, j, s + t)).abs());
                }
            }
        }
    }
    out.push(dev_result(
        "10b",
        "Chapman-Kolmogorov on truncations",
        "sum_k p_s(i,k) p_t(k,j) = p_{s+t}(i,j)",
        ck_worst,
        1e-10,
    ));

    // interlacing
    let sys = chebyshev_system(42);
    let generic = OrthoPolySystem::from_chain(
        &BirthDeathChain::new(vec![0.5, 2.0 / 3.0], vec![0.25])
            .unwrap()
            .to_banded(),
        42,
    )
    .unwrap();
    let mut interlace_ok = true;
    for system in [&sys, &generic] {
        for n in 1..=40usize {
            let rn = system.roots_qn(n).unwrap();
            let rn1 = system.roots_qn(n + 1).unwrap();
            for k in 0..n {
                interlace_ok &= rn1[k] < rn[k] && rn[k] < rn1[k + 1];
            }
        }
    }
    out.push(CriterionResult::new(
        "10c",
        "root interlacing for n <= 40",
        "zeros of Q_n strictly interlace zeros of Q_{n+1}",
        if interlace_ok {
            "strict interlacing".into()
        } else {
            "violated".to_string()
        },
        0.0,
        interlace_ok,
    ));

    // Hankel positivity
    let mut hankel_min = f64::INFINITY;
    for chain in [
        chebyshev_chain(),
        pentadiagonal_chebyshev(),
        random_reversible_banded(3, 3),
    ] {
        let m = moments_from_operator(&chain, 12);
        for r in 1..=6usize {
            let eigs = m.hankel(r).symmetric_eigenvalues().unwrap();
            hankel_min = hankel_min.min(eigs[0]);
        }
    }
    out.push(CriterionResult::new(
        "10d",
        "Hankel matrices of moment sequences are positive semidefinite",
        "min eigenvalue >= -1e-10",
        format!("min eigenvalue {hankel_min:.3e}"),
        1e-10,
        hankel_min >= -1e-10,
    ));

    // Herglotz sign condition on a 10 x 10 upper half-plane grid
    let mut herglotz_ok = true;
    let mut min_imag = f64::INFINITY;
    for chain in [chebyshev_chain(), pentadiagonal_chebyshev()] {
        for re_step in 0..10 {
            for im_step in 0..10 {
                let z = Complex64::new(
                    -0.9 + 1.8 * re_step as f64 / 9.0,
                    0.25 + 1.95 * im_step as f64 / 9.0,
                );
                let g = resolvent_g(&chain, z).unwrap();
                min_imag = min_imag.min(g.im);
                herglotz_ok &= g.im > 0.0;
            }
        }
    }
    out.push(CriterionResult::new(
        "10e",
        "resolvent is Herglotz on a 10x10 upper half-plane grid",
        "Im G(z) > 0 when Im z > 0",
        format!("min Im G = {min_imag:.3e}"),
        0.0,
        herglotz_ok,
    ));
    out
}

/// Options for the full battery.
#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    pub seed: u64,
    pub trials: u64,
    pub skip_mc: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            seed: 20_260_808,
            trials: 1_000_000,
            skip_mc: false,
        }
    }
}

/// Run every criterion and collect the records in order.
pub fn run_all(opts: ReportOptions) -> Vec<CriterionResult> {
    let mut out = Vec::new();
    out.extend(criterion_1());
    out.extend(criterion_2());
    out.extend(criterion_3());
    out.extend(criterion_4());
    out.extend(criterion_5());
    out.extend(criterion_6());
    out.extend(criterion_7());
    out.extend(criterion_8());
    if !opts.skip_mc {
        out.extend(criterion_9(opts.seed, opts.trials));
    }
    out.extend(criterion_10());
    out
}
