//! `kmspec`: spectral tables, Monte Carlo validation, and acceptance
//! reports for reversible Markov chains on the half-line.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use kmspec::chainspec::{self, ChainSpec};
use kmspec::csvfmt::{fmt_f64, parse_complex, write_csv};
use kmspec::mc::{simulate_trajectory, BLOCK_SIZE, RNG_ALGORITHM};
use kmspec::report::{self, ReportOptions};
use kmspec::CliError;

use kmspec_core::banded::contour_pt_pieces;
use kmspec_core::chain::BandedChain;
use kmspec_core::jacobi::{
    jacobi_from_moments, jacobi_from_moments_exact, lanczos_jacobi, moments_from_operator,
    moments_from_operator_exact,
};
use kmspec_core::kernel::{generating_function_discrete, pt_fbasis_auto, pt_oracle, pt_spectral};
use kmspec_core::measure::{
    arcsine_measure, pentadiagonal_measure, psi_n, two_sided_measure, Side,
};
use kmspec_core::orthopoly::OrthoPolySystem;
use kmspec_core::rational;
use kmspec_core::rh::{check_asymptotics, check_jump, gf_from_rh, loglog_slope};

#[derive(Parser)]
#[command(
    name = "kmspec",
    version,
    about = "Karlin-McGregor spectral diagonalization of reversible Markov chains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum JacobiRoute {
    /// Hankel LDL^T over exact-rational moments (default).
    Exact,
    /// Hankel LDL^T over floating-point moments.
    Moments,
    /// Symmetric Lanczos with full reorthogonalization.
    Lanczos,
}

#[derive(Subcommand)]
enum Command {
    /// Moment sequence m_k = (e_0, P^k e_0) of a chain.
    Moments {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        /// Emit exact numerator/denominator columns.
        #[arg(long)]
        exact: bool,
    },
    /// Jacobi coefficients (a_j, b_j) of the equivalent tridiagonal operator.
    Jacobi {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, value_enum, default_value_t = JacobiRoute::Exact)]
        route: JacobiRoute,
    },
    /// Polynomial tables of a tridiagonal chain: coefficients of Q_j and
    /// zeros of Q_n.
    Poly {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 8)]
        jmax: usize,
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Emit exact numerator/denominator coefficient columns.
        #[arg(long)]
        exact: bool,
    },
    /// Spectral measures: Gauss rule, closed-form density, contour pieces.
    Measure {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        grid: usize,
    },
    /// Transition probabilities: spectral route against the exact oracle.
    Pt {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 10)]
        tmax: usize,
        #[arg(long, default_value_t = 3)]
        imax: usize,
        #[arg(long, default_value_t = 3)]
        jmax: usize,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Generating function G_ij(z) for a tridiagonal chain.
    Gf {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Complex evaluation points "a+bi"; repeatable.
        #[arg(long = "z")]
        z: Vec<String>,
        #[arg(long, default_value_t = 0)]
        i: usize,
        #[arg(long, default_value_t = 0)]
        j: usize,
    },
    /// Riemann-Hilbert verification tables for the arcsine weight.
    RhCheck {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Two-sided contour kernel of the pentadiagonal walk.
    ContourPt {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 6)]
        tmax: usize,
        #[arg(long, default_value_t = 3)]
        imax: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Monte Carlo validation of the kernel (flagged, never asserted).
    Mc {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 10)]
        tmax: usize,
    },
    /// Full acceptance battery; writes summary.json.
    Report {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 20_260_808)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        /// Skip the Monte Carlo criterion (useful for quick reruns).
        #[arg(long)]
        skip_mc: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("{}", e.to_json());
            std::process::exit(e.exit_code());
        }
    }
}

fn load_chain(path: &Path) -> Result<(ChainSpec, BandedChain), CliError> {
    let spec = chainspec::load(path)?;
    let chain = spec.build()?;
    Ok((spec, chain))
}

fn ensure_out(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    Ok(())
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Plus => "plus",
        Side::Minus => "minus",
        Side::Real => "real",
    }
}

fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Moments {
            chain,
            out,
            kmax,
            exact,
        } => {
            let (_, chain) = load_chain(&chain)?;
            ensure_out(&out)?;
            if exact {
                let moments = moments_from_operator_exact(&chain, kmax);
                let rows: Vec<Vec<String>> = moments
                    .iter()
                    .enumerate()
                    .map(|(k, m)| {
                        let (num, den) = rational::rational_parts(m);
                        vec![k.to_string(), num.to_string(), den.to_string()]
                    })
                    .collect();
                write_csv(
                    &out.join("moments.csv"),
                    &["k", "numerator", "denominator"],
                    &rows,
                )?;
            } else {
                let moments = moments_from_operator(&chain, kmax);
                let rows: Vec<Vec<String>> = (0..=kmax)
                    .map(|k| vec![k.to_string(), fmt_f64(moments.get(k))])
                    .collect();
                write_csv(&out.join("moments.csv"), &["k", "m_k"], &rows)?;
            }
            Ok(true)
        }

        Command::Jacobi {
            chain,
            out,
            n,
            route,
        } => {
            let (_, chain) = load_chain(&chain)?;
            ensure_out(&out)?;
            let jac = match route {
                JacobiRoute::Exact => {
                    let moments = moments_from_operator_exact(&chain, 2 * n);
                    jacobi_from_moments_exact(&moments, n)?
                }
                JacobiRoute::Moments => {
                    let moments = moments_from_operator(&chain, 2 * n);
                    jacobi_from_moments(&moments, n)?
                }
                JacobiRoute::Lanczos => lanczos_jacobi(&chain, n)?,
            };
            let rows: Vec<Vec<String>> = (0..jac.len())
                .map(|j| {
                    let b = jac
                        .off_diagonal()
                        .get(j)
                        .map(|b| fmt_f64(*b))
                        .unwrap_or_default();
                    vec![j.to_string(), fmt_f64(jac.diagonal()[j]), b]
                })
                .collect();
            write_csv(&out.join("jacobi.csv"), &["j", "a_j", "b_j"], &rows)?;
            Ok(true)
        }

        Command::Poly {
            chain,
            out,
            jmax,
            n,
            exact,
        } => {
            let (_, chain) = load_chain(&chain)?;
            if jmax > 64 {
                return Err(CliError::Config(
                    "coefficient tables are limited to jmax <= 64".into(),
                ));
            }
            ensure_out(&out)?;
            let sys = OrthoPolySystem::from_chain(&chain, jmax.max(n) + 2)?;
            let mut rows = Vec::new();
            for j in 0..=jmax {
                if exact {
                    for (k, c) in sys.coefficients_q_exact(j)?.iter().enumerate() {
                        let (num, den) = rational::rational_parts(c);
                        rows.push(vec![
                            j.to_string(),
                            k.to_string(),
                            num.to_string(),
                            den.to_string(),
                        ]);
                    }
                } else {
                    for (k, c) in sys.coefficients_q(j).iter().enumerate() {
                        rows.push(vec![j.to_string(), k.to_string(), fmt_f64(*c)]);
                    }
                }
            }
            let header: &[&str] = if exact {
                &["j", "k", "numerator", "denominator"]
            } else {
                &["j", "k", "coefficient"]
            };
            write_csv(&out.join("coefficients.csv"), header, &rows)?;

            let roots = sys.roots_qn(n)?;
            let rows: Vec<Vec<String>> = roots
                .iter()
                .enumerate()
                .map(|(k, r)| vec![n.to_string(), k.to_string(), fmt_f64(*r)])
                .collect();
            write_csv(&out.join("roots.csv"), &["n", "k", "root"], &rows)?;
            Ok(true)
        }

        Command::Measure {
            chain,
            out,
            n,
            grid,
        } => {
            let (spec, chain) = load_chain(&chain)?;
            ensure_out(&out)?;
            // discrete Gauss rule: psi_n for tridiagonal chains, the Gauss
            // rule of the equivalent Jacobi operator otherwise
            let rule = if chain.bandwidth() == 1 {
                let sys = OrthoPolySystem::from_chain(&chain, n + 2)?;
                psi_n(&sys, n)?
            } else {
                lanczos_jacobi(&chain, n)?.gauss_rule(n)?
            };
            let rows: Vec<Vec<String>> = rule
                .nodes()
                .iter()
                .zip(rule.weights())
                .map(|(x, w)| vec![fmt_f64(*x), fmt_f64(*w)])
                .collect();
            write_csv(&out.join("psi_n.csv"), &["node", "weight"], &rows)?;

            let density = match spec.kind_name() {
                "chebyshev" => Some(arcsine_measure()),
                "pentadiagonal_chebyshev" => Some(pentadiagonal_measure()),
                _ => None,
            };
            if let Some(measure) = density {
                let mut rows = Vec::new();
                for &(a, b) in measure.support() {
                    for step in 0..grid {
                        let x = a + (b - a) * (step as f64 + 0.5) / grid as f64;
                        rows.push(vec![fmt_f64(x), fmt_f64(measure.density_at(x))]);
                    }
                }
                write_csv(&out.join("density.csv"), &["lambda", "density"], &rows)?;
            }
            if spec.kind_name() == "pentadiagonal_chebyshev" {
                let contour = two_sided_measure();
                let mut rows = Vec::new();
                for (idx, piece) in contour.pieces().iter().enumerate() {
                    let (a, b) = piece.interval;
                    for step in 0..grid {
                        let x = a + (b - a) * (step as f64 + 0.5) / grid as f64;
                        rows.push(vec![
                            idx.to_string(),
                            side_name(piece.side).to_string(),
                            fmt_f64(x),
                            fmt_f64(piece.density_at(x)),
                        ]);
                    }
                }
                write_csv(
                    &out.join("contour.csv"),
                    &["piece", "side", "lambda", "density"],
                    &rows,
                )?;
            }
            Ok(true)
        }

        Command::Pt {
            chain,
            out,
            tmax,
            imax,
            jmax,
            tol,
        } => {
            let (_, chain) = load_chain(&chain)?;
            ensure_out(&out)?;
            let tridiagonal = chain.bandwidth() == 1;
            let spectral: Box<dyn Fn(usize, usize, usize) -> Result<f64, CliError>> = if tridiagonal
            {
                let rule_size = (tmax + imax + jmax) / 2 + 1;
                let sys = OrthoPolySystem::from_chain(&chain, rule_size + imax + jmax + 2)?;
                let psi = psi_n(&sys, rule_size)?;
                Box::new(move |i, j, t| Ok(pt_spectral(&sys, &psi, i, j, t)?))
            } else {
                let chain = chain.clone();
                Box::new(move |i, j, t| Ok(pt_fbasis_auto(&chain, i, j, t, 12)?))
            };

            let mut rows = Vec::new();
            let mut all_pass = true;
            for i in 0..=imax {
                for j in 0..=jmax {
                    for t in 0..=tmax {
                        let s = spectral(i, j, t)?;
                        let o = pt_oracle(&chain, i, j, t);
                        let diff = (s - o).abs();
                        all_pass &= diff <= tol;
                        rows.push(vec![
                            i.to_string(),
                            j.to_string(),
                            t.to_string(),
                            fmt_f64(s),
                            fmt_f64(o),
                            fmt_f64(diff),
                        ]);
                    }
                }
            }
            write_csv(
                &out.join("pt.csv"),
                &["i", "j", "t", "p_spectral", "p_oracle", "abs_diff"],
                &rows,
            )?;
            Ok(all_pass)
        }

        Command::Gf {
            chain,
            out,
            z,
            i,
            j,
        } => {
            let (_, chain) = load_chain(&chain)?;
            if chain.bandwidth() != 1 {
                return Err(CliError::Config(
                    "gf requires a tridiagonal chain; use contour-pt or report for banded ones"
                        .into(),
                ));
            }
            ensure_out(&out)?;
            let z_values: Vec<Complex64> = if z.is_empty() {
                vec![Complex64::new(2.0, 0.0)]
            } else {
                z.iter()
                    .map(|s| parse_complex(s).map_err(CliError::Config))
                    .collect::<Result<_, _>>()?
            };
            // a deep Gauss rule stands in for the limit measure; the
            // approximation error at |z| > 1.5 is far below output precision
            let sys = OrthoPolySystem::from_chain(&chain, 80)?;
            let psi = psi_n(&sys, 64)?;
            let mut rows = Vec::new();
            for &zv in &z_values {
                let g = generating_function_discrete(&sys, &psi, i, j, zv)?;
                rows.push(vec![
                    fmt_f64(zv.re),
                    fmt_f64(zv.im),
                    fmt_f64(g.re),
                    fmt_f64(g.im),
                ]);
            }
            write_csv(
                &out.join("gf.csv"),
                &["re_z", "im_z", "re_g", "im_g"],
                &rows,
            )?;
            Ok(true)
        }

        Command::RhCheck { out, n } => {
            ensure_out(&out)?;
            let sys = kmspec_core::orthopoly::chebyshev_system(n.max(8) + 4);
            let arcsine = arcsine_measure();
            let eps = [1e-3, 1e-4, 1e-5];
            let points = [-0.8, -0.4, 0.1, 0.45, 0.85];
            let mut all_pass = true;

            let mut rows = Vec::new();
            for idx in 0..=n {
                for &x in &points {
                    let r = check_jump(idx, &arcsine, &sys, x, &eps)?;
                    all_pass &= r <= 1e-6;
                    rows.push(vec![idx.to_string(), fmt_f64(x), fmt_f64(r)]);
                }
            }
            write_csv(&out.join("jump.csv"), &["n", "x", "residual"], &rows)?;

            let radii = [4.0, 8.0, 16.0];
            let mut rows = Vec::new();
            for idx in 0..=n {
                let zs: Vec<Complex64> = radii
                    .iter()
                    .map(|&r| Complex64::new(0.8 * r, 0.6 * r))
                    .collect();
                let devs = check_asymptotics(idx, &arcsine, &sys, &zs)?;
                let slope = loglog_slope(&radii, &devs);
                all_pass &= (slope + 1.0).abs() <= 0.2;
                for (r, d) in radii.iter().zip(&devs) {
                    rows.push(vec![
                        idx.to_string(),
                        fmt_f64(*r),
                        fmt_f64(*d),
                        fmt_f64(slope),
                    ]);
                }
            }
            write_csv(
                &out.join("asymptotics.csv"),
                &["n", "radius", "deviation", "slope"],
                &rows,
            )?;

            let z_values = [
                Complex64::new(2.0, 0.0),
                Complex64::new(1.5, 0.8),
                Complex64::new(0.0, 3.0),
            ];
            let mut rows = Vec::new();
            for idx in 0..=n {
                for &zv in &z_values {
                    let a = gf_from_rh(idx, &arcsine, &sys, zv)?;
                    let b = kmspec_core::kernel::generating_function(&sys, &arcsine, 0, idx, zv)?;
                    let diff = (a - b).norm();
                    all_pass &= diff <= 1e-6;
                    rows.push(vec![
                        idx.to_string(),
                        fmt_f64(zv.re),
                        fmt_f64(zv.im),
                        fmt_f64(diff),
                    ]);
                }
            }
            write_csv(
                &out.join("gf_rh.csv"),
                &["n", "re_z", "im_z", "abs_diff"],
                &rows,
            )?;
            Ok(all_pass)
        }

        Command::ContourPt {
            out,
            tmax,
            imax,
            tol,
        } => {
            ensure_out(&out)?;
            let chain = kmspec_core::chain::pentadiagonal_chebyshev();
            let mut totals = Vec::new();
            let mut pieces_rows = Vec::new();
            let mut all_pass = true;
            for i in 0..=imax {
                for j in 0..=imax {
                    for t in 0..=tmax {
                        let (total, parts) = contour_pt_pieces(i, j, t)?;
                        let oracle = pt_oracle(&chain, i, j, t);
                        let diff = (total - oracle).abs();
                        all_pass &= diff <= tol;
                        for (side, value) in &parts {
                            pieces_rows.push(vec![
                                i.to_string(),
                                j.to_string(),
                                t.to_string(),
                                side_name(*side).to_string(),
                                fmt_f64(*value),
                            ]);
                        }
                        totals.push(vec![
                            i.to_string(),
                            j.to_string(),
                            t.to_string(),
                            fmt_f64(total),
                            fmt_f64(oracle),
                            fmt_f64(diff),
                        ]);
                    }
                }
            }
            write_csv(
                &out.join("contour_pt.csv"),
                &["i", "j", "t", "total", "oracle", "abs_diff"],
                &totals,
            )?;
            write_csv(
                &out.join("contour_pieces.csv"),
                &["i", "j", "t", "side", "value"],
                &pieces_rows,
            )?;
            Ok(all_pass)
        }

        Command::Mc {
            chain,
            out,
            seed,
            trials,
            tmax,
        } => {
            let (_, chain) = load_chain(&chain)?;
            ensure_out(&out)?;
            let rows_by_t = simulate_trajectory(&chain, tmax, trials, seed);
            let mut rows = Vec::new();
            for row in &rows_by_t {
                for est in row {
                    let oracle = pt_oracle(&chain, 0, est.state, est.t);
                    let dev = (est.estimate - oracle).abs();
                    let z_score = if est.std_error > 0.0 {
                        dev / est.std_error
                    } else {
                        0.0
                    };
                    let flag = dev > 4.0 * est.std_error;
                    rows.push(vec![
                        est.t.to_string(),
                        est.state.to_string(),
                        fmt_f64(est.estimate),
                        fmt_f64(est.std_error),
                        fmt_f64(oracle),
                        fmt_f64(z_score),
                        flag.to_string(),
                    ]);
                }
            }
            write_csv(
                &out.join("mc.csv"),
                &[
                    "t",
                    "state",
                    "estimate",
                    "std_error",
                    "oracle",
                    "z_score",
                    "flagged",
                ],
                &rows,
            )?;
            let meta = serde_json::json!({
                "algorithm": RNG_ALGORITHM,
                "seed": seed,
                "trials": trials,
                "block_size": BLOCK_SIZE,
                "t_max": tmax,
            });
            std::fs::write(
                out.join("mc_meta.json"),
                serde_json::to_string_pretty(&meta)?,
            )?;
            Ok(true)
        }

        Command::Report {
            out,
            seed,
            trials,
            skip_mc,
        } => {
            ensure_out(&out)?;
            let results = report::run_all(ReportOptions {
                seed,
                trials,
                skip_mc,
            });
            for r in &results {
                r.print_line();
            }
            let all_pass = results.iter().all(|r| r.pass);
            std::fs::write(
                out.join("summary.json"),
                serde_json::to_string_pretty(&results)?,
            )?;
            println!(
                "{} of {} checks passed",
                results.iter().filter(|r| r.pass).count(),
                results.len()
            );
            Ok(all_pass)
        }
    }
}
