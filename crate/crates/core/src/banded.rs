//! Eigenvector machinery for `2m + 1`-diagonal operators and the two-sided
//! contour diagonalization of the pentadiagonal walk.
//!
//! For bandwidth `m > 1` the eigenvector recurrence `lambda q = P q` no
//! longer determines `q` from `Q_0` alone: the general solution is
//! `q = q_0 + mu_1 q_1 + ... + mu_{m-1} q_{m-1}` over the vector solution
//! family with Kronecker initial data. For the pentadiagonal walk
//! `P = s(P_ch)` with `s(x) = x^2 + x/2 - 1/2`, the admissible values of
//! `mu_1 = Q_1` are the two roots `mu_(+-)(lambda)` of `s(x) = lambda`;
//! both are admissible on `(-9/16, 0)` (geometric multiplicity two), which
//! is what forces the spectral measure onto a two-sided contour.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // f64 math via libm when built without std
use num_traits::Float;

use crate::chain::{pentadiagonal_chebyshev, pi_weights, truncate, BandedChain};
use crate::linalg::Matrix;
use crate::measure::{two_sided_measure, Side};
use crate::{Error, Result};

/// Left edge of the pentadiagonal spectrum: `s(-1/4) = -9/16`.
pub const SPECTRUM_EDGE: f64 = -9.0 / 16.0;

/// The composition polynomial: `s(x) = x^2 + x/2 - 1/2 = (x + 1/4)^2 - 9/16`.
pub fn s_poly(x: f64) -> f64 {
    x * x + 0.5 * x - 0.5
}

/// Zhukovskiy map `z -> (z + 1/z) / 2`.
pub fn zhukovskiy(z: Complex64) -> Complex64 {
    (z + z.inv()) * 0.5
}

/// Solutions of the eigenvector recurrence with prescribed leading values.
///
/// Column `j` solves `lambda q = P q` on rows `0 .. n - m - 1` with initial
/// data `Q_{r,j} = delta_{rj}`, `r < m`.
#[derive(Debug, Clone)]
pub struct VectorSolutionFamily {
    bandwidth: usize,
    values: Vec<Vec<f64>>,
}

impl VectorSolutionFamily {
    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `Q_{i, j}(lambda)`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i][j]
    }

    /// Combine columns with coefficients `(1, mu_1, ..., mu_{m-1})`.
    pub fn combine(&self, mu: &[f64]) -> Vec<f64> {
        assert_eq!(mu.len() + 1, self.bandwidth);
        self.values
            .iter()
            .map(|row| row[0] + row[1..].iter().zip(mu).map(|(v, c)| v * c).sum::<f64>())
            .collect()
    }
}

/// Forward recurrence for one solution with prescribed first `m` values:
/// row `k` of `lambda q = P q` is solved for `Q_{k+m}`.
fn forward_solution(chain: &BandedChain, lambda: f64, init: &[f64], n: usize) -> Result<Vec<f64>> {
    let m = chain.bandwidth();
    assert_eq!(init.len(), m);
    let mut q = Vec::with_capacity(n);
    q.extend_from_slice(init);
    while q.len() < n {
        let k = q.len() - m; // row being consumed
        let row = chain.row(k);
        let lead = row[2 * m];
        if lead == 0.0 {
            return Err(Error::SingularLeadingBand { state: k });
        }
        let mut acc = lambda * q[k];
        for (d, &p) in row.iter().enumerate().take(2 * m) {
            if p == 0.0 {
                continue;
            }
            let target = k as isize + d as isize - m as isize;
            if target >= 0 {
                acc -= p * q[target as usize];
            }
        }
        q.push(acc / lead);
    }
    q.truncate(n);
    Ok(q)
}

/// Vector solution family `Q_{i,j}(lambda)`, `i < n`, `j < m`.
pub fn vector_solutions(
    chain: &BandedChain,
    lambda: f64,
    n: usize,
) -> Result<VectorSolutionFamily> {
    let m = chain.bandwidth();
    assert!(n >= m);
    let mut columns = Vec::with_capacity(m);
    for j in 0..m {
        let mut init = vec![0.0; m];
        init[j] = 1.0;
        columns.push(forward_solution(chain, lambda, &init, n)?);
    }
    let values = (0..n)
        .map(|i| columns.iter().map(|c| c[i]).collect())
        .collect();
    Ok(VectorSolutionFamily {
        bandwidth: m,
        values,
    })
}

/// Determinant of the `m x m` matrix `[Q_{n+r, j}(lambda)]`; its zeros are
/// the eigenvalues of the `n x n` truncation.
pub fn spectrum_det(chain: &BandedChain, n: usize, lambda: f64) -> Result<f64> {
    let m = chain.bandwidth();
    let family = vector_solutions(chain, lambda, n + m)?;
    let mut cells = vec![0.0; m * m];
    for r in 0..m {
        for j in 0..m {
            cells[r * m + j] = family.get(n + r, j);
        }
    }
    Ok(small_det(&mut cells, m))
}

/// Same determinant with every column scaled by the norm of the full
/// solution column (rows `0 .. n+m`), which keeps magnitudes comparable
/// across `lambda` without destroying zeros: the solution columns never
/// vanish identically (their leading entry is 1), while the determinant
/// rows may.
pub fn spectrum_det_normalized(chain: &BandedChain, n: usize, lambda: f64) -> Result<f64> {
    let m = chain.bandwidth();
    let family = vector_solutions(chain, lambda, n + m)?;
    let mut cells = vec![0.0; m * m];
    let mut scale = 1.0;
    for j in 0..m {
        let norm = (0..(n + m))
            .map(|i| family.get(i, j).powi(2))
            .sum::<f64>()
            .sqrt();
        scale *= norm;
        for r in 0..m {
            cells[r * m + j] = family.get(n + r, j);
        }
    }
    Ok(small_det(&mut cells, m) / scale)
}

fn small_det(cells: &mut [f64], m: usize) -> f64 {
    // Gaussian elimination with partial pivoting; m <= 3 in practice.
    let mut det = 1.0;
    for col in 0..m {
        let mut pivot = col;
        for r in (col + 1)..m {
            if cells[r * m + col].abs() > cells[pivot * m + col].abs() {
                pivot = r;
            }
        }
        if cells[pivot * m + col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for c in 0..m {
                cells.swap(col * m + c, pivot * m + c);
            }
            det = -det;
        }
        det *= cells[col * m + col];
        for r in (col + 1)..m {
            let f = cells[r * m + col] / cells[col * m + col];
            for c in col..m {
                cells[r * m + c] -= f * cells[col * m + c];
            }
        }
    }
    det
}

/// Max absolute entry difference between `s(truncate(P_ch, N))` and
/// `truncate(P_penta, N)` over rows `0 .. N-3` (the last two rows feel the
/// truncation boundary). Zero exactly in dyadic arithmetic.
pub fn s_compose_check(n: usize) -> f64 {
    assert!(n >= 5);
    let a = truncate(&crate::chain::chebyshev_chain(), n);
    let composed = a
        .mul(&a)
        .add(&a.scale(0.5))
        .sub(&Matrix::identity(n).scale(0.5));
    let penta = truncate(&pentadiagonal_chebyshev(), n);
    let mut worst = 0.0f64;
    for i in 0..(n - 2) {
        for j in 0..n {
            worst = worst.max((composed.get(i, j) - penta.get(i, j)).abs());
        }
    }
    worst
}

/// The two roots of `s(x) = lambda`:
/// `mu_(+-) = (-1 +- sqrt(9 + 16 lambda)) / 4`.
pub fn mu_branches(lambda: f64) -> Result<(f64, f64)> {
    let disc = 9.0 + 16.0 * lambda;
    if disc < 0.0 {
        return Err(Error::OutsideDomain { value: lambda });
    }
    let root = disc.sqrt();
    Ok(((-1.0 + root) / 4.0, (-1.0 - root) / 4.0))
}

/// Branch selector for `Q_1 = mu(lambda)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn from_side(side: Side) -> Branch {
        match side {
            Side::Minus => Branch::Minus,
            Side::Plus | Side::Real => Branch::Plus,
        }
    }
}

/// Pentadiagonal solution `Q_0, ..., Q_{n-1}` with `Q_0 = 1`,
/// `Q_1 = mu_branch(lambda)`.
pub fn q_with_branch(lambda: f64, branch: Branch, n: usize) -> Result<Vec<f64>> {
    if !(SPECTRUM_EDGE..=1.0 + 1e-12).contains(&lambda) {
        return Err(Error::OutsideDomain { value: lambda });
    }
    let (plus, minus) = mu_branches(lambda)?;
    let mu = match branch {
        Branch::Plus => plus,
        Branch::Minus => minus,
    };
    forward_solution(&pentadiagonal_chebyshev(), lambda, &[1.0, mu], n)
}

/// Contour diagonalization of the pentadiagonal walk:
/// `p_t(i, j) = pi_j sum_pieces Integral(lambda^t Q_i Q_j dpsi_piece)` with
/// the branch of `Q` selected by the piece's side. Returns the per-piece
/// contributions in piece order together with the total.
pub fn contour_pt_pieces(i: usize, j: usize, t: usize) -> Result<(f64, Vec<(Side, f64)>)> {
    let measure = two_sided_measure();
    let chain = pentadiagonal_chebyshev();
    let pi = pi_weights(&chain, j + 1)?;
    let nmax = i.max(j) + 1;
    let parts = measure.integrate_pieces(
        &|side, lambda: f64| {
            let q = q_with_branch(lambda, Branch::from_side(side), nmax)
                .expect("contour support lies in the spectrum");
            lambda.powi(t as i32) * q[i] * q[j]
        },
        1e-9,
    )?;
    let tagged: Vec<(Side, f64)> = measure
        .pieces()
        .iter()
        .map(|p| p.side)
        .zip(parts.iter().map(|v| pi.get(j) * v))
        .collect();
    let total = tagged.iter().map(|(_, v)| v).sum();
    Ok((total, tagged))
}

/// Total of [`contour_pt_pieces`].
pub fn contour_pt(i: usize, j: usize, t: usize) -> Result<f64> {
    Ok(contour_pt_pieces(i, j, t)?.0)
}

/// Diagnostic evaluation of the closed-form branch function
/// `mu_1(z) = -1/4 + z^{1/2} exp{ (1/2) Integral_{-9/16}^0 ds/(s - z) }`
/// with the `0 <= arg z < 2 pi` logarithm branch.
#[derive(Debug, Clone, Copy)]
pub struct MuProbe {
    pub value: Complex64,
    /// `|value - mu_+(Re z)|` when `Re z` lies in the cut `[-9/16, 0]`.
    pub deviation_plus: Option<f64>,
    /// `|value - mu_-(Re z)|` on the cut.
    pub deviation_minus: Option<f64>,
}

/// Evaluate the diagnostic probe. This is measurement apparatus only: the
/// contour pipeline selects branches through [`mu_branches`], never through
/// this closed form (whose branch bookkeeping does not reproduce the
/// radicals near the cut; the deviations below record by how much).
pub fn mu_analytic_probe(z: Complex64) -> MuProbe {
    // log with argument in [0, 2 pi)
    let ln0 = |w: Complex64| -> Complex64 {
        let mut arg = w.arg();
        if arg < 0.0 {
            arg += 2.0 * core::f64::consts::PI;
        }
        Complex64::new(w.norm().ln(), arg)
    };
    let exponent = (ln0(z) + ln0(-z) - ln0(Complex64::new(SPECTRUM_EDGE, 0.0) - z)) * 0.5;
    let value = Complex64::new(-0.25, 0.0) + exponent.exp();

    let (mut dev_plus, mut dev_minus) = (None, None);
    if (SPECTRUM_EDGE..=0.0).contains(&z.re) {
        if let Ok((plus, minus)) = mu_branches(z.re) {
            dev_plus = Some((value - Complex64::new(plus, 0.0)).norm());
            dev_minus = Some((value - Complex64::new(minus, 0.0)).norm());
        }
    }
    MuProbe {
        value,
        deviation_plus: dev_plus,
        deviation_minus: dev_minus,
    }
}
