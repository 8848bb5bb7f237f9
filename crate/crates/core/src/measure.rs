//! Spectral measures: discrete Gauss approximants, closed-form limit
//! densities, and the two-sided contour measure of the pentadiagonal walk.
//!
//! The finite approximant `psi_n` puts mass `1 / sum_{k<n} pi_k Q_k(x)^2`
//! at each zero `x` of `Q_n`; it integrates polynomials of degree up to
//! `2n - 1` exactly against the limit measure (Gauss quadrature). Density
//! measures carry their support intervals together with the endpoints where
//! the density blows up like an inverse square root, which is what the
//! quadrature layer needs to substitute away.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // f64 math via libm when built without std
use num_traits::Float;

use crate::orthopoly::OrthoPolySystem;
use crate::quad::{self, QuadBudget, QuadValue};
use crate::{Error, Result};

/// Default absolute tolerance for density-measure quadrature.
pub const QUAD_TOL: f64 = 1e-11;

/// Purely atomic measure with strictly increasing nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl DiscreteMeasure {
    pub fn new(nodes: Vec<f64>, weights: Vec<f64>) -> Self {
        assert_eq!(nodes.len(), weights.len());
        assert!(!nodes.is_empty());
        for w in nodes.windows(2) {
            assert!(w[0] < w[1], "nodes must be strictly increasing");
        }
        assert!(weights.iter().all(|&w| w > 0.0), "weights must be positive");
        DiscreteMeasure { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn integrate<T: QuadValue>(&self, f: impl Fn(f64) -> T) -> T {
        let mut acc = T::zero();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc = acc.add(f(*x).scale(*w));
        }
        acc
    }

    /// `Integral(s^k dpsi)`.
    pub fn moment(&self, k: usize) -> f64 {
        self.integrate(|x| x.powi(k as i32))
    }

    /// `(1 / 2 pi i) Integral( f(s) / (s - z) dpsi(s) )`.
    pub fn cauchy(&self, f: impl Fn(f64) -> f64, z: Complex64) -> Result<Complex64> {
        let two_pi_i = Complex64::new(0.0, 2.0 * PI);
        let mut acc = Complex64::new(0.0, 0.0);
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let d = Complex64::new(*x, 0.0) - z;
            if d.norm() < 1e-12 {
                return Err(Error::PoleOnSupport);
            }
            acc += f(*x) * w / d;
        }
        Ok(acc / two_pi_i)
    }
}

/// Gauss approximant `psi_n`: atoms at the zeros of `Q_n`, weights from the
/// Christoffel sum.
pub fn psi_n(sys: &OrthoPolySystem, n: usize) -> Result<DiscreteMeasure> {
    let roots = sys.roots_qn(n)?;
    let weights: Vec<f64> = roots
        .iter()
        .map(|&x| 1.0 / sys.christoffel_sum(n, x))
        .collect();
    Ok(DiscreteMeasure::new(roots, weights))
}

type DensityFn = dyn Fn(f64) -> f64 + Send + Sync;

/// Absolutely continuous measure on a union of closed intervals, with a
/// list of endpoints where the density has an inverse-square-root blow-up.
#[derive(Clone)]
pub struct DensityMeasure {
    pieces: Vec<(f64, f64)>,
    density: Arc<DensityFn>,
    singular: Vec<f64>,
}

impl core::fmt::Debug for DensityMeasure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("DensityMeasure")
            .field("pieces", &self.pieces)
            .field("singular", &self.singular)
            .finish_non_exhaustive()
    }
}

impl DensityMeasure {
    pub fn new(pieces: Vec<(f64, f64)>, density: Arc<DensityFn>, singular: Vec<f64>) -> Self {
        assert!(!pieces.is_empty());
        for &(a, b) in &pieces {
            assert!(a < b);
        }
        DensityMeasure {
            pieces,
            density,
            singular,
        }
    }

    pub fn support(&self) -> &[(f64, f64)] {
        &self.pieces
    }

    pub fn singular_points(&self) -> &[f64] {
        &self.singular
    }

    pub fn density_at(&self, x: f64) -> f64 {
        (self.density)(x)
    }

    fn is_singular(&self, x: f64) -> bool {
        self.singular.iter().any(|&s| (s - x).abs() < 1e-13)
    }

    /// Euclidean distance from `z` to the support.
    pub fn support_distance(&self, z: Complex64) -> f64 {
        let mut best = f64::INFINITY;
        for &(a, b) in &self.pieces {
            let dx = if z.re < a {
                a - z.re
            } else if z.re > b {
                z.re - b
            } else {
                0.0
            };
            best = best.min(dx.hypot(z.im));
        }
        best
    }

    /// `Integral( f(s) w(s) ds )` over the support, with endpoint
    /// substitutions at every flagged singular endpoint.
    pub fn integrate<T: QuadValue>(&self, f: &dyn Fn(f64) -> T, tol: f64) -> Result<T> {
        let density = &*self.density;
        self.integrate_raw(&|x| f(x).scale(density(x)), tol)
    }

    /// Same interval/substitution handling, but without the density factor:
    /// integrates `f` itself over the support. Used when the caller has
    /// already folded the weight into `f` (e.g. pole subtraction).
    pub fn integrate_raw<T: QuadValue>(&self, f: &dyn Fn(f64) -> T, tol: f64) -> Result<T> {
        let mut budget = QuadBudget::standard();
        let per_piece = tol / self.pieces.len() as f64;
        let mut acc = T::zero();
        for &(a, b) in &self.pieces {
            let mut g = |x: f64| f(x);
            let v = quad::integrate_endpoint_aware(
                &mut g,
                a,
                b,
                self.is_singular(a),
                self.is_singular(b),
                per_piece,
                &mut budget,
            )?;
            acc = acc.add(v);
        }
        Ok(acc)
    }

    pub fn mass(&self) -> Result<f64> {
        self.moment(0)
    }

    pub fn moment(&self, k: usize) -> Result<f64> {
        self.integrate(&|x: f64| x.powi(k as i32), QUAD_TOL)
    }

    /// `(1 / 2 pi i) Integral( f(s) w(s) / (s - z) ds )`.
    ///
    /// Near the support (distance below 0.05) the pole is subtracted
    /// analytically on the piece closest to `Re z`, so boundary values can
    /// be computed at distances down to 1e-12; closer than that is
    /// `PoleOnSupport`.
    pub fn cauchy(&self, f: &dyn Fn(f64) -> f64, z: Complex64) -> Result<Complex64> {
        let dist = self.support_distance(z);
        if dist < 1e-12 {
            return Err(Error::PoleOnSupport);
        }
        let two_pi_i = Complex64::new(0.0, 2.0 * PI);
        let density = &*self.density;
        let mut budget = QuadBudget::standard();
        let per_piece = QUAD_TOL / self.pieces.len() as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for &(a, b) in &self.pieces {
            let len = b - a;
            let margin = 0.02 * len;
            let subtract =
                dist < 0.05 && z.re > a + margin && z.re < b - margin && z.im.abs() < 0.05;
            let sing_a = self.is_singular(a);
            let sing_b = self.is_singular(b);
            let v = if subtract {
                let x0 = z.re;
                let g0 = f(x0) * density(x0);
                let mut g = |x: f64| {
                    Complex64::new(f(x) * density(x) - g0, 0.0) / (Complex64::new(x, 0.0) - z)
                };
                let main = quad::integrate_endpoint_aware(
                    &mut g,
                    a,
                    b,
                    sing_a,
                    sing_b,
                    per_piece,
                    &mut budget,
                )?;
                // closed form for the subtracted pole term
                let log_term = ((Complex64::new(b, 0.0) - z) / (Complex64::new(a, 0.0) - z)).ln();
                main + log_term * g0
            } else {
                let mut g =
                    |x: f64| Complex64::new(f(x) * density(x), 0.0) / (Complex64::new(x, 0.0) - z);
                quad::integrate_endpoint_aware(
                    &mut g,
                    a,
                    b,
                    sing_a,
                    sing_b,
                    per_piece,
                    &mut budget,
                )?
            };
            acc += v;
        }
        Ok(acc / two_pi_i)
    }
}

/// The arcsine law `1 / (pi sqrt(1 - s^2))` on `[-1, 1]`: weak limit of the
/// reflecting simple walk's `psi_n`.
pub fn arcsine_measure() -> DensityMeasure {
    DensityMeasure::new(
        vec![(-1.0, 1.0)],
        Arc::new(|s: f64| {
            let d = 1.0 - s * s;
            1.0 / (PI * d.sqrt())
        }),
        vec![-1.0, 1.0],
    )
}

const PENTA_EDGE: f64 = -9.0 / 16.0;

fn penta_branch_density(s: f64, shift: f64) -> f64 {
    // 1 / (2 pi sqrt(s + 9/16)) / sqrt(1 - (sqrt(s + 9/16) + shift)^2)
    let u = (s - PENTA_EDGE).sqrt();
    let d = 1.0 - (u + shift) * (u + shift);
    1.0 / (2.0 * PI * u * d.sqrt())
}

/// Spectral density of the pentadiagonal walk on `[-9/16, 1]`, projected to
/// the real line: the `(sqrt(.) - 1/4)` branch lives on all of the support,
/// the `(sqrt(.) + 1/4)` branch adds on `[-9/16, 0)`.
pub fn pentadiagonal_measure() -> DensityMeasure {
    DensityMeasure::new(
        vec![(PENTA_EDGE, 0.0), (0.0, 1.0)],
        Arc::new(|s: f64| {
            let mut w = penta_branch_density(s, -0.25);
            if s < 0.0 {
                w += penta_branch_density(s, 0.25);
            }
            w
        }),
        vec![PENTA_EDGE, 0.0, 1.0],
    )
}

/// Which solution branch a contour piece carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
    /// The `[0, 1]` segment, traversed on the real line; integrands use the
    /// plus branch there.
    Real,
}

/// One tagged interval of the two-sided contour.
#[derive(Clone)]
pub struct ContourPiece {
    pub interval: (f64, f64),
    pub side: Side,
    density: Arc<DensityFn>,
    singular: (bool, bool),
}

impl ContourPiece {
    pub fn density_at(&self, x: f64) -> f64 {
        (self.density)(x)
    }

    pub fn integrate<T: QuadValue>(&self, f: &dyn Fn(f64) -> T, tol: f64) -> Result<T> {
        let mut budget = QuadBudget::standard();
        let density = &*self.density;
        let mut g = |x: f64| f(x).scale(density(x));
        quad::integrate_endpoint_aware(
            &mut g,
            self.interval.0,
            self.interval.1,
            self.singular.0,
            self.singular.1,
            tol,
            &mut budget,
        )
    }
}

impl core::fmt::Debug for ContourPiece {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ContourPiece")
            .field("interval", &self.interval)
            .field("side", &self.side)
            .finish_non_exhaustive()
    }
}

/// Spectral measure supported on the upper and lower edges of
/// `[-9/16, 0)` plus the real segment `[0, 1]`, carrying distinct solution
/// branches per side. Summing the piece densities pointwise recovers
/// [`pentadiagonal_measure`].
#[derive(Debug, Clone)]
pub struct TwoSidedContourMeasure {
    pieces: Vec<ContourPiece>,
}

impl TwoSidedContourMeasure {
    pub fn pieces(&self) -> &[ContourPiece] {
        &self.pieces
    }

    /// Integrate a side-aware integrand over every piece; returns the
    /// per-piece values in piece order.
    pub fn integrate_pieces<T: QuadValue>(
        &self,
        f: &dyn Fn(Side, f64) -> T,
        tol: f64,
    ) -> Result<Vec<T>> {
        let per_piece = tol / self.pieces.len() as f64;
        self.pieces
            .iter()
            .map(|p| {
                let side = p.side;
                p.integrate(&|x| f(side, x), per_piece)
            })
            .collect()
    }

    pub fn integrate<T: QuadValue>(&self, f: &dyn Fn(Side, f64) -> T, tol: f64) -> Result<T> {
        let parts = self.integrate_pieces(f, tol)?;
        Ok(parts.into_iter().fold(T::zero(), |acc, v| acc.add(v)))
    }

    pub fn total_mass(&self) -> Result<f64> {
        self.moment(0)
    }

    pub fn moment(&self, k: usize) -> Result<f64> {
        self.integrate(&|_, x: f64| x.powi(k as i32), QUAD_TOL)
    }
}

/// The two-sided contour measure of the pentadiagonal walk: the minus side
/// of `[-9/16, 0)` carries the `(sqrt(.) + 1/4)` density, the plus side and
/// `[0, 1]` carry the `(sqrt(.) - 1/4)` density.
pub fn two_sided_measure() -> TwoSidedContourMeasure {
    TwoSidedContourMeasure {
        pieces: vec![
            ContourPiece {
                interval: (PENTA_EDGE, 0.0),
                side: Side::Minus,
                density: Arc::new(|s: f64| penta_branch_density(s, 0.25)),
                singular: (true, true),
            },
            ContourPiece {
                interval: (PENTA_EDGE, 0.0),
                side: Side::Plus,
                density: Arc::new(|s: f64| penta_branch_density(s, -0.25)),
                singular: (true, false),
            },
            ContourPiece {
                interval: (0.0, 1.0),
                side: Side::Real,
                density: Arc::new(|s: f64| penta_branch_density(s, -0.25)),
                singular: (false, true),
            },
        ],
    }
}

/// Maximum moment deviation `max_{k <= k_max} |m_k(psi_n) - m_k(limit)|`
/// for each `n` in `n_list`. Zero (to rounding) once `2n - 1 >= k_max`.
pub fn weak_limit_check(
    sys: &OrthoPolySystem,
    n_list: &[usize],
    limit: &DensityMeasure,
    k_max: usize,
) -> Result<Vec<f64>> {
    let limit_moments: Vec<f64> = (0..=k_max)
        .map(|k| limit.moment(k))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let psi = psi_n(sys, n)?;
        let dev = (0..=k_max)
            .map(|k| (psi.moment(k) - limit_moments[k]).abs())
            .fold(0.0, f64::max);
        out.push(dev);
    }
    Ok(out)
}
