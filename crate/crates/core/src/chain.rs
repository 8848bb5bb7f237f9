//! Banded reversible Markov operators on the half-line `{0, 1, 2, ...}`.
//!
//! A chain is described by its bandwidth `m` and a row generator mapping a
//! state `i` to the `2m + 1` transition probabilities
//! `P(i, i-m), ..., P(i, i+m)` (entries aimed at negative states are zero).
//! The infinite operator is never materialized: every computation runs on a
//! finite truncation whose size is chosen from the band-locality bound
//! `N > max(i, j) + m * t`, which makes truncated matrix powers exact.

use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // f64 math via libm when built without std
use num_traits::Float;

use crate::linalg::Matrix;
use crate::{Error, Result};

/// Absolute tolerance for row stochasticity.
const ROW_SUM_TOL: f64 = 1e-14;
/// Absolute tolerance for the detailed-balance audit.
const DETAILED_BALANCE_TOL: f64 = 1e-10;
/// Rows validated eagerly at construction time.
const VALIDATED_PREFIX: usize = 64;

type RowFn = dyn Fn(usize) -> Vec<f64> + Send + Sync;

/// A reversible transition operator with bandwidth `m`, generated row-wise.
///
/// Immutable after construction; cloning shares the row generator.
#[derive(Clone)]
pub struct BandedChain {
    bandwidth: usize,
    row: Arc<RowFn>,
}

impl core::fmt::Debug for BandedChain {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("BandedChain")
            .field("bandwidth", &self.bandwidth)
            .finish_non_exhaustive()
    }
}

impl BandedChain {
    /// Wrap a row generator. The first 64 rows are validated: correct
    /// length, nonnegative entries, no mass on negative states, and row sum
    /// within 1e-14 of 1.
    pub fn new<F>(bandwidth: usize, row: F) -> Result<Self>
    where
        F: Fn(usize) -> Vec<f64> + Send + Sync + 'static,
    {
        assert!(bandwidth >= 1, "bandwidth must be positive");
        let chain = BandedChain {
            bandwidth,
            row: Arc::new(row),
        };
        chain.validate_rows(VALIDATED_PREFIX)?;
        Ok(chain)
    }

    /// Build from explicit leading rows plus a tail row repeated for every
    /// state beyond those listed. All rows are in band coordinates
    /// (`2m + 1` entries, `P(i, i-m) ... P(i, i+m)`).
    pub fn from_rows(bandwidth: usize, rows: Vec<Vec<f64>>, tail_row: Vec<f64>) -> Result<Self> {
        let width = 2 * bandwidth + 1;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != width {
                return Err(Error::InvalidChain {
                    state: i,
                    detail: format!("expected {width} entries, got {}", r.len()),
                });
            }
        }
        if tail_row.len() != width {
            return Err(Error::InvalidChain {
                state: rows.len(),
                detail: format!("tail row: expected {width} entries, got {}", tail_row.len()),
            });
        }
        let head = rows.len();
        BandedChain::new(bandwidth, move |i| {
            if i < head {
                rows[i].clone()
            } else {
                tail_row.clone()
            }
        })
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    /// Transition row for state `i` in band coordinates.
    pub fn row(&self, i: usize) -> Vec<f64> {
        (self.row)(i)
    }

    /// `P(i, j)`; zero outside the band and for negative targets.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        let m = self.bandwidth as isize;
        let d = j as isize - i as isize + m;
        if d < 0 || d > 2 * m {
            return 0.0;
        }
        self.row(i)[d as usize]
    }

    /// Check rows `0..n` against the stochasticity invariants.
    pub fn validate_rows(&self, n: usize) -> Result<()> {
        let width = 2 * self.bandwidth + 1;
        for i in 0..n {
            let r = self.row(i);
            if r.len() != width {
                return Err(Error::InvalidChain {
                    state: i,
                    detail: format!("expected {width} entries, got {}", r.len()),
                });
            }
            let mut sum = 0.0;
            for (d, &v) in r.iter().enumerate() {
                if v < 0.0 || !v.is_finite() {
                    return Err(Error::InvalidChain {
                        state: i,
                        detail: format!("entry {d} is {v}"),
                    });
                }
                if i + d < self.bandwidth && v != 0.0 {
                    return Err(Error::InvalidChain {
                        state: i,
                        detail: "positive mass on a negative state".to_string(),
                    });
                }
                sum += v;
            }
            if (sum - 1.0).abs() > ROW_SUM_TOL {
                return Err(Error::InvalidChain {
                    state: i,
                    detail: format!("row sums to {sum}"),
                });
            }
        }
        Ok(())
    }
}

/// Nearest-neighbor chain given by forward probabilities `p_k` and backward
/// probabilities `q_k` (`q_0` unused); the holding probability at `k` is
/// `1 - p_k - q_k`. The last listed value of each sequence repeats for all
/// larger states.
#[derive(Debug, Clone)]
pub struct BirthDeathChain {
    p: Vec<f64>,
    q: Vec<f64>,
}

impl BirthDeathChain {
    pub fn new(p: Vec<f64>, q: Vec<f64>) -> Result<Self> {
        if p.is_empty() || q.is_empty() {
            return Err(Error::InvalidChain {
                state: 0,
                detail: "p and q must be non-empty".to_string(),
            });
        }
        let chain = BirthDeathChain { p, q };
        for k in 0..VALIDATED_PREFIX {
            let (p, q) = (chain.p(k), chain.q(k));
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::InvalidChain {
                    state: k,
                    detail: format!("p_{k} = {p} outside (0, 1]"),
                });
            }
            if k > 0 && !(q > 0.0 && q <= 1.0) {
                return Err(Error::InvalidChain {
                    state: k,
                    detail: format!("q_{k} = {q} outside (0, 1]"),
                });
            }
            let budget = if k == 0 { p } else { p + q };
            if budget > 1.0 + ROW_SUM_TOL {
                return Err(Error::InvalidChain {
                    state: k,
                    detail: format!("p_{k} + q_{k} = {budget} exceeds 1"),
                });
            }
        }
        Ok(chain)
    }

    pub fn p(&self, k: usize) -> f64 {
        *self.p.get(k).unwrap_or_else(|| self.p.last().unwrap())
    }

    pub fn q(&self, k: usize) -> f64 {
        if k == 0 {
            return 0.0;
        }
        *self.q.get(k).unwrap_or_else(|| self.q.last().unwrap())
    }

    pub fn to_banded(&self) -> BandedChain {
        let c = self.clone();
        BandedChain::new(1, move |i| {
            let q = c.q(i);
            let p = c.p(i);
            vec![q, 1.0 - p - q, p]
        })
        .expect("validated birth-death data")
    }
}

/// Reversibility weights `pi_0 = 1, pi_1, ...` satisfying detailed balance
/// `pi_i P(i, j) = pi_j P(j, i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReversibleWeights {
    pi: Vec<f64>,
}

impl ReversibleWeights {
    pub fn get(&self, j: usize) -> f64 {
        self.pi[j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.pi
    }

    pub fn len(&self) -> usize {
        self.pi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pi.is_empty()
    }
}

/// Reversibility weights on `0..n` by spanning-tree propagation with a full
/// edge-consistency audit.
///
/// Propagates `pi_j = pi_i P(i, j) / P(j, i)` over a breadth-first tree of
/// two-sided positive edges, then checks every band edge against detailed
/// balance with absolute tolerance 1e-10.
pub fn pi_weights(chain: &BandedChain, n: usize) -> Result<ReversibleWeights> {
    assert!(n >= 1);
    let m = chain.bandwidth();
    let rows: Vec<Vec<f64>> = (0..n).map(|i| chain.row(i)).collect();
    let entry = |i: usize, j: usize| -> f64 {
        let d = j as isize - i as isize + m as isize;
        if d < 0 || d as usize > 2 * m {
            0.0
        } else {
            rows[i][d as usize]
        }
    };

    let mut pi = vec![f64::NAN; n];
    pi[0] = 1.0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let i = queue[head];
        head += 1;
        let lo = i.saturating_sub(m);
        let hi = (i + m).min(n - 1);
        for j in lo..=hi {
            if j == i || !pi[j].is_nan() {
                continue;
            }
            let fwd = entry(i, j);
            let back = entry(j, i);
            if fwd > 0.0 && back > 0.0 {
                pi[j] = pi[i] * fwd / back;
                queue.push(j);
            }
        }
    }

    for (j, w) in pi.iter().enumerate() {
        if w.is_nan() {
            // Distinguish a genuinely disconnected graph from a one-sided
            // (irreversible) edge into the unreached region.
            for i in 0..n {
                if pi[i].is_nan() {
                    continue;
                }
                let lo = i.saturating_sub(m);
                let hi = (i + m).min(n - 1);
                for k in lo..=hi {
                    if pi[k].is_nan() && (entry(i, k) > 0.0 || entry(k, i) > 0.0) {
                        return Err(Error::NotReversible {
                            residual: entry(i, k).max(entry(k, i)),
                        });
                    }
                }
            }
            return Err(Error::ZeroProbabilityEdge { state: j });
        }
    }

    // Audit all edges, not just the spanning tree.
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..(i + m + 1).min(n) {
            let r = (pi[i] * entry(i, j) - pi[j] * entry(j, i)).abs();
            worst = worst.max(r);
        }
    }
    if worst > DETAILED_BALANCE_TOL {
        return Err(Error::NotReversible { residual: worst });
    }
    Ok(ReversibleWeights { pi })
}

/// Restriction of the operator to the first `n` coordinates. Rows need not
/// sum to 1: mass escaping past state `n - 1` is dropped.
pub fn truncate(chain: &BandedChain, n: usize) -> Matrix {
    assert!(n >= 1);
    let m = chain.bandwidth();
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        let row = chain.row(i);
        for (d, &v) in row.iter().enumerate() {
            let j = i as isize + d as isize - m as isize;
            if j >= 0 && (j as usize) < n && v != 0.0 {
                out.set(i, j as usize, v);
            }
        }
    }
    out
}

/// `D A_n D^-1` with `D = diag(sqrt(pi_0), ..., sqrt(pi_{n-1}))`: a symmetric
/// matrix with the same spectrum as the truncation `A_n`.
pub fn symmetrize(chain: &BandedChain, n: usize) -> Result<Matrix> {
    let pi = pi_weights(chain, n)?;
    let a = truncate(chain, n);
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = a.get(i, j);
            if v != 0.0 {
                out.set(i, j, v * (pi.get(i) / pi.get(j)).sqrt());
            }
        }
    }
    Ok(out)
}

/// Simple random walk reflecting at the origin: `P(0, 1) = 1`,
/// `P(k, k±1) = 1/2`. Its eigenvector polynomials are the Chebyshev
/// polynomials of the first kind.
pub fn chebyshev_chain() -> BandedChain {
    BandedChain::from_rows(1, vec![vec![0.0, 0.0, 1.0]], vec![0.5, 0.0, 0.5])
        .expect("static rows are stochastic")
}

/// Random walk reflecting at the origin with equiprobable jumps of sizes one
/// and two (a pentadiagonal operator).
pub fn pentadiagonal_chebyshev() -> BandedChain {
    BandedChain::from_rows(
        2,
        vec![
            vec![0.0, 0.0, 0.0, 0.5, 0.5],
            vec![0.0, 0.25, 0.25, 0.25, 0.25],
        ],
        vec![0.25, 0.25, 0.0, 0.25, 0.25],
    )
    .expect("static rows are stochastic")
}

/// Deterministic pseudo-random reversible banded chain with dyadic entries.
///
/// Built from symmetric integer conductances `c(i, j)` on band edges with a
/// per-state dyadic normalizer (64 or 128), so every transition probability
/// is an exact dyadic rational and detailed balance holds exactly with
/// `pi_i` proportional to the normalizer. States at index `>= 8` share one
/// tail conductance pattern, so the chain is eventually periodic.
pub fn random_reversible_banded(m: usize, seed: u64) -> BandedChain {
    assert!((1..=3).contains(&m), "supported bandwidths are 1..=3");
    const HEAD: usize = 8;
    let mut state = seed;
    let mut next = move || -> u64 {
        // SplitMix64
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };

    // conductance of the edge (i, i + d), d = 1..=m
    let mut cond = vec![vec![0u64; m]; HEAD];
    for row in cond.iter_mut() {
        for (d, c) in row.iter_mut().enumerate() {
            // keep nearest-neighbor edges positive so the chain is irreducible
            let lo = if d == 0 { 1 } else { 0 };
            *c = lo + next() % 8;
        }
    }
    let tail_cond: Vec<u64> = (0..m)
        .map(|d| if d == 0 { 1 + next() % 8 } else { next() % 8 })
        .collect();
    // per-state dyadic normalizer; max incident conductance sum is 6*8 = 48
    let mut norm = [0u64; HEAD];
    for v in norm.iter_mut() {
        *v = if next() % 2 == 0 { 64 } else { 128 };
    }
    let tail_norm = 64u64;

    let edge = move |i: usize, d: usize| -> u64 {
        if i < HEAD {
            cond[i][d - 1]
        } else {
            tail_cond[d - 1]
        }
    };
    let normalizer = move |i: usize| -> u64 {
        if i < HEAD {
            norm[i]
        } else {
            tail_norm
        }
    };

    BandedChain::new(m, move |i| {
        let c = normalizer(i) as f64;
        let mut row = vec![0.0; 2 * m + 1];
        let mut used = 0u64;
        for d in 1..=m {
            if i >= d {
                let w = edge(i - d, d);
                row[m - d] = w as f64 / c;
                used += w;
            }
            let w = edge(i, d);
            row[m + d] = w as f64 / c;
            used += w;
        }
        // self-loop absorbs the remaining mass
        row[m] = (normalizer(i) - used) as f64 / c;
        row
    })
    .expect("conductance rows are stochastic by construction")
}
