//! Exact rational arithmetic for moment computations.
//!
//! Transition probabilities in the worked examples are dyadic rationals,
//! which `f64` represents exactly; converting them to `BigRational` and
//! running the truncated matrix recursions in exact arithmetic removes all
//! tolerance questions from moment-level checks. Intended for moment orders
//! up to about 16; beyond that the floating-point paths take over.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::chain::BandedChain;
use crate::{Error, Result};

/// Exact conversion: every finite `f64` is a rational number.
pub fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite probability")
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("rational in f64 range")
}

/// Rows `0..n` of the truncation, as exact rationals in band coordinates
/// resolved to absolute columns.
fn truncation_rows(chain: &BandedChain, n: usize) -> Vec<Vec<(usize, BigRational)>> {
    let m = chain.bandwidth();
    (0..n)
        .map(|i| {
            let row = chain.row(i);
            let mut out = Vec::new();
            for (d, &v) in row.iter().enumerate() {
                let j = i as isize + d as isize - m as isize;
                if j >= 0 && (j as usize) < n && v != 0.0 {
                    out.push((j as usize, rational_from_f64(v)));
                }
            }
            out
        })
        .collect()
}

/// Exact moments `m_k = (e_0, P^k e_0)` for `k = 0..=k_max`, computed on the
/// band-locality truncation `N = m * k_max + 2`.
pub fn moments_exact(chain: &BandedChain, k_max: usize) -> Vec<BigRational> {
    let n = chain.bandwidth() * k_max + 2;
    let rows = truncation_rows(chain, n);
    let mut u = vec![BigRational::zero(); n];
    u[0] = BigRational::one();
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(u[0].clone());
    for _ in 0..k_max {
        // u <- u P  (row vector update)
        let mut next = vec![BigRational::zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, pij) in &rows[i] {
                next[*j] += ui * pij;
            }
        }
        u = next;
        out.push(u[0].clone());
    }
    out
}

/// Exact `p_t(i, j)` on the band-locality truncation.
pub fn pt_exact(chain: &BandedChain, i: usize, j: usize, t: usize) -> BigRational {
    let n = i.max(j) + chain.bandwidth() * t + 1;
    let rows = truncation_rows(chain, n);
    let mut u = vec![BigRational::zero(); n];
    u[i] = BigRational::one();
    for _ in 0..t {
        let mut next = vec![BigRational::zero(); n];
        for (r, ur) in u.iter().enumerate() {
            if ur.is_zero() {
                continue;
            }
            for (c, prc) in &rows[r] {
                next[*c] += ur * prc;
            }
        }
        u = next;
    }
    u[j].clone()
}

/// Jacobi coefficients `(a_j, b_j^2)` from exact moments via the LDL^T
/// factorization of the Hankel matrix `H[i][j] = m[i+j]` — square-root free,
/// so everything stays rational.
///
/// Needs `moments.len() >= 2n`. Fails with `IllConditioned` when a pivot
/// ratio `b_j^2` is non-positive (measure supported on fewer than `n`
/// points).
pub fn jacobi_from_moments_exact(
    moments: &[BigRational],
    n: usize,
) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
    assert!(n >= 1);
    assert!(moments.len() >= 2 * n, "need moments m_0..m_{}", 2 * n - 1);

    // Unit lower-triangular L (rows 0..=n, row n only to column n-1) and
    // diagonal D of H = L D L^T.
    let mut l = vec![vec![BigRational::zero(); n]; n + 1];
    let mut d = vec![BigRational::zero(); n];
    for i in 0..=n {
        let jmax = i.min(n - 1).min(if i == n { n - 1 } else { i });
        for j in 0..=jmax {
            if j == i {
                // D_i = m_{2i} - sum_{k<i} L[i][k]^2 D_k
                let mut acc = moments[2 * i].clone();
                for k in 0..i {
                    acc -= l[i][k].clone() * &l[i][k] * &d[k];
                }
                d[i] = acc;
                if i >= 1 {
                    // b_{i-1}^2 = D_i / D_{i-1} must stay positive
                    if d[i].is_zero() || d[i].is_negative() || d[i - 1].is_zero() {
                        return Err(Error::IllConditioned { index: i - 1 });
                    }
                }
            } else {
                // L[i][j] = (m_{i+j} - sum_{k<j} L[i][k] L[j][k] D_k) / D_j
                let mut acc = moments[i + j].clone();
                for k in 0..j {
                    acc -= l[i][k].clone() * &l[j][k] * &d[k];
                }
                if d[j].is_zero() {
                    return Err(Error::IllConditioned { index: j });
                }
                l[i][j] = acc / &d[j];
            }
        }
    }

    // a_j = L[j+1][j] - L[j][j-1];  b_j^2 = D_{j+1} / D_j
    let mut a = Vec::with_capacity(n);
    let mut b_sq = Vec::with_capacity(n.saturating_sub(1));
    for j in 0..n {
        let prev = if j == 0 {
            BigRational::zero()
        } else {
            l[j][j - 1].clone()
        };
        a.push(l[j + 1][j].clone() - prev);
        if j + 1 < n {
            let ratio = d[j + 1].clone() / &d[j];
            if ratio.is_negative() || ratio.to_f64().unwrap_or(0.0) <= 1e-12 {
                return Err(Error::IllConditioned { index: j });
            }
            b_sq.push(ratio);
        }
    }
    Ok((a, b_sq))
}

/// Exact polynomial coefficient recurrence for a birth-death system:
/// `Q_{k+1} = (lambda Q_k - q_k Q_{k-1} - r_k Q_k) / p_k` acting on
/// coefficient vectors in the monomial basis.
pub fn q_coefficients_exact(p: &[f64], q: &[f64], r: &[f64], j: usize) -> Vec<BigRational> {
    let mut prev: Vec<BigRational> = vec![BigRational::one()]; // Q_0
    if j == 0 {
        return prev;
    }
    let shift_minus = |c: &[BigRational],
                       qk: &BigRational,
                       rk: &BigRational,
                       pk: &BigRational,
                       prev: &[BigRational]|
     -> Vec<BigRational> {
        // (lambda * c - rk * c - qk * prev) / pk
        let mut out = vec![BigRational::zero(); c.len() + 1];
        for (idx, ci) in c.iter().enumerate() {
            out[idx + 1] += ci;
            out[idx] -= rk * ci;
        }
        for (idx, pi) in prev.iter().enumerate() {
            out[idx] -= qk * pi;
        }
        for v in &mut out {
            *v /= pk;
        }
        out
    };

    let to_rat = |x: f64| rational_from_f64(x);
    // k = 0 row: lambda Q_0 = r_0 Q_0 + p_0 Q_1
    let mut cur = shift_minus(
        &prev,
        &BigRational::zero(),
        &to_rat(r[0]),
        &to_rat(p[0]),
        &[],
    );
    for k in 1..j {
        let next = shift_minus(&cur, &to_rat(q[k]), &to_rat(r[k]), &to_rat(p[k]), &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Shortest exact decimal-free rendering: `numer/denom`.
pub fn rational_parts(x: &BigRational) -> (BigInt, BigInt) {
    (x.numer().clone(), x.denom().clone())
}
