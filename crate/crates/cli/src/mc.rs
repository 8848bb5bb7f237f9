//! Deterministic Monte Carlo validation of the transition kernel.
//!
//! Trials run in fixed-size blocks; each block draws from its own
//! SplitMix64 stream seeded by a mix of the run seed and the block index,
//! and blocks are merged in index order. The output is therefore a pure
//! function of `(chain, t_max, trials, seed)` regardless of scheduling,
//! and bit-identical across platforms.

use kmspec_core::chain::BandedChain;

/// RNG identifier recorded in output metadata.
pub const RNG_ALGORITHM: &str = "splitmix64/blocked-v1";

/// Trials per seeding block.
pub const BLOCK_SIZE: u64 = 65_536;

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, one mixing round
/// per output.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Stream seed for one block: one extra mixing round separates the streams.
pub fn block_seed(seed: u64, block: u64) -> u64 {
    SplitMix64::new(seed ^ block.wrapping_mul(0xA3EC_6475_9359_3ACD)).next_u64()
}

/// Empirical estimate of `p_t(0, state)`.
#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub state: usize,
    pub t: usize,
    pub estimate: f64,
    pub std_error: f64,
    pub trials: u64,
}

/// Empirical distribution of the walk started at 0, recorded after every
/// step up to `t_max`. `result[t][j]` estimates `p_t(0, j)`;
/// states run over `0 ..= m * t_max`.
pub fn simulate_trajectory(
    chain: &BandedChain,
    t_max: usize,
    trials: u64,
    seed: u64,
) -> Vec<Vec<McEstimate>> {
    assert!(trials >= 1);
    let m = chain.bandwidth();
    let n_states = m * t_max + 1;

    // materialize cumulative rows once; the sampler walks the cdf
    let rows: Vec<Vec<f64>> = (0..n_states)
        .map(|i| {
            let mut acc = 0.0;
            chain
                .row(i)
                .iter()
                .map(|p| {
                    acc += p;
                    acc
                })
                .collect()
        })
        .collect();

    let mut counts = vec![vec![0u64; n_states]; t_max + 1];
    counts[0][0] = trials;

    let blocks = trials.div_ceil(BLOCK_SIZE);
    for block in 0..blocks {
        let lo = block * BLOCK_SIZE;
        let hi = (lo + BLOCK_SIZE).min(trials);
        let mut rng = SplitMix64::new(block_seed(seed, block));
        for _ in lo..hi {
            let mut state = 0usize;
            for row in counts.iter_mut().take(t_max + 1).skip(1) {
                let u = rng.next_f64();
                let cdf = &rows[state];
                let mut d = 0usize;
                while d + 1 < cdf.len() && u >= cdf[d] {
                    d += 1;
                }
                state = (state + d).saturating_sub(m);
                row[state] += 1;
            }
        }
    }

    counts
        .into_iter()
        .enumerate()
        .map(|(t, row)| {
            row.into_iter()
                .enumerate()
                .map(|(state, c)| {
                    let p = c as f64 / trials as f64;
                    McEstimate {
                        state,
                        t,
                        estimate: p,
                        std_error: (p * (1.0 - p) / trials as f64).sqrt(),
                        trials,
                    }
                })
                .collect()
        })
        .collect()
}

/// Distribution at a single time `t`.
pub fn simulate(chain: &BandedChain, t: usize, trials: u64, seed: u64) -> Vec<McEstimate> {
    simulate_trajectory(chain, t, trials, seed)
        .pop()
        .expect("t_max row present")
}

#[cfg(test)]
mod tests {
    use super::*;
    use kmspec_core::chain::{chebyshev_chain, pentadiagonal_chebyshev};
    use kmspec_core::kernel::pt_oracle;

    #[test]
    fn time_zero_concentrates_at_origin() {
        let est = simulate(&chebyshev_chain(), 0, 1000, 7);
        assert_eq!(est[0].estimate, 1.0);
        assert_eq!(est[0].std_error, 0.0);
    }

    #[test]
    fn reflector_moves_surely_to_state_one() {
        let est = simulate(&chebyshev_chain(), 1, 5000, 42);
        assert_eq!(est[1].estimate, 1.0);
    }

    #[test]
    fn pentadiagonal_two_steps_near_quarter() {
        let est = simulate(&pentadiagonal_chebyshev(), 2, 200_000, 3);
        let oracle = pt_oracle(&pentadiagonal_chebyshev(), 0, 0, 2);
        assert!((oracle - 0.25).abs() < 1e-15);
        let dev = (est[0].estimate - oracle).abs();
        assert!(
            dev <= 4.0 * est[0].std_error,
            "dev {dev} vs 4se {}",
            4.0 * est[0].std_error
        );
    }

    #[test]
    fn identical_seeds_reproduce_identical_estimates() {
        let a = simulate_trajectory(&pentadiagonal_chebyshev(), 6, 50_000, 99);
        let b = simulate_trajectory(&pentadiagonal_chebyshev(), 6, 50_000, 99);
        assert_eq!(a, b);
        let c = simulate_trajectory(&pentadiagonal_chebyshev(), 6, 50_000, 100);
        assert_ne!(a, c, "different seeds should differ somewhere");
    }

    #[test]
    fn trajectory_rows_are_probability_vectors() {
        let rows = simulate_trajectory(&pentadiagonal_chebyshev(), 8, 10_000, 5);
        for (t, row) in rows.iter().enumerate() {
            let total: f64 = row.iter().map(|e| e.estimate).sum();
            assert!((total - 1.0).abs() < 1e-12, "t={t} mass {total}");
        }
    }

    #[test]
    fn parity_states_stay_empty_for_the_reflecting_walk() {
        // chebyshev walk alternates parity; odd t puts zero mass on even states
        let rows = simulate_trajectory(&chebyshev_chain(), 5, 20_000, 11);
        for t in 0..=5usize {
            for e in &rows[t] {
                if (e.state + t) % 2 == 1 {
                    assert_eq!(e.estimate, 0.0, "t={t} state={}", e.state);
                }
            }
        }
    }
}
