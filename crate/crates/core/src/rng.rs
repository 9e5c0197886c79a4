//! Reproducible integer streams.
//!
//! The generator is fixed by its recurrence rather than by a library so that
//! matrices can be regenerated bit-for-bit from `(master seed, trial)` in any
//! language:
//!
//! ```text
//! x0  = master + trial * 0x9E3779B97F4A7C15            (wrapping)
//! x  ^= x >> 12;  x ^= x << 25;  x ^= x >> 27           (xorshift)
//! out = x * 0x2545F4914F6CDD1D                          (wrapping)
//! v   = lo + floor(out * (hi - lo + 1) / 2^64)          (high bits of out)
//! ```
//!
//! A zero start state would be a fixed point of xorshift, so it is replaced
//! by the output multiplier. The golden-ratio constant itself would not do:
//! it is the start state of trial 1 under master 0.

use crate::matrix::Matrix;
use crate::scalar::Scalar;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
const MULTIPLIER: u64 = 0x2545_F491_4F6C_DD1D;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedStream {
    state: u64,
}

impl SeedStream {
    /// The stream used by trial `trial` of a campaign seeded with `master`.
    pub fn for_trial(master: u64, trial: u64) -> Self {
        let x0 = master.wrapping_add(trial.wrapping_mul(GOLDEN));
        SeedStream {
            state: if x0 == 0 { MULTIPLIER } else { x0 },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(MULTIPLIER)
    }

    /// Uniform integer in `lo..=hi`. Panics if `lo > hi`.
    pub fn next_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        let span = (hi as i128 - lo as i128 + 1) as u128;
        let offset = (self.next_u64() as u128 * span) >> 64;
        (lo as i128 + offset as i128) as i64
    }

    /// Uniform index in `0..n`. Panics if `n == 0`.
    pub fn next_below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        self.next_in(0, n as i64 - 1) as usize
    }

    /// Row-major integer matrix with entries in `lo..=hi`.
    pub fn matrix(&mut self, rows: usize, cols: usize, lo: i64, hi: i64) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| Scalar::from(self.next_in(lo, hi)))
    }

    /// A uniformly chosen ordered subset of `N_n` of size `k`.
    pub fn subset(&mut self, n: usize, k: usize) -> Vec<usize> {
        assert!(k <= n);
        let mut pool: Vec<usize> = (1..=n).collect();
        // partial Fisher-Yates
        for a in 0..k {
            let b = a + self.next_below(n - a);
            pool.swap(a, b);
        }
        let mut chosen = pool[..k].to_vec();
        chosen.sort_unstable();
        chosen
    }
}
