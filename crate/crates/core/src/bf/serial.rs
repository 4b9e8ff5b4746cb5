//! Serial decode loops: one flip per iteration.

use super::{BfDecoder, ScoreRule};
use crate::complexity::FrameStats;

impl BfDecoder<'_> {
    /// Shared loop for the two serial variants. Each pass flips the single
    /// bit with the smallest flip function (ties to the lowest index).
    /// With `loop_detect`, states already visited are skipped by falling
    /// through to the next-smallest candidate, up to d_c attempts, after
    /// which the decode is a declared failure.
    pub(super) fn run_serial(
        &mut self,
        loop_detect: bool,
        rule: ScoreRule,
    ) -> (bool, u32, FrameStats) {
        let n = self.h.n_cols();
        let d_c = self.h.d_c();
        let mut stats = FrameStats::default();
        let mut iters = 0u32;
        loop {
            if self.unsat == 0 {
                stats.iters = iters as u64;
                return (true, iters, stats);
            }
            if iters == self.i_max {
                stats.iters = iters as u64;
                return (false, iters, stats);
            }
            if iters == 0 {
                // Per-check min/max scans, plus the weighting pass for the
                // weighted rule.
                let preprocess = match rule {
                    ScoreRule::Weighted { .. } => (n * (2 * d_c - 2)) as f64,
                    _ => (n * (2 * d_c - 3)) as f64,
                };
                self.init_scores(rule, preprocess, &mut stats);
                if loop_detect {
                    self.visited.clear();
                    self.visited.insert(self.c_hat.clone());
                }
            } else {
                self.refresh_pending(&mut stats);
            }

            stats.additions += (n - 1) as f64;
            let chosen = if loop_detect {
                self.pick_unvisited(d_c.min(n))
            } else {
                Some(argmin_by_value(self.scores.values()))
            };
            let Some(bit) = chosen else {
                // Every candidate leads back into a visited state.
                stats.iters = (iters + 1) as u64;
                return (false, iters + 1, stats);
            };

            self.flips.clear();
            self.flips.push(bit as u32);
            stats.flip_bits += 1;
            self.apply_flips();
            if loop_detect {
                self.visited.insert(self.c_hat.clone());
            }
            iters += 1;
        }
    }

    /// Candidates in ascending (f, index) order; the first whose resulting
    /// state has not been visited wins. At most `cap` attempts.
    fn pick_unvisited(&mut self, cap: usize) -> Option<usize> {
        let n = self.h.n_cols();
        self.order.clear();
        self.order.extend(0..n as u32);
        let f = self.scores.values();
        self.order.sort_unstable_by(|&x, &y| {
            f[x as usize].partial_cmp(&f[y as usize]).unwrap().then(x.cmp(&y))
        });
        for t in 0..cap {
            let cand = self.order[t] as usize;
            self.c_hat[cand] ^= 1;
            let seen = self.visited.contains(&self.c_hat);
            self.c_hat[cand] ^= 1;
            if !seen {
                return Some(cand);
            }
        }
        None
    }
}

/// Index of the smallest value, ties to the lowest index.
pub(super) fn argmin_by_value(values: &[f64]) -> usize {
    let mut best = 0usize;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v < values[best] {
            best = i;
        }
    }
    best
}
