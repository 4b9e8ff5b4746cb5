//! Multi-bit decode loops: quotient-rule, positive-score, and
//! signal-threshold selection.

use super::{BfDecoder, LzParams, ScoreRule, WzParams};
use crate::complexity::FrameStats;

/// Flip-set size of the quotient rule: unsatisfied checks over the column
/// weight, floored, and clamped to at least one flip while any check fails.
pub(super) fn quotient_flip_count(unsat: u32, d_v: usize, n: usize) -> usize {
    ((unsat as usize / d_v.max(1)).max(1)).min(n)
}

impl BfDecoder<'_> {
    pub(super) fn run_nt(&mut self) -> (bool, u32, FrameStats) {
        let n = self.h.n_cols();
        let d_c = self.h.d_c();
        let d_v = self.h.d_v();
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
                self.init_scores(ScoreRule::Plain, (n * (2 * d_c - 3)) as f64, &mut stats);
            } else {
                self.refresh_pending(&mut stats);
            }

            let lambda = quotient_flip_count(self.unsat, d_v, n);
            self.order.clear();
            self.order.extend(0..n as u32);
            let f = self.scores.values();
            if lambda < n {
                self.order.select_nth_unstable_by(lambda - 1, |&x, &y| {
                    f[x as usize].partial_cmp(&f[y as usize]).unwrap().then(x.cmp(&y))
                });
            }
            self.flips.clear();
            self.flips.extend_from_slice(&self.order[..lambda]);
            // Partial selection of the lambda smallest scores.
            stats.additions += n as f64 * (lambda as f64).log2();
            stats.flip_bits += lambda as u64;
            self.apply_flips();
            iters += 1;
        }
    }

    pub(super) fn run_lz(&mut self, p: LzParams) -> (bool, u32, FrameStats) {
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
                self.init_scores(
                    ScoreRule::MinDiff { beta: p.beta2 },
                    (n * (d_c - 1)) as f64,
                    &mut stats,
                );
            } else {
                self.refresh_pending(&mut stats);
            }

            // Flip everything with a positive flip function; no selection
            // cost. An empty set cannot progress: declared failure.
            self.flips.clear();
            let f = self.scores.values();
            for i in 0..n {
                if f[i] > 0.0 {
                    self.flips.push(i as u32);
                }
            }
            if self.flips.is_empty() {
                stats.iters = (iters + 1) as u64;
                return (false, iters + 1, stats);
            }
            stats.flip_bits += self.flips.len() as u64;
            self.apply_flips();
            iters += 1;
        }
    }

    pub(super) fn run_wz(&mut self, p: WzParams) -> (bool, u32, FrameStats) {
        let n = self.h.n_cols();
        let m = self.h.n_rows();
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
                self.init_scores(
                    ScoreRule::MinExcl { beta: p.beta3 },
                    (n * (d_c - 1)) as f64,
                    &mut stats,
                );
            } else {
                self.refresh_pending(&mut stats);
            }

            // Each unsatisfied check issues one flipping signal to its least
            // reliable member: the largest flip function, ties to the lowest
            // index.
            self.b.fill(0);
            stats.unsat_checks += self.unsat as u64;
            let f = self.scores.values();
            for k in 0..m {
                if self.s[k] == 0 {
                    continue;
                }
                let row = self.h.checks_row(k);
                let mut target = row[0] as usize;
                for &i in &row[1..] {
                    if f[i as usize] > f[target] {
                        target = i as usize;
                    }
                }
                self.b[target] += 1;
                stats.additions += (row.len() - 1) as f64;
            }

            self.flips.clear();
            for i in 0..n {
                if self.b[i] >= p.alpha2 {
                    self.flips.push(i as u32);
                }
            }
            if self.flips.is_empty() {
                stats.iters = (iters + 1) as u64;
                return (false, iters + 1, stats);
            }
            stats.flip_bits += self.flips.len() as u64;
            self.apply_flips();
            iters += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_rule_values() {
        assert_eq!(quotient_flip_count(64, 32, 1023), 2);
        // Floor lands at zero; clamp keeps the decoder moving.
        assert_eq!(quotient_flip_count(31, 32, 1023), 1);
        assert_eq!(quotient_flip_count(1, 4, 15), 1);
        assert_eq!(quotient_flip_count(12, 4, 15), 3);
    }
}
