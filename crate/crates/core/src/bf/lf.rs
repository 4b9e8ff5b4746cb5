//! Delay-handling decode loop.
//!
//! Per pass: collect one flipping signal per unsatisfied check (to the
//! member with the smallest weighted flip function), then decide flips in
//! two substeps. Substep (a) tentatively flips every bit over the signal
//! threshold and commits only if that zeroes the syndrome outright; the
//! trial is evaluated through the syndrome delta and rolled back otherwise.
//! Substep (b) flips unreliable qualifiers immediately but makes reliable
//! ones (magnitude above the preprocessing threshold) accumulate delay
//! credit across passes before they may flip.

use super::{BfDecoder, LfParams, RelaxRule, ScoreRule};
use crate::complexity::FrameStats;

impl BfDecoder<'_> {
    pub(super) fn run_lf(&mut self, p: LfParams) -> (bool, u32, FrameStats) {
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
                // Preprocess: the floor(beta4 N)-th smallest magnitude is the
                // reliability threshold, frozen for the whole decode.
                let k_sel = ((p.beta4 * n as f64).floor() as usize).clamp(1, n);
                self.order.clear();
                self.order.extend(0..n as u32);
                let mags = &self.y_abs;
                self.order.select_nth_unstable_by(k_sel - 1, |&x, &y| {
                    mags[x as usize].partial_cmp(&mags[y as usize]).unwrap()
                });
                let threshold = self.y_abs[self.order[k_sel - 1] as usize];
                for i in 0..n {
                    self.reliable[i] = self.y_abs[i] > threshold;
                    self.a[i] = 0;
                }
                let preprocess =
                    n as f64 * (2.0 * d_c as f64 - 1.0 + (k_sel as f64).log2());
                self.init_scores(
                    ScoreRule::Weighted { alpha1: p.alpha1, beta1: p.beta1 },
                    preprocess,
                    &mut stats,
                );
            } else {
                self.refresh_pending(&mut stats);
            }

            // Collect flipping signals: argmin of f over each unsatisfied
            // check, ties to the lowest index.
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
                    if f[i as usize] < f[target] {
                        target = i as usize;
                    }
                }
                self.b[target] += 1;
                stats.additions += (row.len() - 1) as f64;
            }

            // Substep (a): qualifiers flip as a block only if that settles
            // every check at once.
            self.flips.clear();
            for i in 0..n {
                if self.b[i] >= p.alpha2 {
                    self.flips.push(i as u32);
                }
            }
            if !self.flips.is_empty() {
                self.apply_flips();
                if self.unsat == 0 {
                    stats.flip_bits += self.flips.len() as u64;
                    stats.iters = (iters + 1) as u64;
                    return (true, iters + 1, stats);
                }
                self.apply_flips(); // roll the trial back
            }

            // Substep (b): unreliable qualifiers are listed; reliable ones
            // earn delay credit and join once it reaches the threshold.
            self.order.clear();
            for t in 0..self.flips.len() {
                let i = self.flips[t] as usize;
                if self.reliable[i] {
                    self.a[i] += 1;
                } else {
                    self.order.push(i as u32);
                }
            }
            for t in 0..self.flips.len() {
                let i = self.flips[t] as usize;
                if self.reliable[i] && u32::from(self.a[i]) >= p.alpha3 {
                    self.order.push(i as u32);
                }
            }

            if self.order.is_empty() {
                // Relax the governing threshold by one for this pass.
                match p.relax {
                    RelaxRule::FlipShortfall if p.alpha2 >= 2 => {
                        let thr = p.alpha2 - 1;
                        for i in 0..n {
                            if self.b[i] == thr {
                                self.order.push(i as u32);
                            }
                        }
                    }
                    RelaxRule::DelayShortfall if p.alpha3 >= 2 => {
                        let thr = (p.alpha3 - 1) as u8;
                        for i in 0..n {
                            if self.a[i] == thr {
                                self.order.push(i as u32);
                            }
                        }
                    }
                    _ => {}
                }
            }
            if self.order.is_empty() {
                stats.iters = (iters + 1) as u64;
                return (false, iters + 1, stats);
            }

            // Flip and reset matured delay counters.
            for t in 0..self.flips.len() {
                let i = self.flips[t] as usize;
                if self.reliable[i] && u32::from(self.a[i]) >= p.alpha3 {
                    self.a[i] = 0;
                }
            }
            std::mem::swap(&mut self.flips, &mut self.order);
            stats.flip_bits += self.flips.len() as u64;
            self.apply_flips();
            iters += 1;
        }
    }
}
