//! Bit-flipping decoder family.
//!
//! Six variants over a common core. Serial decoders flip one bit per
//! iteration; multi-bit decoders flip a set:
//!
//! - `Lp`: serial, plain reliability-difference flip function.
//! - `Sz`: serial, weighted flip function, with loop detection to escape
//!   decoding traps.
//! - `Nt`: flips roughly (unsatisfied checks / column weight) bits with the
//!   smallest plain flip function per iteration.
//! - `Lz`: flips every bit whose signed-minimum flip function is positive.
//! - `Wz`: unsatisfied checks issue flipping signals; bits over a signal
//!   threshold flip together.
//! - `Lf`: weighted flip function plus signal thresholds, a reliability
//!   preprocessing pass, and delay handling that defers flips of
//!   high-magnitude bits until evidence accumulates.
//!
//! A decoder owns its workspace: one instance per concurrently decoded
//! frame, sharing the immutable parity-check matrix.

mod lf;
mod multi;
mod score;
mod serial;

pub use score::{FlipScores, ScoreRule};

use crate::channel::ReceivedFrame;
use crate::codes::SparseParityCheck;
use crate::complexity::{FrameStats, SchemeKind};
use std::collections::HashSet;
use thiserror::Error;

/// Parameter validation errors.
#[derive(Debug, Error, PartialEq)]
pub enum BfError {
    #[error("invalid decoder parameter: {0}")]
    InvalidParam(String),
}

/// Parameters of the serial weighted decoder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SzParams {
    /// Integer weight cutoff of the term weighting.
    pub alpha1: u32,
    /// Reliability magnitude cutoff.
    pub beta1: f64,
}

/// Parameter of the positive-flip-function decoder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LzParams {
    /// Weight on the bit's own magnitude.
    pub beta2: f64,
}

/// Parameters of the signal-counting decoder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WzParams {
    /// Flipping-signal threshold.
    pub alpha2: u32,
    /// Weight on the bit's own magnitude.
    pub beta3: f64,
}

/// Fallback applied when delay handling leaves an empty to-be-flipped list.
///
/// The two readings differ in which counter the relaxed threshold compares:
/// the per-iteration flipping signals b, or the accumulated delay counters a.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RelaxRule {
    /// Flip bits whose signal count is exactly one short of the flipping
    /// threshold.
    #[default]
    FlipShortfall,
    /// Flip bits whose delay counter is exactly one short of the delay
    /// threshold.
    DelayShortfall,
}

/// Parameters of the delay-handling decoder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LfParams {
    /// Integer weight cutoff of the term weighting.
    pub alpha1: u32,
    /// Flipping-signal threshold.
    pub alpha2: u32,
    /// Delay-handling threshold.
    pub alpha3: u32,
    /// Reliability magnitude cutoff feeding the term weights.
    pub beta1: f64,
    /// Fraction of the block marked unreliable during preprocessing.
    pub beta4: f64,
    /// Empty-list fallback reading.
    pub relax: RelaxRule,
}

impl LfParams {
    pub fn new(alpha1: u32, alpha2: u32, alpha3: u32, beta1: f64, beta4: f64) -> Self {
        Self { alpha1, alpha2, alpha3, beta1, beta4, relax: RelaxRule::default() }
    }
}

/// Decoder variant selector with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BfVariant {
    Lp,
    Sz(SzParams),
    Nt,
    Lz(LzParams),
    Wz(WzParams),
    Lf(LfParams),
}

impl BfVariant {
    /// Short scheme name used in ledgers and CSV output.
    pub fn name(&self) -> &'static str {
        match self {
            BfVariant::Lp => "lp-wbf",
            BfVariant::Sz(_) => "sz-wbf",
            BfVariant::Nt => "nt-wbf",
            BfVariant::Lz(_) => "lz-wbf",
            BfVariant::Wz(_) => "wz-wbf",
            BfVariant::Lf(_) => "lf-wbf",
        }
    }

    /// Scheme selector for the closed-form complexity estimates.
    pub fn scheme_kind(&self) -> SchemeKind {
        match self {
            BfVariant::Lp => SchemeKind::LpWbf,
            BfVariant::Sz(_) => SchemeKind::SzWbf,
            BfVariant::Nt => SchemeKind::NtWbf,
            BfVariant::Lz(_) => SchemeKind::LzWbf,
            BfVariant::Wz(_) => SchemeKind::WzWbf,
            BfVariant::Lf(p) => SchemeKind::LfWbf { beta4: p.beta4 },
        }
    }

    /// True for the one-flip-per-iteration variants.
    pub fn is_serial(&self) -> bool {
        matches!(self, BfVariant::Lp | BfVariant::Sz(_))
    }
}

/// Result of one bit-flipping decode.
#[derive(Debug, Clone, PartialEq)]
pub struct BfOutcome {
    /// Final hard decision.
    pub c_hat: Vec<u8>,
    /// True iff the final syndrome is zero.
    pub converged: bool,
    /// Flip passes executed (0 when the input already satisfied all checks).
    pub iters_used: u32,
    /// Complexity counters for this frame.
    pub stats: FrameStats,
}

/// One term of the plain flip function: the bit's magnitude corrected by
/// half the check's minimum, and debited by the check's maximum when the
/// check is unsatisfied.
pub fn lp_term(y_mag: f64, check_min: f64, check_max: f64, s_k: u8) -> f64 {
    let base = y_mag - 0.5 * check_min;
    if s_k == 0 {
        base
    } else {
        base - check_max
    }
}

/// Term weight of the weighted flip function: alpha1 minus the number of
/// low-magnitude companions in the check, floored at zero. `other_mags` are
/// the magnitudes over the check excluding the bit itself.
pub fn sz_weight(alpha1: u32, beta1: f64, other_mags: &[f64]) -> u32 {
    let small = other_mags.iter().filter(|&&m| m <= beta1).count() as u32;
    alpha1.saturating_sub(small)
}

/// Bit-flipping decoder with an owned workspace, reusable across frames.
pub struct BfDecoder<'h> {
    h: &'h SparseParityCheck,
    variant: BfVariant,
    i_max: u32,
    pub(super) scores: FlipScores,
    // Per-frame state.
    y_abs: Vec<f64>,
    c_hat: Vec<u8>,
    s: Vec<u8>,
    unsat: u32,
    // Counters and marks (signal/delay decoders).
    b: Vec<u32>,
    a: Vec<u8>,
    reliable: Vec<bool>,
    // Loop detection (serial weighted decoder).
    visited: HashSet<Vec<u8>>,
    // Scratch.
    order: Vec<u32>,
    flips: Vec<u32>,
    touched: Vec<u32>,
    parity: Vec<u8>,
    toggled: Vec<u32>,
}

impl<'h> BfDecoder<'h> {
    pub fn new(
        h: &'h SparseParityCheck,
        variant: BfVariant,
        i_max: u32,
    ) -> Result<Self, BfError> {
        if i_max == 0 {
            return Err(BfError::InvalidParam("i_max must be at least 1".into()));
        }
        match variant {
            BfVariant::Sz(p) if p.alpha1 < 1 => {
                return Err(BfError::InvalidParam("alpha1 must be at least 1".into()));
            }
            BfVariant::Wz(p) if p.alpha2 < 1 => {
                return Err(BfError::InvalidParam("alpha2 must be at least 1".into()));
            }
            BfVariant::Lf(p) => {
                if p.alpha1 < 1 || p.alpha2 < 1 || p.alpha3 < 1 {
                    return Err(BfError::InvalidParam(
                        "alpha thresholds must be at least 1".into(),
                    ));
                }
                if !(0.0..=1.0).contains(&p.beta4) {
                    return Err(BfError::InvalidParam("beta4 must lie in [0,1]".into()));
                }
                if (p.beta4 * h.n_cols() as f64).floor() < 1.0 {
                    return Err(BfError::InvalidParam(
                        "beta4 * N must be at least 1".into(),
                    ));
                }
            }
            _ => {}
        }
        let n = h.n_cols();
        let m = h.n_rows();
        Ok(Self {
            h,
            variant,
            i_max,
            scores: FlipScores::new(h),
            y_abs: vec![0.0; n],
            c_hat: vec![0; n],
            s: vec![0; m],
            unsat: 0,
            b: vec![0; n],
            a: vec![0; n],
            reliable: vec![false; n],
            visited: HashSet::new(),
            order: Vec::with_capacity(n),
            flips: Vec::with_capacity(n),
            touched: Vec::with_capacity(m),
            parity: vec![0; m],
            toggled: Vec::with_capacity(m),
        })
    }

    pub fn variant(&self) -> &BfVariant {
        &self.variant
    }

    pub fn i_max(&self) -> u32 {
        self.i_max
    }

    pub fn matrix(&self) -> &'h SparseParityCheck {
        self.h
    }

    /// Decode one frame.
    ///
    /// Non-convergence is a normal outcome (`converged == false`); the
    /// returned hard decision is then the last decoder state.
    ///
    /// # Panics
    ///
    /// Panics if the frame length does not match the code's block length.
    pub fn decode(&mut self, frame: &ReceivedFrame) -> BfOutcome {
        assert_eq!(frame.len(), self.h.n_cols(), "frame/block length mismatch");
        for (dst, &y) in self.y_abs.iter_mut().zip(frame.y.iter()) {
            *dst = y.abs();
        }
        self.c_hat.copy_from_slice(&frame.hard);
        let mut unsat = 0u32;
        for k in 0..self.h.n_rows() {
            let parity = self
                .h
                .checks_row(k)
                .iter()
                .fold(0u8, |acc, &i| acc ^ self.c_hat[i as usize]);
            self.s[k] = parity;
            unsat += u32::from(parity);
        }
        self.unsat = unsat;

        let (converged, iters_used, stats) = match self.variant {
            BfVariant::Lp => self.run_serial(false, ScoreRule::Plain),
            BfVariant::Sz(p) => self.run_serial(
                true,
                ScoreRule::Weighted { alpha1: p.alpha1, beta1: p.beta1 },
            ),
            BfVariant::Nt => self.run_nt(),
            BfVariant::Lz(p) => self.run_lz(p),
            BfVariant::Wz(p) => self.run_wz(p),
            BfVariant::Lf(p) => self.run_lf(p),
        };
        BfOutcome { c_hat: self.c_hat.clone(), converged, iters_used, stats }
    }

    /// Flip the bits listed in `self.flips`, updating the hard decision, the
    /// syndrome, and the unsatisfied count, and record the set of checks
    /// whose state toggled (those with an odd number of flipped neighbors).
    pub(super) fn apply_flips(&mut self) {
        self.touched.clear();
        for &i in self.flips.iter() {
            self.c_hat[i as usize] ^= 1;
            for &k in self.h.bits_col(i as usize) {
                if self.parity[k as usize] == 0 {
                    self.touched.push(k);
                }
                self.parity[k as usize] ^= 1;
            }
        }
        self.toggled.clear();
        for &k in &self.touched {
            if self.parity[k as usize] == 1 {
                self.toggled.push(k);
                let s = &mut self.s[k as usize];
                *s ^= 1;
                if *s == 1 {
                    self.unsat += 1;
                } else {
                    self.unsat -= 1;
                }
            }
            self.parity[k as usize] = 0;
        }
    }

    /// Apply the pending flip-function refreshes for the previous pass's
    /// toggles and charge them.
    pub(super) fn refresh_pending(&mut self, stats: &mut FrameStats) {
        let terms = self.scores.apply_toggles(self.h, &self.toggled, &self.s);
        stats.refreshed_terms += terms;
        stats.update_phases += 1;
        stats.additions += terms as f64;
    }

    /// First-pass setup: per-frame score preparation plus the preprocessing
    /// and initialization charges.
    pub(super) fn init_scores(
        &mut self,
        rule: ScoreRule,
        preprocess_charge: f64,
        stats: &mut FrameStats,
    ) {
        self.scores.prepare(self.h, &self.y_abs, rule);
        self.scores.compute_full(self.h, &self.s);
        stats.additions += preprocess_charge;
        stats.additions += (self.h.n_cols() * (self.h.d_v() - 1)) as f64;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::ReceivedFrame;
    use crate::codes::build_eg_type1;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn frame_from(y: Vec<f64>) -> ReceivedFrame {
        ReceivedFrame::from_channel_output(y, 0.6).unwrap()
    }

    fn all_variants() -> Vec<BfVariant> {
        vec![
            BfVariant::Lp,
            BfVariant::Sz(SzParams { alpha1: 3, beta1: 0.5 }),
            BfVariant::Nt,
            BfVariant::Lz(LzParams { beta2: 1.5 }),
            BfVariant::Wz(WzParams { alpha2: 2, beta3: 1.3 }),
            BfVariant::Lf(LfParams::new(3, 2, 2, 0.5, 0.2)),
        ]
    }

    #[test]
    fn lp_term_values() {
        assert!((lp_term(0.8, 0.4, 0.9, 0) - 0.6).abs() < 1e-15);
        assert!((lp_term(0.8, 0.4, 0.9, 1) - (-0.3)).abs() < 1e-15);
        for m in [0.0, 0.3, 1.7] {
            assert!((lp_term(m, m, m, 0) - m / 2.0).abs() < 1e-15);
        }
    }

    #[test]
    fn sz_weight_values() {
        assert_eq!(sz_weight(6, 0.5, &[0.1, 0.2, 0.9]), 4);
        assert_eq!(sz_weight(2, 0.5, &[0.1, 0.2, 0.3]), 0);
        assert_eq!(sz_weight(6, 0.5, &[0.6, 0.7, 0.9]), 6);
    }

    #[test]
    fn zero_noise_converges_without_flips() {
        let h = build_eg_type1(2).unwrap();
        for variant in all_variants() {
            let mut dec = BfDecoder::new(&h, variant, 20).unwrap();
            let out = dec.decode(&frame_from(vec![1.0; 15]));
            assert!(out.converged, "{variant:?}");
            assert_eq!(out.iters_used, 0);
            assert_eq!(out.stats.flip_bits, 0);
            assert_eq!(out.c_hat, vec![0u8; 15]);
            assert_eq!(out.stats.additions, 0.0);
        }
    }

    #[test]
    fn lp_flips_single_error_first() {
        // A lone flipped bit has the smallest plain flip function over the
        // 15-bit toy code; verify against exhaustive term evaluation.
        let h = build_eg_type1(2).unwrap();
        let wrong = 6usize;
        let mut y = vec![1.0; 15];
        y[wrong] = -0.4;
        let frame = frame_from(y.clone());
        let s = h.syndrome(&frame.hard).unwrap();
        let f: Vec<f64> = (0..15)
            .map(|i| {
                h.bits_col(i)
                    .iter()
                    .map(|&k| {
                        let mags: Vec<f64> = h
                            .checks_row(k as usize)
                            .iter()
                            .map(|&j| y[j as usize].abs())
                            .collect();
                        let mn = mags.iter().cloned().fold(f64::INFINITY, f64::min);
                        let mx = mags.iter().cloned().fold(0.0f64, f64::max);
                        lp_term(y[i].abs(), mn, mx, s[k as usize])
                    })
                    .sum()
            })
            .collect();
        let oracle_argmin =
            f.iter().enumerate().min_by(|a, b| a.1.partial_cmp(b.1).unwrap()).unwrap().0;
        assert_eq!(oracle_argmin, wrong);

        let mut dec = BfDecoder::new(&h, BfVariant::Lp, 20).unwrap();
        let out = dec.decode(&frame);
        assert!(out.converged);
        assert_eq!(out.iters_used, 1);
        assert_eq!(out.c_hat, vec![0u8; 15]);
    }

    #[test]
    fn lz_single_error_has_largest_score() {
        // With no own-magnitude weighting, the erroneous bit's score is
        // strictly the largest; exhaustive evaluation over all bits.
        let h = build_eg_type1(2).unwrap();
        let wrong = 3usize;
        let mut y = vec![1.0; 15];
        y[wrong] = -0.5;
        let frame = frame_from(y.clone());
        let s = h.syndrome(&frame.hard).unwrap();
        let f: Vec<f64> = (0..15)
            .map(|i| {
                h.bits_col(i)
                    .iter()
                    .map(|&k| {
                        let mn = h
                            .checks_row(k as usize)
                            .iter()
                            .map(|&j| y[j as usize].abs())
                            .fold(f64::INFINITY, f64::min);
                        (2.0 * f64::from(s[k as usize]) - 1.0) * mn
                    })
                    .sum()
            })
            .collect();
        for (i, &v) in f.iter().enumerate() {
            if i != wrong {
                assert!(v < f[wrong], "bit {i}: {v} vs {}", f[wrong]);
            }
        }
        let mut dec = BfDecoder::new(&h, BfVariant::Lz(LzParams { beta2: 0.0 }), 20).unwrap();
        let out = dec.decode(&frame);
        assert!(out.converged);
        assert_eq!(out.c_hat, vec![0u8; 15]);
    }

    #[test]
    fn wz_single_unsatisfied_check_issues_one_signal() {
        // 3x6 toy code: bit 3 sits only in check 0, so flipping it leaves
        // exactly one unsatisfied check and exactly one signal is issued.
        let h = SparseParityCheck::from_row_adjacency(
            6,
            vec![vec![0, 1, 3], vec![1, 2, 4], vec![0, 2, 5]],
        )
        .unwrap();
        let mut y = vec![1.0; 6];
        y[3] = -0.2;
        let frame = frame_from(y);
        let mut dec =
            BfDecoder::new(&h, BfVariant::Wz(WzParams { alpha2: 1, beta3: 0.5 }), 20).unwrap();
        let out = dec.decode(&frame);
        assert!(out.converged);
        assert_eq!(out.iters_used, 1);
        assert_eq!(out.stats.unsat_checks, 1);
        assert_eq!(out.stats.flip_bits, 1);
        assert_eq!(out.c_hat, vec![0u8; 6]);
    }

    #[test]
    fn wz_satisfied_syndrome_collects_nothing() {
        let h = build_eg_type1(2).unwrap();
        let mut dec =
            BfDecoder::new(&h, BfVariant::Wz(WzParams { alpha2: 4, beta3: 1.3 }), 20).unwrap();
        let out = dec.decode(&frame_from(vec![0.9; 15]));
        assert!(out.converged);
        assert_eq!(out.stats.unsat_checks, 0);
    }

    #[test]
    fn serial_variants_flip_exactly_one_bit_per_iteration() {
        let h = build_eg_type1(2).unwrap();
        let mut rng = StdRng::seed_from_u64(11);
        for variant in [BfVariant::Lp, BfVariant::Sz(SzParams { alpha1: 3, beta1: 0.5 })] {
            let mut dec = BfDecoder::new(&h, variant, 50).unwrap();
            for _ in 0..50 {
                let y: Vec<f64> =
                    (0..15).map(|_| 1.0 + 0.6 * rng.gen::<f64>() - 0.9).collect();
                let out = dec.decode(&frame_from(y));
                assert_eq!(out.stats.flip_bits, out.iters_used as u64, "{variant:?}");
            }
        }
    }

    #[test]
    fn converged_outcomes_have_zero_syndrome() {
        let h = build_eg_type1(2).unwrap();
        let mut rng = StdRng::seed_from_u64(5150);
        for variant in all_variants() {
            let mut dec = BfDecoder::new(&h, variant, 30).unwrap();
            for _ in 0..300 {
                let y: Vec<f64> = (0..15)
                    .map(|_| 1.0 + 0.7 * rng.sample::<f64, _>(rand_distr::StandardNormal))
                    .collect();
                let out = dec.decode(&frame_from(y));
                if out.converged {
                    assert!(dec.matrix().syndrome_is_zero(&out.c_hat), "{variant:?}");
                }
            }
        }
    }

    #[test]
    fn decode_is_deterministic_across_reuse() {
        let h = build_eg_type1(2).unwrap();
        let mut rng = StdRng::seed_from_u64(42);
        let frames: Vec<ReceivedFrame> = (0..40)
            .map(|_| {
                frame_from(
                    (0..15)
                        .map(|_| 1.0 + 0.8 * rng.sample::<f64, _>(rand_distr::StandardNormal))
                        .collect(),
                )
            })
            .collect();
        for variant in all_variants() {
            let mut dec1 = BfDecoder::new(&h, variant, 25).unwrap();
            let mut dec2 = BfDecoder::new(&h, variant, 25).unwrap();
            let first: Vec<BfOutcome> = frames.iter().map(|fr| dec1.decode(fr)).collect();
            // Interleave a decode of a different frame to stress reset, then
            // replay on the same instance.
            let _ = dec2.decode(&frames[0]);
            let second: Vec<BfOutcome> = frames.iter().map(|fr| dec2.decode(fr)).collect();
            assert_eq!(first, second, "{variant:?}");
        }
    }

    #[test]
    fn flip_selections_are_scale_invariant() {
        // Positive scaling of the channel magnitudes (with the magnitude
        // cutoff beta1 scaled along) leaves every decode trace unchanged.
        let h = build_eg_type1(2).unwrap();
        let scale = 2.7;
        let mut rng = StdRng::seed_from_u64(303);
        let pairs: Vec<(BfVariant, BfVariant)> = vec![
            (BfVariant::Lp, BfVariant::Lp),
            (BfVariant::Nt, BfVariant::Nt),
            (BfVariant::Lz(LzParams { beta2: 1.1 }), BfVariant::Lz(LzParams { beta2: 1.1 })),
            (
                BfVariant::Wz(WzParams { alpha2: 2, beta3: 0.9 }),
                BfVariant::Wz(WzParams { alpha2: 2, beta3: 0.9 }),
            ),
            (
                BfVariant::Sz(SzParams { alpha1: 3, beta1: 0.5 }),
                BfVariant::Sz(SzParams { alpha1: 3, beta1: 0.5 * scale }),
            ),
            (
                BfVariant::Lf(LfParams::new(3, 2, 2, 0.5, 0.2)),
                BfVariant::Lf(LfParams::new(3, 2, 2, 0.5 * scale, 0.2)),
            ),
        ];
        for _ in 0..40 {
            let y: Vec<f64> = (0..15)
                .map(|_| 1.0 + 0.7 * rng.sample::<f64, _>(rand_distr::StandardNormal))
                .collect();
            let scaled: Vec<f64> = y.iter().map(|v| v * scale).collect();
            for (v1, v2) in &pairs {
                let mut d1 = BfDecoder::new(&h, *v1, 25).unwrap();
                let mut d2 = BfDecoder::new(&h, *v2, 25).unwrap();
                let o1 = d1.decode(&frame_from(y.clone()));
                let o2 = d2.decode(&frame_from(scaled.clone()));
                assert_eq!(o1.c_hat, o2.c_hat, "{v1:?}");
                assert_eq!(o1.converged, o2.converged);
                assert_eq!(o1.iters_used, o2.iters_used);
            }
        }
    }

    #[test]
    fn lf_relax_rules_both_run() {
        let h = build_eg_type1(2).unwrap();
        let mut rng = StdRng::seed_from_u64(77);
        for relax in [RelaxRule::FlipShortfall, RelaxRule::DelayShortfall] {
            let params = LfParams { relax, ..LfParams::new(3, 2, 2, 0.5, 0.2) };
            let mut dec = BfDecoder::new(&h, BfVariant::Lf(params), 25).unwrap();
            let mut converged = 0;
            for _ in 0..200 {
                let y: Vec<f64> = (0..15)
                    .map(|_| 1.0 + 0.6 * rng.sample::<f64, _>(rand_distr::StandardNormal))
                    .collect();
                let out = dec.decode(&frame_from(y));
                if out.converged {
                    converged += 1;
                    assert!(dec.matrix().syndrome_is_zero(&out.c_hat));
                }
            }
            assert!(converged > 100, "{relax:?} converged only {converged}/200");
        }
    }

    #[test]
    fn invalid_params_rejected() {
        let h = build_eg_type1(2).unwrap();
        assert!(BfDecoder::new(&h, BfVariant::Lp, 0).is_err());
        assert!(BfDecoder::new(&h, BfVariant::Sz(SzParams { alpha1: 0, beta1: 0.5 }), 10).is_err());
        assert!(BfDecoder::new(&h, BfVariant::Wz(WzParams { alpha2: 0, beta3: 1.0 }), 10).is_err());
        assert!(
            BfDecoder::new(&h, BfVariant::Lf(LfParams::new(0, 2, 2, 0.5, 0.2)), 10).is_err()
        );
        // beta4 N below one: no reliability threshold can be selected.
        assert!(
            BfDecoder::new(&h, BfVariant::Lf(LfParams::new(3, 2, 2, 0.5, 0.01)), 10).is_err()
        );
        assert!(
            BfDecoder::new(&h, BfVariant::Lf(LfParams::new(3, 2, 2, 0.5, 1.5)), 10).is_err()
        );
    }
}
