//! Hybrid decoding: a bit-flipping stage backed by a Min-Sum stage.
//!
//! The BF stage decodes every frame; the MS stage takes over only when the
//! BF stage fails, and it always restarts from the pristine channel output,
//! never from BF-mutated state. The two component decoders are otherwise
//! independent, so per-stage costs add exactly and the MS invocation rate
//! equals the BF frame-failure rate.

use crate::bf::{BfDecoder, BfOutcome};
use crate::channel::ReceivedFrame;
use crate::complexity::FrameStats;
use crate::ms::{MsDecoder, MsOutcome};

/// Which stage produced the returned hard decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StageUsed {
    Bf,
    Ms,
}

/// Result of one hybrid decode, with both stages' outcomes preserved.
#[derive(Debug, Clone)]
pub struct HybridOutcome {
    /// Final hard decision (from the deciding stage).
    pub c_hat: Vec<u8>,
    /// True iff the deciding stage reached a zero syndrome.
    pub converged: bool,
    pub stage_used: StageUsed,
    /// First-stage outcome (always present; the BF stage runs on every
    /// frame).
    pub bf: BfOutcome,
    /// Second-stage outcome, present only when the BF stage failed.
    pub ms: Option<MsOutcome>,
}

impl HybridOutcome {
    /// Combined counters: BF stage plus the MS stage when invoked.
    pub fn combined_stats(&self) -> FrameStats {
        let mut total = self.bf.stats;
        if let Some(ms) = &self.ms {
            total.iters += ms.stats.iters;
            total.additions += ms.stats.additions;
            total.divisions += ms.stats.divisions;
        }
        total
    }
}

/// Two-stage decoder over a shared parity-check matrix.
pub struct HybridDecoder<'h> {
    bf: BfDecoder<'h>,
    ms: MsDecoder<'h>,
}

impl<'h> HybridDecoder<'h> {
    /// Pair two component decoders. Both must reference the same matrix.
    ///
    /// # Panics
    ///
    /// Panics if the stages were built over different matrices.
    pub fn new(bf: BfDecoder<'h>, ms: MsDecoder<'h>) -> Self {
        assert!(
            std::ptr::eq(bf.matrix(), ms.matrix()),
            "hybrid stages must share one parity-check matrix"
        );
        Self { bf, ms }
    }

    pub fn bf_stage(&self) -> &BfDecoder<'h> {
        &self.bf
    }

    pub fn ms_stage(&self) -> &MsDecoder<'h> {
        &self.ms
    }

    /// Scheme name of the pairing, e.g. `lf-wbf+nms`.
    pub fn name(&self) -> String {
        format!("{}+{}", self.bf.variant().name(), self.ms.variant().name())
    }

    /// Decode one frame: BF first, MS only on BF failure, both fed the
    /// original received frame.
    pub fn decode(&mut self, frame: &ReceivedFrame) -> HybridOutcome {
        let bf = self.bf.decode(frame);
        if bf.converged {
            return HybridOutcome {
                c_hat: bf.c_hat.clone(),
                converged: true,
                stage_used: StageUsed::Bf,
                bf,
                ms: None,
            };
        }
        let ms = self.ms.decode(frame);
        HybridOutcome {
            c_hat: ms.c_hat.clone(),
            converged: ms.converged,
            stage_used: StageUsed::Ms,
            bf,
            ms: Some(ms),
        }
    }
}

/// Paired comparison of a hybrid scheme against its MS stage alone on a
/// common frame set.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PairedReport {
    pub frames: u64,
    /// Frames the hybrid decoded to something other than the transmitted
    /// codeword (or failed on).
    pub hybrid_frame_errors: u64,
    /// Same for the standalone MS decoder.
    pub ms_frame_errors: u64,
    /// Frames where the hybrid was right and standalone MS wrong.
    pub hybrid_wins: u64,
    /// Frames where standalone MS was right and the hybrid wrong.
    pub ms_wins: u64,
    /// Frames where the BF stage converged to a wrong codeword. These are
    /// the only frames on which the hybrid can be beaten by its own second
    /// stage, so they are reported separately.
    pub bf_undetected_errors: u64,
    /// Mean counted additions per frame, hybrid.
    pub hybrid_additions_per_frame: f64,
    /// Mean counted additions per frame, standalone MS.
    pub ms_additions_per_frame: f64,
}

impl PairedReport {
    pub fn hybrid_fer(&self) -> f64 {
        self.hybrid_frame_errors as f64 / self.frames as f64
    }

    pub fn ms_fer(&self) -> f64 {
        self.ms_frame_errors as f64 / self.frames as f64
    }

    /// Standard error of the FER difference under paired sampling.
    pub fn paired_std_error(&self) -> f64 {
        // Discordant pairs drive the variance of the difference.
        let n = self.frames as f64;
        let p_win = self.hybrid_wins as f64 / n;
        let p_loss = self.ms_wins as f64 / n;
        let d = p_loss - p_win;
        (((p_win + p_loss) - d * d) / n).max(0.0).sqrt()
    }
}

/// Run the paired experiment: each frame is decoded by the hybrid and by the
/// standalone MS decoder, and outcomes are compared against the transmitted
/// codeword.
pub fn paired_comparison<'h>(
    hybrid: &mut HybridDecoder<'h>,
    ms_alone: &mut MsDecoder<'h>,
    frames: impl Iterator<Item = ReceivedFrame>,
    transmitted: &[u8],
) -> PairedReport {
    let mut report = PairedReport::default();
    let mut hybrid_adds = 0.0f64;
    let mut ms_adds = 0.0f64;
    for frame in frames {
        let hy = hybrid.decode(&frame);
        let ms = ms_alone.decode(&frame);
        report.frames += 1;
        let hy_err = !hy.converged || hy.c_hat != transmitted;
        let ms_err = !ms.converged || ms.c_hat != transmitted;
        report.hybrid_frame_errors += u64::from(hy_err);
        report.ms_frame_errors += u64::from(ms_err);
        report.hybrid_wins += u64::from(ms_err && !hy_err);
        report.ms_wins += u64::from(hy_err && !ms_err);
        report.bf_undetected_errors += u64::from(hy.bf.converged && hy.bf.c_hat != transmitted);
        hybrid_adds += hy.combined_stats().additions;
        ms_adds += ms.stats.additions;
    }
    if report.frames > 0 {
        report.hybrid_additions_per_frame = hybrid_adds / report.frames as f64;
        report.ms_additions_per_frame = ms_adds / report.frames as f64;
    }
    report
}
