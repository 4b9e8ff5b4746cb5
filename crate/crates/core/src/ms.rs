//! Soft decoders over the flooding schedule: standard BP in the LLR domain,
//! normalized Min-Sum, offset Min-Sum, and the normalized APP-based variant.
//!
//! One iteration is a check-node pass followed by a variable-node pass; the
//! decoder hard-decides on the posterior and stops as soon as the syndrome
//! clears. Messages initialize to the channel LLRs.

use crate::channel::ReceivedFrame;
use crate::codes::SparseParityCheck;
use crate::complexity::{FrameStats, SchemeKind};
use thiserror::Error;

/// Clamp bound keeping atanh finite.
const TANH_CLAMP: f64 = 1.0 - 1e-15;

/// Parameter validation errors.
#[derive(Debug, Error, PartialEq)]
pub enum MsError {
    #[error("invalid decoder parameter: {0}")]
    InvalidParam(String),
}

/// Soft decoder variant with its correction factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MsVariant {
    /// Standard belief propagation (tanh product check update).
    Bp,
    /// Normalized Min-Sum: check magnitudes scaled by 1/beta5.
    Nms { beta5: f64 },
    /// Offset Min-Sum: check magnitudes reduced by beta6, floored at zero.
    Oms { beta6: f64 },
    /// Normalized APP-based: Min-Sum check update with scale 1/beta5, and
    /// variable messages replaced by the full posterior.
    Nab { beta5: f64 },
}

impl MsVariant {
    /// Short scheme name used in ledgers and CSV output.
    pub fn name(&self) -> &'static str {
        match self {
            MsVariant::Bp => "bp",
            MsVariant::Nms { .. } => "nms",
            MsVariant::Oms { .. } => "oms",
            MsVariant::Nab { .. } => "nab",
        }
    }

    /// Scheme selector for the closed-form complexity estimates (none for
    /// BP, whose check pass is dominated by operations outside the
    /// accounting scope).
    pub fn scheme_kind(&self) -> Option<SchemeKind> {
        match self {
            MsVariant::Bp => None,
            MsVariant::Nms { .. } => Some(SchemeKind::Nms),
            MsVariant::Oms { .. } => Some(SchemeKind::Oms),
            MsVariant::Nab { .. } => Some(SchemeKind::Nab),
        }
    }
}

/// Result of one soft decode.
#[derive(Debug, Clone, PartialEq)]
pub struct MsOutcome {
    /// Final hard decision.
    pub c_hat: Vec<u8>,
    /// True iff the final syndrome is zero.
    pub converged: bool,
    /// Iterations executed (0 when the channel hard decision already
    /// satisfied every check).
    pub iters_used: u32,
    /// Complexity counters for this frame.
    pub stats: FrameStats,
}

/// Check update of standard BP: 2 atanh of the product of tanh(Z/2) over the
/// incoming values (the target edge already excluded by the caller). The
/// product is clamped before atanh to stay finite.
pub fn check_update_bp(incoming: &[f64]) -> f64 {
    let product: f64 = incoming.iter().map(|z| (z * 0.5).tanh()).product();
    2.0 * product.clamp(-TANH_CLAMP, TANH_CLAMP).atanh()
}

/// Normalized Min-Sum check update: sign product times minimum magnitude,
/// scaled by 1/beta5.
pub fn check_update_nms(incoming: &[f64], beta5: f64) -> f64 {
    let sign: f64 = incoming.iter().map(|z| z.signum()).product();
    let min = incoming.iter().map(|z| z.abs()).fold(f64::INFINITY, f64::min);
    sign * min / beta5
}

/// Offset Min-Sum check update: sign product times max(min magnitude -
/// beta6, 0).
pub fn check_update_oms(incoming: &[f64], beta6: f64) -> f64 {
    let sign: f64 = incoming.iter().map(|z| z.signum()).product();
    let min = incoming.iter().map(|z| z.abs()).fold(f64::INFINITY, f64::min);
    sign * (min - beta6).max(0.0)
}

/// Variable update: the channel LLR plus the incoming check messages,
/// excluding one edge for the extrinsic form or none for the posterior
/// form.
pub fn var_update(f_init: f64, incoming: &[f64], exclude: Option<usize>) -> f64 {
    let mut total = f_init;
    for (t, &l) in incoming.iter().enumerate() {
        if exclude != Some(t) {
            total += l;
        }
    }
    total
}

/// Flooding-schedule soft decoder with an owned workspace.
pub struct MsDecoder<'h> {
    h: &'h SparseParityCheck,
    variant: MsVariant,
    i_max: u32,
    /// Edge layout: edges grouped by check; `edge_bit[e]` is the bit of edge
    /// e, `check_off[k]..check_off[k+1]` spans check k.
    check_off: Vec<usize>,
    edge_bit: Vec<u32>,
    /// Edges of each bit: `var_edges[var_off[i]..var_off[i+1]]`.
    var_off: Vec<usize>,
    var_edges: Vec<u32>,
    z: Vec<f64>,
    l_msg: Vec<f64>,
    posterior: Vec<f64>,
    c_hat: Vec<u8>,
    // Scratch for the BP partial products.
    fwd: Vec<f64>,
    bwd: Vec<f64>,
}

impl<'h> MsDecoder<'h> {
    pub fn new(h: &'h SparseParityCheck, variant: MsVariant, i_max: u32) -> Result<Self, MsError> {
        if i_max == 0 {
            return Err(MsError::InvalidParam("i_max must be at least 1".into()));
        }
        match variant {
            MsVariant::Nms { beta5 } | MsVariant::Nab { beta5 } if !(beta5 > 0.0) => {
                return Err(MsError::InvalidParam("beta5 must be positive".into()));
            }
            MsVariant::Oms { beta6 } if beta6 < 0.0 => {
                return Err(MsError::InvalidParam("beta6 must be nonnegative".into()));
            }
            _ => {}
        }
        let n = h.n_cols();
        let m = h.n_rows();
        let edges = h.num_edges();
        let mut check_off = Vec::with_capacity(m + 1);
        check_off.push(0usize);
        let mut edge_bit = Vec::with_capacity(edges);
        for k in 0..m {
            for &i in h.checks_row(k) {
                edge_bit.push(i);
            }
            check_off.push(edge_bit.len());
        }
        let mut var_off = vec![0usize; n + 1];
        for &i in &edge_bit {
            var_off[i as usize + 1] += 1;
        }
        for i in 0..n {
            var_off[i + 1] += var_off[i];
        }
        let mut cursor = var_off.clone();
        let mut var_edges = vec![0u32; edges];
        for (e, &i) in edge_bit.iter().enumerate() {
            var_edges[cursor[i as usize]] = e as u32;
            cursor[i as usize] += 1;
        }
        let d_c = h.d_c();
        Ok(Self {
            h,
            variant,
            i_max,
            check_off,
            edge_bit,
            var_off,
            var_edges,
            z: vec![0.0; edges],
            l_msg: vec![0.0; edges],
            posterior: vec![0.0; n],
            c_hat: vec![0; n],
            fwd: vec![0.0; d_c],
            bwd: vec![0.0; d_c],
        })
    }

    pub fn variant(&self) -> &MsVariant {
        &self.variant
    }

    pub fn i_max(&self) -> u32 {
        self.i_max
    }

    pub fn matrix(&self) -> &'h SparseParityCheck {
        self.h
    }

    /// Additions charged per iteration under the accounting model.
    fn additions_per_iteration(&self) -> f64 {
        let n = self.h.n_cols() as f64;
        let m = self.h.n_rows() as f64;
        let dv = self.h.d_v() as f64;
        let dc = self.h.d_c() as f64;
        let log_term = m * (dc.log2().ceil() - 2.0);
        match self.variant {
            // BP's check pass is hyperbolic products; only the variable-side
            // sums count as real additions.
            MsVariant::Bp => 2.0 * n * dv,
            MsVariant::Nab { .. } => 2.0 * n * dv + log_term,
            MsVariant::Nms { .. } | MsVariant::Oms { .. } => n * (4.0 * dv - 3.0) + log_term,
        }
    }

    /// Divisions charged per iteration (scaling variants only).
    fn divisions_per_iteration(&self) -> f64 {
        match self.variant {
            MsVariant::Nms { .. } | MsVariant::Nab { .. } => {
                (self.h.n_cols() * self.h.d_v()) as f64
            }
            _ => 0.0,
        }
    }

    /// Decode one frame. Non-convergence is a normal outcome.
    ///
    /// # Panics
    ///
    /// Panics if the frame length does not match the code's block length.
    pub fn decode(&mut self, frame: &ReceivedFrame) -> MsOutcome {
        assert_eq!(frame.len(), self.h.n_cols(), "frame/block length mismatch");
        let mut stats = FrameStats::default();
        self.c_hat.copy_from_slice(&frame.hard);
        if self.h.syndrome_is_zero(&self.c_hat) {
            return MsOutcome { c_hat: self.c_hat.clone(), converged: true, iters_used: 0, stats };
        }

        for (z, &bit) in self.z.iter_mut().zip(self.edge_bit.iter()) {
            *z = frame.llr[bit as usize];
        }

        for iter in 1..=self.i_max {
            self.check_pass();
            self.var_pass(&frame.llr);
            stats.iters = iter as u64;
            stats.additions += self.additions_per_iteration();
            stats.divisions += self.divisions_per_iteration();
            if self.h.syndrome_is_zero(&self.c_hat) {
                return MsOutcome {
                    c_hat: self.c_hat.clone(),
                    converged: true,
                    iters_used: iter,
                    stats,
                };
            }
        }
        MsOutcome { c_hat: self.c_hat.clone(), converged: false, iters_used: self.i_max, stats }
    }

    fn check_pass(&mut self) {
        match self.variant {
            MsVariant::Bp => {
                for k in 0..self.h.n_rows() {
                    let span = self.check_off[k]..self.check_off[k + 1];
                    // Partial tanh products from both ends give each edge
                    // the product over the other edges.
                    let mut acc = 1.0;
                    for (t, e) in span.clone().enumerate() {
                        self.fwd[t] = acc;
                        acc *= (self.z[e] * 0.5).tanh();
                    }
                    acc = 1.0;
                    for (t, e) in span.clone().enumerate().rev() {
                        self.bwd[t] = acc;
                        acc *= (self.z[e] * 0.5).tanh();
                    }
                    for (t, e) in span.enumerate() {
                        let product = (self.fwd[t] * self.bwd[t]).clamp(-TANH_CLAMP, TANH_CLAMP);
                        self.l_msg[e] = 2.0 * product.atanh();
                    }
                }
            }
            MsVariant::Nms { beta5 } | MsVariant::Nab { beta5 } => {
                self.min_sum_pass(|mag| mag / beta5);
            }
            MsVariant::Oms { beta6 } => {
                self.min_sum_pass(|mag| (mag - beta6).max(0.0));
            }
        }
    }

    /// Sign-product / excluded-minimum check pass with a magnitude
    /// correction applied to the outgoing messages.
    fn min_sum_pass(&mut self, correct: impl Fn(f64) -> f64) {
        for k in 0..self.h.n_rows() {
            let span = self.check_off[k]..self.check_off[k + 1];
            let mut sign_prod = 1.0f64;
            let mut min1 = f64::INFINITY;
            let mut min1_at = span.start;
            let mut min2 = f64::INFINITY;
            for e in span.clone() {
                let z = self.z[e];
                sign_prod *= z.signum();
                let mag = z.abs();
                if mag < min1 {
                    min2 = min1;
                    min1 = mag;
                    min1_at = e;
                } else if mag < min2 {
                    min2 = mag;
                }
            }
            for e in span {
                let excl_min = if e == min1_at { min2 } else { min1 };
                let excl_sign = sign_prod * self.z[e].signum();
                self.l_msg[e] = excl_sign * correct(excl_min);
            }
        }
    }

    fn var_pass(&mut self, llr: &[f64]) {
        let nab = matches!(self.variant, MsVariant::Nab { .. });
        for i in 0..self.h.n_cols() {
            let span = self.var_off[i]..self.var_off[i + 1];
            let mut total = llr[i];
            for &e in &self.var_edges[span.clone()] {
                total += self.l_msg[e as usize];
            }
            self.posterior[i] = total;
            self.c_hat[i] = u8::from(total < 0.0);
            for &e in &self.var_edges[span] {
                let e = e as usize;
                self.z[e] = if nab { total } else { total - self.l_msg[e] };
            }
        }
    }
}
