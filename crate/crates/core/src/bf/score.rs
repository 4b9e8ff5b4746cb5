//! Flip-function bookkeeping shared by every BF variant.
//!
//! All four flipping functions decompose the same way: a per-bit constant
//! plus, for each currently unsatisfied neighboring check, a per-edge term
//! that does not change during the decode (it depends only on |y|). That
//! makes incremental maintenance cheap: when an iteration's flips toggle a
//! set of checks, only the terms of those checks move, by a fixed delta each.
//!
//! Decomposition per rule (s_k is the check state, m_k / M_k the min / max
//! of |y| over the check, m'_{k,i} the min excluding bit i):
//!
//! - plain:      f_i = sum_k (|y_i| - m_k/2)            - sum_{unsat k} M_k
//! - weighted:   f_i = sum_k w_ik (|y_i| - m_k/2)       - sum_{unsat k} w_ik M_k
//! - min-diff:   f_i = -sum_k m_k      - b |y_i|        + sum_{unsat k} 2 m_k
//! - min-excl:   f_i = -sum_k m'_{k,i} - b |y_i|        + sum_{unsat k} 2 m'_{k,i}

use crate::codes::SparseParityCheck;

/// Which flipping function the engine evaluates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScoreRule {
    /// Reliability-difference terms with unit weights (serial and
    /// quotient-rule decoders). Small f marks a flip candidate.
    Plain,
    /// Same terms, each weighted by how many reliable companions the check
    /// has: w = max(0, alpha1 - #{|y_j| <= beta1, j != i}).
    Weighted { alpha1: u32, beta1: f64 },
    /// Check-minimum signed by check state minus a weighted own magnitude.
    /// Large f marks a flip candidate.
    MinDiff { beta: f64 },
    /// As `MinDiff` but each check's minimum excludes the bit itself.
    MinExcl { beta: f64 },
}

/// Per-check magnitude statistics, computed once per frame.
#[derive(Debug, Clone, Copy, Default)]
struct CheckStats {
    min1: f64,
    min1_pos: u32,
    min2: f64,
    max: f64,
    small: u32,
}

/// Flip-function store with O(changed terms) refresh.
#[derive(Debug, Clone)]
pub struct FlipScores {
    /// Offsets into the row-major edge arrays, length M+1.
    row_off: Vec<usize>,
    /// Offsets into the column-major edge arrays, length N+1.
    col_off: Vec<usize>,
    /// For each row-major edge, its slot in the column-major layout.
    col_slot: Vec<usize>,
    /// Per-edge unsatisfied-check term, row-major.
    row_delta: Vec<f64>,
    /// Per-edge unsatisfied-check term, column-major.
    col_delta: Vec<f64>,
    base: Vec<f64>,
    f: Vec<f64>,
    stats: Vec<CheckStats>,
}

impl FlipScores {
    pub fn new(h: &SparseParityCheck) -> Self {
        let n = h.n_cols();
        let m = h.n_rows();
        let edges = h.num_edges();
        let mut row_off = Vec::with_capacity(m + 1);
        row_off.push(0usize);
        for k in 0..m {
            row_off.push(row_off[k] + h.checks_row(k).len());
        }
        let mut col_off = Vec::with_capacity(n + 1);
        col_off.push(0usize);
        for i in 0..n {
            col_off.push(col_off[i] + h.bits_col(i).len());
        }
        // Rows are walked in ascending check order, so each column's slots
        // fill in the same order as its sorted check list.
        let mut cursor: Vec<usize> = col_off[..n].to_vec();
        let mut col_slot = vec![0usize; edges];
        for k in 0..m {
            for (t, &i) in h.checks_row(k).iter().enumerate() {
                col_slot[row_off[k] + t] = cursor[i as usize];
                cursor[i as usize] += 1;
            }
        }
        Self {
            row_off,
            col_off,
            col_slot,
            row_delta: vec![0.0; edges],
            col_delta: vec![0.0; edges],
            base: vec![0.0; n],
            f: vec![0.0; n],
            stats: vec![CheckStats::default(); m],
        }
    }

    /// Per-frame setup: check statistics, per-bit constants, per-edge deltas.
    pub fn prepare(&mut self, h: &SparseParityCheck, y_abs: &[f64], rule: ScoreRule) {
        assert_eq!(y_abs.len(), h.n_cols());
        for k in 0..h.n_rows() {
            let mut st = CheckStats {
                min1: f64::INFINITY,
                min1_pos: 0,
                min2: f64::INFINITY,
                max: f64::NEG_INFINITY,
                small: 0,
            };
            for (t, &i) in h.checks_row(k).iter().enumerate() {
                let mag = y_abs[i as usize];
                if mag < st.min1 {
                    st.min2 = st.min1;
                    st.min1 = mag;
                    st.min1_pos = t as u32;
                } else if mag < st.min2 {
                    st.min2 = mag;
                }
                if mag > st.max {
                    st.max = mag;
                }
                if let ScoreRule::Weighted { beta1, .. } = rule {
                    if mag <= beta1 {
                        st.small += 1;
                    }
                }
            }
            self.stats[k] = st;
        }

        self.base.fill(0.0);
        match rule {
            ScoreRule::Plain => {
                for k in 0..h.n_rows() {
                    let st = self.stats[k];
                    for (t, &i) in h.checks_row(k).iter().enumerate() {
                        let e = self.row_off[k] + t;
                        self.base[i as usize] += y_abs[i as usize] - 0.5 * st.min1;
                        self.set_delta(e, -st.max);
                    }
                }
            }
            ScoreRule::Weighted { alpha1, beta1 } => {
                for k in 0..h.n_rows() {
                    let st = self.stats[k];
                    for (t, &i) in h.checks_row(k).iter().enumerate() {
                        let mag = y_abs[i as usize];
                        let excl = st.small - u32::from(mag <= beta1);
                        let w = f64::from(alpha1.saturating_sub(excl));
                        let e = self.row_off[k] + t;
                        self.base[i as usize] += w * (mag - 0.5 * st.min1);
                        self.set_delta(e, -w * st.max);
                    }
                }
            }
            ScoreRule::MinDiff { beta } => {
                for (i, &mag) in y_abs.iter().enumerate() {
                    self.base[i] = -beta * mag;
                }
                for k in 0..h.n_rows() {
                    let st = self.stats[k];
                    for (t, &i) in h.checks_row(k).iter().enumerate() {
                        let e = self.row_off[k] + t;
                        self.base[i as usize] -= st.min1;
                        self.set_delta(e, 2.0 * st.min1);
                    }
                }
            }
            ScoreRule::MinExcl { beta } => {
                for (i, &mag) in y_abs.iter().enumerate() {
                    self.base[i] = -beta * mag;
                }
                for k in 0..h.n_rows() {
                    let st = self.stats[k];
                    for (t, &i) in h.checks_row(k).iter().enumerate() {
                        let excl = if t as u32 == st.min1_pos { st.min2 } else { st.min1 };
                        let e = self.row_off[k] + t;
                        self.base[i as usize] -= excl;
                        self.set_delta(e, 2.0 * excl);
                    }
                }
            }
        }
    }

    fn set_delta(&mut self, row_edge: usize, value: f64) {
        self.row_delta[row_edge] = value;
        self.col_delta[self.col_slot[row_edge]] = value;
    }

    /// Evaluate every f_i from scratch for the given syndrome.
    pub fn compute_full(&mut self, h: &SparseParityCheck, syndrome: &[u8]) {
        for i in 0..h.n_cols() {
            let mut f = self.base[i];
            for (t, &k) in h.bits_col(i).iter().enumerate() {
                if syndrome[k as usize] == 1 {
                    f += self.col_delta[self.col_off[i] + t];
                }
            }
            self.f[i] = f;
        }
    }

    /// Adjust f for the checks that changed state. `syndrome_after` is the
    /// post-flip syndrome; each toggled check moves the terms of all its
    /// bits by one delta. Returns the number of adjusted terms.
    pub fn apply_toggles(
        &mut self,
        h: &SparseParityCheck,
        toggled: &[u32],
        syndrome_after: &[u8],
    ) -> u64 {
        let mut terms = 0u64;
        for &k in toggled {
            let k = k as usize;
            let row = h.checks_row(k);
            let off = self.row_off[k];
            let sign = if syndrome_after[k] == 1 { 1.0 } else { -1.0 };
            for (t, &i) in row.iter().enumerate() {
                self.f[i as usize] += sign * self.row_delta[off + t];
            }
            terms += row.len() as u64;
        }
        terms
    }

    /// Refresh from a pair of consecutive syndromes: every check whose state
    /// differs between the two contributes one term move per neighboring
    /// bit. Equivalent to [`FlipScores::compute_full`] on the new syndrome.
    pub fn refresh_from_syndromes(
        &mut self,
        h: &SparseParityCheck,
        before: &[u8],
        after: &[u8],
    ) -> u64 {
        let toggled: Vec<u32> = before
            .iter()
            .zip(after.iter())
            .enumerate()
            .filter(|(_, (b, a))| b != a)
            .map(|(k, _)| k as u32)
            .collect();
        self.apply_toggles(h, &toggled, after)
    }

    /// Current flip-function values.
    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.f
    }
}
