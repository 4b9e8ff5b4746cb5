//! Parity-check matrices of finite-geometry LDPC codes.
//!
//! The matrix type here is shared by every decoder: an M x N binary matrix
//! held as dual adjacency lists, so a check's bit neighborhood N(k) and a
//! bit's check neighborhood M(i) are both O(degree) scans. Matrices are
//! immutable after construction and safe to share across decoder instances.
//!
//! Construction paths:
//! - [`build_eg_type1`] / [`build_pg_type1`]: cyclic line-orbit constructions
//!   over two-dimensional Euclidean / projective geometries.
//! - [`load_alist`]: import any code in the MacKay alist interchange format.

mod alist;
mod geometry;
mod gf;

pub use alist::{load_alist, save_alist};
pub use geometry::{build_eg_type1, build_pg_type1};
pub use gf::GaloisField;

use thiserror::Error;

/// Errors from matrix construction, validation, and import.
#[derive(Debug, Error)]
pub enum CodeError {
    #[error("unsupported field degree m={0} (table covers 1..=16)")]
    UnsupportedFieldDegree(u32),
    #[error("generator is not primitive for GF(2^{0})")]
    NonPrimitiveGenerator(u32),
    #[error("geometry order s={0} outside supported range {1}..={2}")]
    GeometryOrder(u32, u32, u32),
    #[error("constructed matrix failed validation: {0}")]
    Inconsistent(String),
    #[error("difference-set verification failed: residue {0} covered {1} times")]
    DifferenceSet(u32, u32),
    #[error("row {0} is empty")]
    EmptyRow(usize),
    #[error("column {0} is empty")]
    EmptyColumn(usize),
    #[error("adjacency index {index} out of range (row {row}, n={n})")]
    IndexOutOfRange { row: usize, index: u32, n: usize },
    #[error("vector length {got} does not match block length {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("malformed alist: {0}")]
    Alist(String),
}

/// Code family a matrix came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeFamily {
    /// Type-I two-dimensional Euclidean-geometry construction.
    EgType1,
    /// Type-I two-dimensional projective-geometry construction.
    PgType1,
    /// Imported from an alist file.
    Imported,
}

/// Identity card of a code: family, geometry order, block length, dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeDescriptor {
    pub family: CodeFamily,
    /// Geometry order s, when constructed.
    pub s: Option<u32>,
    /// Block length N.
    pub n: usize,
    /// Dimension K = N - rank(H).
    pub k: usize,
}

impl CodeDescriptor {
    /// Code rate K/N.
    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    /// Derive the descriptor of a matrix by computing its GF(2) rank.
    pub fn of(h: &SparseParityCheck, family: CodeFamily, s: Option<u32>) -> Self {
        let k = h.n_cols() - h.gf2_rank();
        Self { family, s, n: h.n_cols(), k }
    }
}

/// Sparse binary parity-check matrix H (M x N) as dual adjacency lists.
///
/// `row_adj[k]` is the sorted bit neighborhood N(k) of check k; `col_adj[i]`
/// is the sorted check neighborhood M(i) of bit i. The two always describe
/// the same incidence set. `d_v` / `d_c` are the maximum column / row
/// degrees; for the regular finite-geometry codes built here every column
/// and row attains them.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseParityCheck {
    n_cols: usize,
    n_rows: usize,
    row_adj: Vec<Vec<u32>>,
    col_adj: Vec<Vec<u32>>,
    d_v: usize,
    d_c: usize,
}

impl SparseParityCheck {
    /// Build from per-row adjacency. Column lists are derived, so transpose
    /// consistency holds by construction. Rejects empty rows/columns,
    /// duplicate entries, and out-of-range indices.
    pub fn from_row_adjacency(n_cols: usize, rows: Vec<Vec<u32>>) -> Result<Self, CodeError> {
        let n_rows = rows.len();
        let mut row_adj = rows;
        let mut col_adj: Vec<Vec<u32>> = vec![Vec::new(); n_cols];
        for (k, row) in row_adj.iter_mut().enumerate() {
            if row.is_empty() {
                return Err(CodeError::EmptyRow(k));
            }
            row.sort_unstable();
            for w in row.windows(2) {
                if w[0] == w[1] {
                    return Err(CodeError::Inconsistent(format!(
                        "duplicate entry {} in row {k}",
                        w[0]
                    )));
                }
            }
            for &i in row.iter() {
                if i as usize >= n_cols {
                    return Err(CodeError::IndexOutOfRange { row: k, index: i, n: n_cols });
                }
                col_adj[i as usize].push(k as u32);
            }
        }
        for (i, col) in col_adj.iter().enumerate() {
            if col.is_empty() {
                return Err(CodeError::EmptyColumn(i));
            }
        }
        let d_c = row_adj.iter().map(Vec::len).max().unwrap_or(0);
        let d_v = col_adj.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Self { n_cols, n_rows, row_adj, col_adj, d_v, d_c })
    }

    /// Block length N.
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Number of checks M.
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    /// Maximum column weight d_v.
    pub fn d_v(&self) -> usize {
        self.d_v
    }

    /// Maximum row weight d_c.
    pub fn d_c(&self) -> usize {
        self.d_c
    }

    /// Bit neighborhood N(k) of check k, sorted.
    #[inline]
    pub fn checks_row(&self, k: usize) -> &[u32] {
        &self.row_adj[k]
    }

    /// Check neighborhood M(i) of bit i, sorted.
    #[inline]
    pub fn bits_col(&self, i: usize) -> &[u32] {
        &self.col_adj[i]
    }

    /// Number of 1-entries in H.
    pub fn num_edges(&self) -> usize {
        self.row_adj.iter().map(Vec::len).sum()
    }

    /// True when every row has exactly d_c entries and every column d_v.
    pub fn is_regular(&self) -> bool {
        self.row_adj.iter().all(|r| r.len() == self.d_c)
            && self.col_adj.iter().all(|c| c.len() == self.d_v)
    }

    /// Syndrome s = H * c_hat over GF(2): s_k is the XOR of c_hat over N(k).
    pub fn syndrome(&self, c_hat: &[u8]) -> Result<Vec<u8>, CodeError> {
        if c_hat.len() != self.n_cols {
            return Err(CodeError::LengthMismatch { got: c_hat.len(), want: self.n_cols });
        }
        Ok(self
            .row_adj
            .iter()
            .map(|row| row.iter().fold(0u8, |acc, &i| acc ^ (c_hat[i as usize] & 1)))
            .collect())
    }

    /// True when H * c_hat = 0.
    pub fn syndrome_is_zero(&self, c_hat: &[u8]) -> bool {
        self.row_adj
            .iter()
            .all(|row| row.iter().fold(0u8, |acc, &i| acc ^ (c_hat[i as usize] & 1)) == 0)
    }

    /// GF(2) rank via bitset Gaussian elimination. K = N - rank.
    pub fn gf2_rank(&self) -> usize {
        let words = self.n_cols.div_ceil(64);
        let mut pivots: Vec<Vec<u64>> = Vec::new();
        let mut pivot_cols: Vec<usize> = Vec::new();
        for row in &self.row_adj {
            let mut bits = vec![0u64; words];
            for &i in row {
                bits[i as usize / 64] |= 1u64 << (i % 64);
            }
            // Reduce against existing pivots.
            loop {
                let lead = match leading_bit(&bits) {
                    Some(l) => l,
                    None => break,
                };
                match pivot_cols.binary_search(&lead) {
                    Ok(idx) => {
                        let piv = &pivots[idx];
                        for (b, p) in bits.iter_mut().zip(piv.iter()) {
                            *b ^= p;
                        }
                    }
                    Err(idx) => {
                        pivot_cols.insert(idx, lead);
                        pivots.insert(idx, bits);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

fn leading_bit(bits: &[u64]) -> Option<usize> {
    for (w, &word) in bits.iter().enumerate() {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}
