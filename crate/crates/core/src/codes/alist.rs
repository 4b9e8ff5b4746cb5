//! alist import/export (MacKay convention).
//!
//! Layout: line 1 `N M`; line 2 `max_col_deg max_row_deg`; then N column
//! degrees, M row degrees, N column-adjacency lines, M row-adjacency lines.
//! Indices are 1-based in the text (0-based internally). Zero-padded
//! adjacency entries are permitted on input and ignored; output is written
//! unpadded and is deterministic.

use super::{CodeError, SparseParityCheck};
use std::fmt::Write as _;

/// Parse an alist document into a parity-check matrix.
///
/// Both adjacency blocks are read and cross-checked against each other, so a
/// document whose column block disagrees with its row block is rejected.
pub fn load_alist(text: &str) -> Result<SparseParityCheck, CodeError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let mut next_line = |what: &str| {
        lines
            .next()
            .ok_or_else(|| CodeError::Alist(format!("unexpected end of file, expected {what}")))
    };

    let header = parse_numbers(next_line("header")?, "header")?;
    let [n, m] = header[..] else {
        return Err(CodeError::Alist("header must be `N M`".into()));
    };
    let (n, m) = (n as usize, m as usize);
    if n == 0 || m == 0 {
        return Err(CodeError::Alist("zero dimension in header".into()));
    }
    let maxdeg = parse_numbers(next_line("max degrees")?, "max degrees")?;
    let [max_col, max_row] = maxdeg[..] else {
        return Err(CodeError::Alist("second line must be `max_col max_row`".into()));
    };

    let col_degs = parse_counted(next_line("column degrees")?, n, "column degrees")?;
    let row_degs = parse_counted(next_line("row degrees")?, m, "row degrees")?;
    if col_degs.iter().max().copied().unwrap_or(0) != max_col {
        return Err(CodeError::Alist("stated max column degree does not match degree list".into()));
    }
    if row_degs.iter().max().copied().unwrap_or(0) != max_row {
        return Err(CodeError::Alist("stated max row degree does not match degree list".into()));
    }

    let col_block = parse_adjacency(&mut next_line, n, &col_degs, m, "column")?;
    let row_block = parse_adjacency(&mut next_line, m, &row_degs, n, "row")?;

    let h = SparseParityCheck::from_row_adjacency(n, row_block)?;
    // The column block must describe the same incidence set.
    for (i, mut listed) in col_block.into_iter().enumerate() {
        listed.sort_unstable();
        if h.bits_col(i) != listed.as_slice() {
            return Err(CodeError::Alist(format!(
                "column {} adjacency disagrees with row block",
                i + 1
            )));
        }
    }
    Ok(h)
}

/// Serialize a matrix as canonical alist text.
///
/// Deterministic: repeated calls on the same matrix are byte-identical, and
/// `load_alist(save_alist(h)) == h`.
pub fn save_alist(h: &SparseParityCheck) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", h.n_cols(), h.n_rows());
    let _ = writeln!(out, "{} {}", h.d_v(), h.d_c());
    let col_degs: Vec<String> =
        (0..h.n_cols()).map(|i| h.bits_col(i).len().to_string()).collect();
    let _ = writeln!(out, "{}", col_degs.join(" "));
    let row_degs: Vec<String> =
        (0..h.n_rows()).map(|k| h.checks_row(k).len().to_string()).collect();
    let _ = writeln!(out, "{}", row_degs.join(" "));
    for i in 0..h.n_cols() {
        let entries: Vec<String> =
            h.bits_col(i).iter().map(|&k| (k + 1).to_string()).collect();
        let _ = writeln!(out, "{}", entries.join(" "));
    }
    for k in 0..h.n_rows() {
        let entries: Vec<String> =
            h.checks_row(k).iter().map(|&i| (i + 1).to_string()).collect();
        let _ = writeln!(out, "{}", entries.join(" "));
    }
    out
}

fn parse_numbers(line: &str, what: &str) -> Result<Vec<u32>, CodeError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| CodeError::Alist(format!("bad number `{tok}` in {what}")))
        })
        .collect()
}

fn parse_counted(line: &str, want: usize, what: &str) -> Result<Vec<u32>, CodeError> {
    let v = parse_numbers(line, what)?;
    if v.len() != want {
        return Err(CodeError::Alist(format!("{what}: expected {want} entries, got {}", v.len())));
    }
    Ok(v)
}

/// Read `count` adjacency lines; entry values are 1-based, zero entries are
/// padding and dropped, and each line must carry exactly its stated degree.
fn parse_adjacency<'a>(
    next_line: &mut impl FnMut(&str) -> Result<&'a str, CodeError>,
    count: usize,
    degs: &[u32],
    index_bound: usize,
    what: &str,
) -> Result<Vec<Vec<u32>>, CodeError> {
    let mut block = Vec::with_capacity(count);
    for (idx, &deg) in degs.iter().enumerate().take(count) {
        let line = next_line(&format!("{what} adjacency line {}", idx + 1))?;
        let raw = parse_numbers(line, &format!("{what} adjacency"))?;
        let entries: Vec<u32> = raw.into_iter().filter(|&x| x != 0).collect();
        if entries.len() != deg as usize {
            return Err(CodeError::Alist(format!(
                "{what} {}: degree list says {deg}, line has {} nonzero entries",
                idx + 1,
                entries.len()
            )));
        }
        for &e in &entries {
            if e as usize > index_bound {
                return Err(CodeError::Alist(format!(
                    "{what} {}: index {e} out of range 1..={index_bound}",
                    idx + 1
                )));
            }
        }
        block.push(entries.iter().map(|&e| e - 1).collect());
    }
    Ok(block)
}
