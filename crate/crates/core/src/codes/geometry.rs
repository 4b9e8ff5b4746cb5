//! Cyclic parity-check matrices from two-dimensional finite geometries.
//!
//! Both constructions take the incidence vector of a single line and expand
//! it into an N x N circulant: indexing points by powers of a primitive
//! field element, multiplying a line by that element is a cyclic shift of
//! its incidence vector, and the orbit sweeps out every line of interest.
//!
//! - Euclidean EG(2, 2^s): points are the nonzero elements of GF(2^{2s}),
//!   the base line is one line not through the origin, and the orbit gives
//!   all N = 2^{2s} - 1 such lines. Row and column weight 2^s.
//! - Projective PG(2, 2^s): points are the Singer classes of GF(2^{3s})*,
//!   the base line's exponent set is a planar perfect difference set of
//!   size 2^s + 1 modulo N = 2^{2s} + 2^s + 1.

use super::{CodeError, GaloisField, SparseParityCheck};

/// Type-I two-dimensional Euclidean-geometry LDPC matrix.
///
/// For geometry order s in 2..=6 this yields N = M = 2^{2s} - 1 with row and
/// column weight 2^s; s = 5 gives the (1023,781) code.
pub fn build_eg_type1(s: u32) -> Result<SparseParityCheck, CodeError> {
    if !(2..=6).contains(&s) {
        return Err(CodeError::GeometryOrder(s, 2, 6));
    }
    let gf = GaloisField::new(2 * s)?;
    let n = gf.order() as usize; // 2^{2s} - 1
    let alpha = gf.antilog(1);

    // Base line {alpha + t : t in GF(2^s)}: a line of EG(2, 2^s) avoiding the
    // origin, since alpha lies outside the subfield.
    let mut subfield = gf.subfield_nonzero(s)?;
    subfield.push(0);
    let base: Vec<u32> = subfield.iter().map(|&t| gf.log(gf.add(alpha, t))).collect();

    // At most one common point between two lines translates to: every
    // nonzero exponent difference arises at most once within the base set.
    verify_difference_coverage(&base, n as u32, false)?;

    circulant(n, &base)
}

/// Type-I two-dimensional projective-geometry LDPC matrix.
///
/// For geometry order s in 2..=5 this yields N = M = 2^{2s} + 2^s + 1 with
/// row and column weight 2^s + 1; s = 4 gives the (273,191) code.
pub fn build_pg_type1(s: u32) -> Result<SparseParityCheck, CodeError> {
    if !(2..=5).contains(&s) {
        return Err(CodeError::GeometryOrder(s, 2, 5));
    }
    let gf = GaloisField::new(3 * s)?;
    let n = ((1usize << (2 * s)) + (1 << s) + 1) as u32; // (2^{3s}-1)/(2^s-1)
    let beta = gf.antilog(1);

    // Points of PG(2, 2^s) are GF(2^{3s})* modulo GF(2^s)* scalars; the class
    // of beta^e is e mod N. The line through the points of 1 and beta is
    // {1} union {beta + t : t in GF(2^s)}.
    let mut subfield = gf.subfield_nonzero(s)?;
    subfield.push(0);
    let mut base: Vec<u32> = vec![0];
    base.extend(subfield.iter().map(|&t| gf.log(gf.add(beta, t)) % n));

    // A line of a projective plane is a planar perfect difference set:
    // every nonzero residue mod N appears exactly once as a difference.
    verify_difference_coverage(&base, n, true)?;

    circulant(n as usize, &base)
}

/// Expand a base exponent set into the N x N circulant whose k-th row is the
/// set shifted by k (mod N).
fn circulant(n: usize, base: &[u32]) -> Result<SparseParityCheck, CodeError> {
    let rows = (0..n as u32)
        .map(|k| base.iter().map(|&d| (d + k) % n as u32).collect())
        .collect();
    let h = SparseParityCheck::from_row_adjacency(n, rows)?;
    if !h.is_regular() || h.d_c() != base.len() {
        return Err(CodeError::Inconsistent(format!(
            "circulant expansion is not regular of weight {}",
            base.len()
        )));
    }
    Ok(h)
}

/// Count how often each nonzero residue occurs as a difference of two
/// distinct base elements mod n. `exact` demands exactly-once coverage
/// (perfect difference set); otherwise at-most-once.
fn verify_difference_coverage(base: &[u32], n: u32, exact: bool) -> Result<(), CodeError> {
    let mut count = vec![0u32; n as usize];
    for &a in base {
        for &b in base {
            if a != b {
                count[((n + a - b) % n) as usize] += 1;
            }
        }
    }
    for (residue, &c) in count.iter().enumerate().skip(1) {
        if c > 1 || (exact && c != 1) {
            return Err(CodeError::DifferenceSet(residue as u32, c));
        }
    }
    Ok(())
}
