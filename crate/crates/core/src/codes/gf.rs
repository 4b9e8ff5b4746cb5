//! Arithmetic over GF(2^m) via log/antilog tables.
//!
//! The finite-geometry constructions index points of the geometry by powers
//! of a primitive field element, so all they need from the field is fast
//! discrete log, exponentiation, and addition (XOR of polynomial bit
//! patterns).

use super::CodeError;

/// One published primitive polynomial per extension degree, as bit masks
/// including the leading x^m term. Different valid choices yield equivalent
/// codes; these are fixed so constructions are reproducible.
const PRIMITIVE_POLY: [u32; 17] = [
    0,       // m = 0 (unused)
    0b11,    // x + 1
    0b111,   // x^2 + x + 1
    0b1011,  // x^3 + x + 1
    0b10011, // x^4 + x + 1
    0b100101,
    0b1000011,
    0b10001001,
    0b100011101,
    0b1000010001,
    0b10000001001,
    0b100000000101,
    0b1000001010011,
    0b10000000011011,
    0b100010001000011,
    0b1000000000000011,
    0b10001000000001011, // x^16 + x^12 + x^3 + x + 1
];

/// GF(2^m) with log and antilog tables over the 2^m - 1 nonzero elements.
///
/// Elements are represented as polynomial bit patterns in `u32`. The
/// generator is alpha = x (the pattern `0b10`), which is primitive for every
/// polynomial in the shipped table; construction fails if the generator's
/// multiplicative order is not exactly 2^m - 1.
#[derive(Debug, Clone)]
pub struct GaloisField {
    m: u32,
    modulus: u32,
    log: Vec<u32>,
    antilog: Vec<u32>,
}

impl GaloisField {
    /// Build the tables for GF(2^m), 1 <= m <= 16.
    pub fn new(m: u32) -> Result<Self, CodeError> {
        if m == 0 || m as usize >= PRIMITIVE_POLY.len() {
            return Err(CodeError::UnsupportedFieldDegree(m));
        }
        let modulus = PRIMITIVE_POLY[m as usize];
        let order = (1u32 << m) - 1;
        let mut log = vec![u32::MAX; 1 << m];
        let mut antilog = vec![0u32; order as usize];

        let mut value = 1u32;
        for exp in 0..order {
            if log[value as usize] != u32::MAX {
                // Cycle closed early: x is not primitive for this modulus.
                return Err(CodeError::NonPrimitiveGenerator(m));
            }
            antilog[exp as usize] = value;
            log[value as usize] = exp;
            value <<= 1;
            if value & (1 << m) != 0 {
                value ^= modulus;
            }
        }
        if value != 1 {
            return Err(CodeError::NonPrimitiveGenerator(m));
        }
        Ok(Self { m, modulus, log, antilog })
    }

    /// Extension degree m.
    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Size of the multiplicative group, 2^m - 1.
    pub fn order(&self) -> u32 {
        (1u32 << self.m) - 1
    }

    /// The primitive polynomial bits, including the leading term.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// alpha^exp for exp taken mod (2^m - 1).
    pub fn antilog(&self, exp: u32) -> u32 {
        self.antilog[(exp % self.order()) as usize]
    }

    /// Discrete log of a nonzero element.
    ///
    /// # Panics
    ///
    /// Panics on zero or out-of-range input.
    pub fn log(&self, value: u32) -> u32 {
        assert!(value != 0 && value < (1 << self.m), "log of 0 or out-of-range element");
        self.log[value as usize]
    }

    /// Field addition (polynomial XOR).
    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    /// Field multiplication via the tables.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let exp = (self.log(a) as u64 + self.log(b) as u64) % self.order() as u64;
        self.antilog[exp as usize]
    }

    /// The multiplicative subfield GF(2^k)* inside GF(2^m), as field elements,
    /// for k dividing m. These are the powers of alpha^((2^m-1)/(2^k-1)).
    pub fn subfield_nonzero(&self, k: u32) -> Result<Vec<u32>, CodeError> {
        if k == 0 || self.m % k != 0 {
            return Err(CodeError::UnsupportedFieldDegree(k));
        }
        let sub_order = (1u32 << k) - 1;
        let step = self.order() / sub_order;
        Ok((0..sub_order).map(|j| self.antilog(j * step)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_inverse_of_each_other() {
        for m in 1..=12 {
            let gf = GaloisField::new(m).unwrap();
            for x in 1..(1u32 << m) {
                assert_eq!(gf.antilog(gf.log(x)), x, "m={m}, x={x}");
            }
        }
    }

    #[test]
    fn generator_order_is_full() {
        // new() already verifies this; double-check a couple of degrees by
        // walking the powers directly.
        for m in [4, 10, 15] {
            let gf = GaloisField::new(m).unwrap();
            let mut seen = std::collections::HashSet::new();
            for e in 0..gf.order() {
                assert!(seen.insert(gf.antilog(e)));
            }
        }
    }

    #[test]
    fn rejects_unsupported_degrees() {
        assert!(GaloisField::new(0).is_err());
        assert!(GaloisField::new(17).is_err());
    }

    #[test]
    fn multiplication_matches_schoolbook() {
        // Carry-less polynomial multiplication reduced mod the modulus.
        fn slow_mul(a: u32, b: u32, m: u32, modulus: u32) -> u32 {
            let mut acc: u64 = 0;
            for i in 0..32 {
                if b & (1 << i) != 0 {
                    acc ^= (a as u64) << i;
                }
            }
            for bit in (m..64).rev() {
                if acc & (1u64 << bit) != 0 {
                    acc ^= (modulus as u64) << (bit - m);
                }
            }
            acc as u32
        }
        let gf = GaloisField::new(8).unwrap();
        for a in [0u32, 1, 2, 3, 57, 130, 254, 255] {
            for b in [0u32, 1, 2, 90, 171, 255] {
                assert_eq!(gf.mul(a, b), slow_mul(a, b, 8, gf.modulus()));
            }
        }
    }

    #[test]
    fn subfield_has_expected_size_and_closure() {
        let gf = GaloisField::new(10).unwrap();
        let sub = gf.subfield_nonzero(5).unwrap();
        assert_eq!(sub.len(), 31);
        // Closed under multiplication.
        for &a in &sub {
            for &b in &sub {
                assert!(sub.contains(&gf.mul(a, b)));
            }
        }
        assert!(gf.subfield_nonzero(3).is_err());
    }
}
