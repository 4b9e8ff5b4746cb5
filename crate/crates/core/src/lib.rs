//! Decoder workbench for finite-geometry LDPC codes.
//!
//! Finite-geometry LDPC codes are regular cyclic codes with heavy row and
//! column weights, which makes even Min-Sum decoding expensive. This crate
//! implements the two decoder families used to study that trade-off, plus
//! their concatenation:
//!
//! - **Bit-flipping (BF) decoders** ([`bf`]): serial and multi-bit weighted
//!   bit-flipping variants driven by hard decisions and channel magnitudes.
//! - **Min-Sum (MS) decoders** ([`ms`]): standard BP, normalized Min-Sum,
//!   offset Min-Sum, and the normalized APP-based variant over a flooding
//!   schedule.
//! - **Hybrid decoding** ([`hybrid`]): a BF stage that bears most of the
//!   decoding load, with an MS stage invoked only when the BF stage fails.
//!
//! Supporting machinery: cyclic parity-check matrix construction from
//! two-dimensional Euclidean and projective geometries plus alist import
//! ([`codes`]), a BPSK/AWGN channel with reproducible randomness
//! ([`channel`]), measured and analytic complexity accounting
//! ([`complexity`]), differential-evolution parameter tuning ([`tuning`]),
//! and a Monte Carlo sweep engine emitting CSV ([`sim`]).

pub mod bf;
pub mod channel;
pub mod codes;
pub mod complexity;
pub mod hybrid;
pub mod ms;
pub mod sim;
pub mod tuning;

pub use codes::SparseParityCheck;
pub use channel::ReceivedFrame;
