//! BPSK over AWGN with reproducible randomness.
//!
//! Codeword bits map to symbols via x = 1 - 2c, noise is i.i.d. Gaussian
//! from a seeded generator, and each received frame carries the channel
//! output, its hard decision, and the initial LLRs F = 2y/sigma^2 used by
//! the soft decoders. Bit-flipping decoders read |y| directly; the two
//! differ only by a positive scale.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};
use thiserror::Error;

/// Channel parameter errors.
#[derive(Debug, Error, PartialEq)]
pub enum ChannelError {
    #[error("code rate must lie in (0,1), got {0}")]
    InvalidRate(f64),
    #[error("noise standard deviation must be positive, got {0}")]
    InvalidSigma(f64),
}

/// One received frame: channel output, noise level, hard decision, LLRs.
#[derive(Debug, Clone)]
pub struct ReceivedFrame {
    /// Channel output y = x + z.
    pub y: Vec<f64>,
    /// Noise standard deviation used to produce (or interpret) `y`.
    pub sigma: f64,
    /// Hard decision: 0 where y >= 0, 1 otherwise.
    pub hard: Vec<u8>,
    /// Initial LLRs F = 2y/sigma^2 (same sign as y).
    pub llr: Vec<f64>,
}

impl ReceivedFrame {
    /// Derive hard decisions and LLRs from raw channel output.
    pub fn from_channel_output(y: Vec<f64>, sigma: f64) -> Result<Self, ChannelError> {
        if !(sigma > 0.0) {
            return Err(ChannelError::InvalidSigma(sigma));
        }
        let hard = y.iter().map(|&v| u8::from(v < 0.0)).collect();
        let scale = 2.0 / (sigma * sigma);
        let llr = y.iter().map(|&v| scale * v).collect();
        Ok(Self { y, sigma, hard, llr })
    }

    /// Block length.
    pub fn len(&self) -> usize {
        self.y.len()
    }

    /// True for a zero-length frame.
    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }
}

/// Convert Eb/N0 in dB to the AWGN noise standard deviation for unit-energy
/// BPSK at the given code rate: sigma = sqrt(1 / (2 R 10^(dB/10))).
pub fn snr_db_to_sigma(ebn0_db: f64, rate: f64) -> Result<f64, ChannelError> {
    if !(rate > 0.0 && rate < 1.0) {
        return Err(ChannelError::InvalidRate(rate));
    }
    Ok((1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0))).sqrt())
}

/// Inverse of [`snr_db_to_sigma`].
pub fn sigma_to_snr_db(sigma: f64, rate: f64) -> Result<f64, ChannelError> {
    if !(rate > 0.0 && rate < 1.0) {
        return Err(ChannelError::InvalidRate(rate));
    }
    if !(sigma > 0.0) {
        return Err(ChannelError::InvalidSigma(sigma));
    }
    Ok(10.0 * (1.0 / (2.0 * rate * sigma * sigma)).log10())
}

/// Map codeword bits to BPSK symbols: x = 1 - 2c, so bit 0 becomes +1.
pub fn bpsk_modulate(c: &[u8]) -> Vec<f64> {
    c.iter().map(|&b| 1.0 - 2.0 * f64::from(b & 1)).collect()
}

/// Transmit symbols over AWGN: y = x + z with z ~ N(0, sigma^2) drawn from a
/// generator seeded by `seed`. Deterministic for a fixed seed.
pub fn transmit(x: &[f64], sigma: f64, seed: u64) -> Result<ReceivedFrame, ChannelError> {
    if !(sigma > 0.0) {
        return Err(ChannelError::InvalidSigma(sigma));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let y = x
        .iter()
        .map(|&xi| {
            let z: f64 = StandardNormal.sample(&mut rng);
            xi + sigma * z
        })
        .collect();
    ReceivedFrame::from_channel_output(y, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_for_published_operating_points() {
        let s = snr_db_to_sigma(3.42, 191.0 / 273.0).unwrap();
        assert!((s - 0.570).abs() < 1e-3, "got {s}");
        let s = snr_db_to_sigma(3.28, 781.0 / 1023.0).unwrap();
        assert!((s - 0.555).abs() < 1e-3, "got {s}");
        let s = snr_db_to_sigma(0.0, 0.5).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn conversion_round_trip() {
        for db in [-2.0, 0.0, 1.7, 3.42, 6.0] {
            for rate in [0.3, 0.5, 191.0 / 273.0, 781.0 / 1023.0] {
                let sigma = snr_db_to_sigma(db, rate).unwrap();
                let back = sigma_to_snr_db(sigma, rate).unwrap();
                assert!((back - db).abs() <= 1e-12 * db.abs().max(1.0));
            }
        }
    }

    #[test]
    fn invalid_rate_rejected() {
        assert!(snr_db_to_sigma(1.0, 0.0).is_err());
        assert!(snr_db_to_sigma(1.0, 1.0).is_err());
        assert!(sigma_to_snr_db(0.5, -0.2).is_err());
    }

    #[test]
    fn bpsk_mapping() {
        assert_eq!(bpsk_modulate(&[0, 0, 0]), vec![1.0, 1.0, 1.0]);
        assert_eq!(bpsk_modulate(&[0, 1, 0]), vec![1.0, -1.0, 1.0]);
    }

    #[test]
    fn noiseless_limit_recovers_codeword() {
        let c = vec![0u8, 1, 1, 0, 1];
        let x = bpsk_modulate(&c);
        let frame = transmit(&x, 1e-9, 42).unwrap();
        assert_eq!(frame.hard, c);
    }

    #[test]
    fn fixed_seed_is_deterministic() {
        let x = vec![1.0; 64];
        let a = transmit(&x, 0.7, 1234).unwrap();
        let b = transmit(&x, 0.7, 1234).unwrap();
        assert_eq!(a.y, b.y);
        let c = transmit(&x, 0.7, 1235).unwrap();
        assert_ne!(a.y, c.y);
    }

    #[test]
    fn llr_sign_and_scale() {
        let frame = ReceivedFrame::from_channel_output(vec![0.8, -0.3, 0.0], 0.5).unwrap();
        assert_eq!(frame.hard, vec![0, 1, 0]);
        for (l, y) in frame.llr.iter().zip(&frame.y) {
            assert!((l - 2.0 * y / 0.25).abs() < 1e-15);
            assert!(l * y >= 0.0);
        }
    }

    #[test]
    fn noise_moments_match_law_of_large_numbers() {
        let n = 1_000_000;
        let x = vec![1.0; n];
        let sigma = 0.5;
        let frame = transmit(&x, sigma, 77).unwrap();
        let mean: f64 = frame.y.iter().map(|y| y - 1.0).sum::<f64>() / n as f64;
        let var: f64 = frame.y.iter().map(|y| (y - 1.0 - mean).powi(2)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.002, "noise mean {mean}");
        assert!((var - 0.25).abs() < 0.0025, "noise variance {var}");
    }

    #[test]
    fn raw_bit_error_rate_matches_gaussian_tail() {
        // Empirical BER of the hard decision vs Q(1/sigma) within 3 standard
        // errors over 10^6 bits; Q from the erfc oracle.
        let n = 1_000_000;
        let sigma = 0.8;
        let x = vec![1.0; n];
        let frame = transmit(&x, sigma, 2024).unwrap();
        let errs = frame.hard.iter().filter(|&&b| b == 1).count();
        let p_hat = errs as f64 / n as f64;
        let q = 0.5 * statrs::function::erf::erfc(1.0 / sigma / std::f64::consts::SQRT_2);
        let se = (q * (1.0 - q) / n as f64).sqrt();
        assert!(
            (p_hat - q).abs() < 3.0 * se,
            "p_hat={p_hat}, Q={q}, 3se={}",
            3.0 * se
        );
    }
}
