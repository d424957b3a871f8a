//! Finite-truncation white noise on the circle.
//!
//! A [`NoiseSample`] holds Gaussian Fourier coefficients `z_n` for
//! `0 < |n| <= N`. For `n > 0` the real and imaginary parts are independent
//! `N(0, 1/2)` draws, so `E|z_n|^2 = 1`, and `z_{-n} = conj(z_n)`. There is
//! no `n = 0` coefficient. With this normalization the pairing of a
//! zero-mean test function `f` with a sample has variance `||f||^2`.
//!
//! Random streams come from ChaCha8 keyed by the master seed, with one
//! stream per (domain, replicate). Within a replicate the coefficients are
//! drawn in increasing frequency order, real part first, so a sample at
//! truncation `N` is a prefix of the same replicate at any `N' > N`.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::FourierSeries;

/// Minimum number of replicates for any Monte Carlo estimate.
pub const MIN_REPLICATES: usize = 1000;

/// Independent families of random streams under one master seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamDomain {
    Noise,
    Cholesky,
    /// Random evaluation points for the exact identity checks.
    Identity,
}

impl StreamDomain {
    fn tag(self) -> u64 {
        match self {
            StreamDomain::Noise => 0,
            StreamDomain::Cholesky => 1 << 63,
            StreamDomain::Identity => 1 << 62,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedSpec {
    pub master_seed: u64,
}

impl SeedSpec {
    pub fn new(master_seed: u64) -> Self {
        SeedSpec { master_seed }
    }

    /// Stream for `replicate` within `domain`; replicates must stay below
    /// `2^62`.
    pub fn rng(&self, domain: StreamDomain, replicate: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        rng.set_stream(domain.tag() | replicate);
        rng
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NoiseSample {
    /// `z_1..=z_N`; negative frequencies are conjugates.
    positive: Vec<Complex64>,
    seed: Option<(SeedSpec, u64)>,
}

impl NoiseSample {
    /// Wraps explicit coefficients `z_1..=z_N`.
    pub fn from_positive(positive: Vec<Complex64>) -> Result<Self> {
        if positive.is_empty() {
            return Err(Error::InvalidArgument("noise truncation must be at least 1".into()));
        }
        if let Some(k) = positive.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite { freq: k as i64 + 1 });
        }
        Ok(NoiseSample { positive, seed: None })
    }

    pub fn max_freq(&self) -> usize {
        self.positive.len()
    }

    /// `z_n`; zero for `n = 0` and beyond the truncation.
    pub fn coeff(&self, n: i64) -> Complex64 {
        match n {
            0 => Complex64::new(0.0, 0.0),
            _ if n.unsigned_abs() as usize > self.positive.len() => Complex64::new(0.0, 0.0),
            n if n > 0 => self.positive[n as usize - 1],
            n => self.positive[(-n) as usize - 1].conj(),
        }
    }

    pub fn positive(&self) -> &[Complex64] {
        &self.positive
    }

    /// Master seed and replicate index this sample was drawn from.
    pub fn seed_info(&self) -> Option<(SeedSpec, u64)> {
        self.seed
    }
}

/// Draws replicate `replicate` of the truncated white noise.
pub fn sample_noise(trunc: usize, seed: SeedSpec, replicate: u64) -> Result<NoiseSample> {
    if trunc == 0 {
        return Err(Error::InvalidArgument("noise truncation must be at least 1".into()));
    }
    let mut rng = seed.rng(StreamDomain::Noise, replicate);
    let positive = (0..trunc)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im) * FRAC_1_SQRT_2
        })
        .collect();
    Ok(NoiseSample {
        positive,
        seed: Some((seed, replicate)),
    })
}

/// Maps every replicate `0..reps` through `f`, in parallel, returning the
/// results in replicate order.
pub fn map_replicates<T, F>(trunc: usize, seed: SeedSpec, reps: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&NoiseSample) -> T + Sync,
{
    (0..reps as u64)
        .into_par_iter()
        .map(|r| sample_noise(trunc, seed, r).map(|x| f(&x)))
        .collect()
}

/// The dual pairing `f(x) = sum_{0 < |n| <= min(N_f, N_x)} c_n(f) conj(z_n)`.
///
/// Both arguments are Hermitian, so the sum is real; it is evaluated as
/// twice the real part of the positive-frequency half.
pub fn pair(f: &FourierSeries, x: &NoiseSample) -> Result<f64> {
    f.require_zero_mean()?;
    if !f.is_real_valued() {
        return Err(Error::InvalidArgument(
            "pairing requires a real-valued test function".into(),
        ));
    }
    Ok(pair_unchecked(f, x))
}

#[inline]
pub(crate) fn pair_unchecked(f: &FourierSeries, x: &NoiseSample) -> f64 {
    let acc: f64 = f
        .positive()
        .iter()
        .zip(&x.positive)
        .map(|(c, z)| c.re * z.re + c.im * z.im)
        .sum();
    2.0 * acc
}

/// `sum_{n != 0} |z_n|^2 / n^2`.
pub fn noise_hminus1_norm_sq(x: &NoiseSample) -> f64 {
    let acc: f64 = x
        .positive
        .iter()
        .enumerate()
        .rev()
        .map(|(k, z)| z.norm_sqr() / ((k + 1) as f64).powi(2))
        .sum();
    2.0 * acc
}

/// Monte Carlo estimate of the characteristic functional
/// `E exp(i f(x))` over replicates `0..reps`.
pub fn empirical_char_functional(f: &FourierSeries, trunc: usize, reps: usize, seed: SeedSpec) -> Result<Complex64> {
    f.require_zero_mean()?;
    if reps < MIN_REPLICATES {
        return Err(Error::TooFewReplicates {
            got: reps,
            min: MIN_REPLICATES,
        });
    }
    let values = map_replicates(trunc, seed, reps, |x| pair(f, x))?;
    let mut acc = Complex64::new(0.0, 0.0);
    for v in values {
        acc += Complex64::from_polar(1.0, v?);
    }
    Ok(acc / reps as f64)
}
