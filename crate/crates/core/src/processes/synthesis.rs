//! Sample paths from white-noise samples.
//!
//! A path value at `t` is the pairing of the process's test function at `t`
//! with a noise sample. [`synthesize_path_naive`] builds every test function
//! and sums directly, `O(N M)`. [`FftSynthesizer`] splits each coefficient
//! into a `t`-independent weight times `e^{+-i 2 pi n t}` and evaluates the
//! whole grid with one length-`M` DFT, `O(M log M)`.
//!
//! For the bridge, `c_n(t) = (1 - e^{-i 2 pi n t}) / (i 2 pi n)`, so with
//! `w_n = conj(z_n) / (i 2 pi n)` the path is
//! `sum_n w_n - sum_n w_n e^{-i 2 pi n t}`: a forward DFT of `w`.
//! For the Levy process, `h_k(t) = (e^{i 2 pi k t} - 1) / (sqrt 2 pi |k|)`,
//! so with `v_k = conj(z_k) / (sqrt 2 pi |k|)` on odd `k` the path is
//! `sum_k v_k e^{i 2 pi k t} - sum_k v_k`: an inverse DFT of `v`.

use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use super::{GridSpec, ProcessKind};
use crate::error::{Error, Result};
use crate::fourier::eta_weight;
use crate::noise::{pair_unchecked, NoiseSample};

/// Largest tolerated imaginary residue of the DFT output.
pub const IMAG_RESIDUE_TOL: f64 = 1e-10;

/// Direct summation of the pairing at every grid point.
pub fn synthesize_path_naive(kind: ProcessKind, x: &NoiseSample, grid: &GridSpec) -> Result<Vec<f64>> {
    let trunc = x.max_freq();
    grid.points()
        .map(|t| Ok(pair_unchecked(&kind.test_function(t, trunc)?, x)))
        .collect()
}

/// Reusable FFT plans for one grid size.
pub struct FftSynthesizer {
    grid: GridSpec,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl FftSynthesizer {
    pub fn new(grid: GridSpec) -> Self {
        let mut planner = FftPlanner::new();
        FftSynthesizer {
            grid,
            forward: planner.plan_fft_forward(grid.len()),
            inverse: planner.plan_fft_inverse(grid.len()),
        }
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn synthesize(&self, kind: ProcessKind, x: &NoiseSample) -> Result<Vec<f64>> {
        let (path, residue) = self.synthesize_with_residue(kind, x)?;
        debug_assert!(residue <= IMAG_RESIDUE_TOL, "imaginary residue {residue:e}");
        Ok(path)
    }

    /// Path plus the largest `|Im|` of the DFT output, which vanishes up to
    /// rounding because the weight sequence is Hermitian.
    pub fn synthesize_with_residue(&self, kind: ProcessKind, x: &NoiseSample) -> Result<(Vec<f64>, f64)> {
        let m = self.grid.len();
        let trunc = x.max_freq();
        if m < 2 * trunc + 1 {
            return Err(Error::Aliasing { grid: m, trunc });
        }
        let mut buf = vec![Complex64::new(0.0, 0.0); m];
        let mut offset = 0.0;
        for n in 1..=trunc {
            let w = match kind {
                ProcessKind::Bridge => x.coeff(n as i64).conj() / Complex64::new(0.0, TAU * n as f64),
                ProcessKind::Levy if n % 2 == 1 => x.coeff(n as i64).conj() * eta_weight(n as i64),
                ProcessKind::Levy => continue,
            };
            buf[n] = w;
            buf[m - n] = w.conj();
            offset += 2.0 * w.re;
        }
        let sign = match kind {
            ProcessKind::Bridge => {
                self.forward.process(&mut buf);
                -1.0
            }
            ProcessKind::Levy => {
                self.inverse.process(&mut buf);
                offset = -offset;
                1.0
            }
        };
        let residue = buf.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
        let mut path: Vec<f64> = buf.iter().map(|c| offset + sign * c.re).collect();
        // Both test functions vanish identically at t = 0; drop the rounding.
        path[0] = 0.0;
        Ok((path, residue))
    }
}

/// One-shot FFT synthesis; plan once with [`FftSynthesizer`] for ensembles.
pub fn synthesize_path_fft(kind: ProcessKind, x: &NoiseSample, grid: &GridSpec) -> Result<Vec<f64>> {
    FftSynthesizer::new(*grid).synthesize(kind, x)
}
