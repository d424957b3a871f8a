//! Dense Gram-matrix sampler, used as a truncation-free oracle for the
//! spectral synthesizers.

use nalgebra::{Cholesky, DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use super::kernel::{gram_matrix, symmetric_eigenvalues, Kernel, MAX_DENSE_POINTS};
use super::GridSpec;
use crate::error::{Error, Result};
use crate::noise::{SeedSpec, StreamDomain};

/// First relative jitter tried, as a fraction of the largest diagonal entry.
pub const JITTER_START: f64 = 1e-12;
/// Last relative jitter tried before giving up.
pub const JITTER_MAX: f64 = 1e-6;

/// Lower-triangular factor of `G + jitter * I`.
#[derive(Debug, Clone)]
pub struct CholeskySampler {
    kernel: Kernel,
    points: Vec<f64>,
    factor: DMatrix<f64>,
    jitter: f64,
}

impl CholeskySampler {
    pub fn new(kernel: Kernel, points: &[f64]) -> Result<Self> {
        if points.len() > MAX_DENSE_POINTS {
            return Err(Error::InvalidArgument(format!(
                "{} points exceed the dense limit of {MAX_DENSE_POINTS}",
                points.len()
            )));
        }
        let gram = gram_matrix(&kernel, points)?;
        let (factor, jitter) = factor_with_jitter(gram)?;
        Ok(CholeskySampler {
            kernel,
            points: points.to_vec(),
            factor,
            jitter,
        })
    }

    pub fn for_grid(kernel: Kernel, grid: &GridSpec) -> Result<Self> {
        let points: Vec<f64> = grid.points().collect();
        Self::new(kernel, &points)
    }

    pub fn kernel(&self) -> Kernel {
        self.kernel
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Absolute diagonal jitter that made the factorization succeed.
    pub fn jitter(&self) -> f64 {
        self.jitter
    }

    pub fn sample(&self, seed: SeedSpec, replicate: u64) -> Vec<f64> {
        let mut rng = seed.rng(StreamDomain::Cholesky, replicate);
        let z = DVector::from_fn(self.points.len(), |_, _| rng.sample::<f64, _>(StandardNormal));
        (&self.factor * z).iter().copied().collect()
    }
}

/// Cholesky factor of `gram + jitter * I`, escalating the relative jitter
/// by factors of ten from [`JITTER_START`] to [`JITTER_MAX`].
pub fn factor_with_jitter(gram: DMatrix<f64>) -> Result<(DMatrix<f64>, f64)> {
    let m = gram.nrows();
    let max_diag = gram.diagonal().iter().copied().fold(0.0, f64::max);
    if max_diag == 0.0 && gram.iter().all(|&v| v == 0.0) {
        // every point pinned: the zero process
        return Ok((DMatrix::zeros(m, m), 0.0));
    }
    let mut rel = JITTER_START;
    loop {
        let jitter = rel * max_diag;
        let shifted = &gram + DMatrix::identity(m, m) * jitter;
        if let Some(chol) = Cholesky::new(shifted) {
            return Ok((chol.unpack(), jitter));
        }
        rel *= 10.0;
        if rel > JITTER_MAX * (1.0 + 1e-9) {
            let min_eigenvalue = symmetric_eigenvalues(gram)[0];
            return Err(Error::Factorization { jitter, min_eigenvalue });
        }
    }
}

/// Draws one path with covariance `K` on the grid.
pub fn cholesky_sample(kernel: Kernel, grid: &GridSpec, seed: SeedSpec, replicate: u64) -> Result<Vec<f64>> {
    Ok(CholeskySampler::for_grid(kernel, grid)?.sample(seed, replicate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rayon::prelude::*;

    #[test]
    fn bridge_is_pinned_at_zero() {
        let grid = GridSpec::new(64).unwrap();
        for r in 0..20 {
            let path = cholesky_sample(Kernel::Bridge, &grid, SeedSpec::new(3), r).unwrap();
            assert_abs_diff_eq!(path[0], 0.0, epsilon = 1e-6);
        }
    }

    #[test]
    fn levy_antipodal_sums_are_constant() {
        let grid = GridSpec::new(32).unwrap();
        let sampler = CholeskySampler::for_grid(Kernel::levy(), &grid).unwrap();
        assert!(sampler.jitter() > 0.0);
        for r in 0..10 {
            let path = sampler.sample(SeedSpec::new(9), r);
            let sums: Vec<f64> = (0..16).map(|j| path[j] + path[j + 16]).collect();
            for s in &sums {
                assert_abs_diff_eq!(*s, sums[0], epsilon = 1e-5);
            }
        }
    }

    #[test]
    fn bridge_covariance_matches_kernel() {
        let r = 20_000;
        let points = [0.25, 0.5];
        let sampler = CholeskySampler::new(Kernel::Bridge, &points).unwrap();
        let cov = (0..r as u64)
            .into_par_iter()
            .map(|rep| {
                let p = sampler.sample(SeedSpec::new(42), rep);
                p[0] * p[1]
            })
            .collect::<Vec<_>>()
            .iter()
            .sum::<f64>()
            / r as f64;
        let (kss, ktt, kst) = (0.1875, 0.25, 0.125);
        let se = ((kss * ktt + kst * kst) / r as f64).sqrt();
        assert_abs_diff_eq!(cov, 0.125, epsilon = 4.0 * se);
    }

    #[test]
    fn indefinite_input_reports_negative_eigenvalue() {
        let gram = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        match factor_with_jitter(gram) {
            Err(Error::Factorization { min_eigenvalue, .. }) => {
                assert_abs_diff_eq!(min_eigenvalue, -1.0, epsilon = 1e-12)
            }
            other => panic!("expected factorization failure, got {other:?}"),
        }
    }

    #[test]
    fn levy_gram_needs_only_the_first_jitter() {
        let grid = GridSpec::new(16).unwrap();
        let gram = gram_matrix(&Kernel::levy(), &grid.points().collect::<Vec<_>>()).unwrap();
        let (_, jitter) = factor_with_jitter(gram).unwrap();
        assert_abs_diff_eq!(jitter, JITTER_START * 0.5, epsilon = 1e-20);
    }

    #[test]
    fn all_pinned_points_give_zero_paths() {
        let sampler = CholeskySampler::new(Kernel::Bridge, &[0.0]).unwrap();
        assert_eq!(sampler.sample(SeedSpec::new(1), 0), vec![0.0]);
    }
}
