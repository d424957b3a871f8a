//! Small sample statistics used by the Monte Carlo checks.

use statrs::distribution::{ContinuousCDF, Normal};

/// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of
/// `sample` and the standard normal CDF.
pub fn ks_statistic_normal(sample: &[f64]) -> f64 {
    let normal = Normal::standard();
    let mut sorted = sample.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = normal.cdf(x);
            (f - i as f64 / n).max((i + 1) as f64 / n - f)
        })
        .fold(0.0, f64::max)
}

/// Asymptotic Kolmogorov critical value at `alpha = 0.01`.
pub fn ks_critical_001(n: usize) -> f64 {
    1.63 / (n as f64).sqrt()
}

/// `(1/R) sum a_r b_r`; the pairings have known mean zero.
pub fn second_moment(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>() / a.len() as f64
}

/// Correlation about the known zero mean.
pub fn zero_mean_correlation(a: &[f64], b: &[f64]) -> f64 {
    second_moment(a, b) / (second_moment(a, a) * second_moment(b, b)).sqrt()
}

/// Standard error of `(1/R) sum X Y` for a zero-mean Gaussian pair with
/// covariance entries `kss`, `ktt`, `kst`.
pub fn product_moment_se(kss: f64, ktt: f64, kst: f64, reps: usize) -> f64 {
    ((kss * ktt + kst * kst) / reps as f64).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn ks_of_single_point() {
        // F(0) = 1/2, so the distance is 1/2 on either side of the jump.
        assert_abs_diff_eq!(ks_statistic_normal(&[0.0]), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn ks_of_quantile_grid_is_small() {
        let n = 1000;
        let normal = Normal::standard();
        let sample: Vec<f64> = (0..n)
            .map(|i| normal.inverse_cdf((i as f64 + 0.5) / n as f64))
            .collect();
        let d = ks_statistic_normal(&sample);
        assert_abs_diff_eq!(d, 0.5 / n as f64, epsilon = 1e-9);
    }

    #[test]
    fn ks_detects_shift() {
        let normal = Normal::standard();
        let sample: Vec<f64> = (0..1000)
            .map(|i| normal.inverse_cdf((i as f64 + 0.5) / 1000.0) + 0.5)
            .collect();
        assert!(ks_statistic_normal(&sample) > ks_critical_001(1000));
    }

    #[test]
    fn correlation_of_identical_samples_is_one() {
        let a = [1.0, -2.0, 0.5];
        assert_abs_diff_eq!(zero_mean_correlation(&a, &a), 1.0, epsilon = 1e-15);
    }
}
